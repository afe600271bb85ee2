#ifndef LFD_MPOLY_HPP
#define LFD_MPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lfd/error.hpp"
#include "lfd/rational.hpp"

namespace lfd {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically in the declared variable order.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : e) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// All exponent vectors of total degree d in `nvars` variables, in graded
/// lexicographic order (x1^d first).
inline std::vector<Exponents> monomial_basis(std::size_t nvars, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents cur(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// canonical form: graded-lex ordered, no zero coefficients.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
    return p;
  }

  static MPoly variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e), 1);
  }

  static MPoly monomial(Exponents e, const Rational& c) {
    MPoly p(e.size());
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
  }

  /// Linear form sum_i coeffs[i] * x_i.
  static MPoly linear_form(std::span<const Rational> coeffs) {
    MPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) p.add_term(unit_exponents(coeffs.size(), i), coeffs[i]);
    }
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    check_exponents(e);
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MPoly& operator-=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  MPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  friend MPoly operator-(MPoly a) { return a *= Rational(-1); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return MPoly(a.nvars_);
    std::unordered_map<Exponents, Rational, ExponentsHash> acc;
    acc.reserve(a.size() * b.size());
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        auto [it, inserted] = acc.try_emplace(e, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    }
    MPoly out(a.nvars_);
    for (auto& [ex, c] : acc) {
      if (c != 0) out.terms_.emplace(ex, std::move(c));
    }
    return out;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MPoly pow(unsigned k) const {
    MPoly result = constant(nvars_, 1);
    MPoly base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  MPoly derivative(std::size_t i) const {
    if (i >= nvars_) {
      throw Error(ErrorCode::MismatchedVariables, "exactalg", "derivative index out of range");
    }
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents d = e;
      d[i] -= 1;
      out.terms_.emplace(std::move(d), c * e[i]);
    }
    return out;
  }

  /// Degree -> homogeneous part.
  std::map<int, MPoly> homogeneous_components() const {
    std::map<int, MPoly> out;
    for (const auto& [e, c] : terms_) {
      auto [it, inserted] = out.try_emplace(total_degree(e), nvars_);
      it->second.terms_.emplace(e, c);
    }
    return out;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) {
      throw Error(ErrorCode::MismatchedVariables, "exactalg", "evaluation point has wrong length");
    }
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] != 0) term *= lfd::pow(point[i], static_cast<unsigned>(e[i]));
      }
      sum += term;
    }
    return sum;
  }

  /// Substitutes images[i] for x_i. All images must share one variable count.
  MPoly compose(std::span<const MPoly> images) const {
    if (images.size() != nvars_) {
      throw Error(ErrorCode::MismatchedVariables, "exactalg", "compose needs one image per variable");
    }
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    std::vector<std::vector<MPoly>> powers(nvars_);
    MPoly out(target);
    for (const auto& [e, c] : terms_) {
      MPoly term = constant(target, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(target, 1));
        while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * images[i]);
        term = term * cache[e[i]];
      }
      out += term;
    }
    return out;
  }

  /// Re-embeds into `new_nvars` variables; variable i goes to slot map[i].
  MPoly remap(std::size_t new_nvars, std::span<const std::size_t> map) const {
    MPoly out(new_nvars);
    for (const auto& [e, c] : terms_) {
      Exponents ne(new_nvars, 0);
      for (std::size_t i = 0; i < nvars_; ++i) ne.at(map[i]) += e[i];
      out.add_term(ne, c);
    }
    return out;
  }

  static Exponents unit_exponents(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e[i] = 1;
    return e;
  }

 private:
  void check_compatible(const MPoly& o) const {
    if (o.nvars_ != nvars_) {
      throw Error(ErrorCode::MismatchedVariables, "exactalg",
                  "mismatched variable counts " + std::to_string(nvars_) + " and " +
                      std::to_string(o.nvars_));
    }
  }
  void check_exponents(const Exponents& e) const {
    if (e.size() != nvars_) {
      throw Error(ErrorCode::MismatchedVariables, "exactalg", "exponent vector has wrong length");
    }
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

}  // namespace lfd

#endif  // LFD_MPOLY_HPP
