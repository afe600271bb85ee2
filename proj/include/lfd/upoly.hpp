#ifndef LFD_UPOLY_HPP
#define LFD_UPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfd/error.hpp"
#include "lfd/qmatrix.hpp"
#include "lfd/rational.hpp"

namespace lfd {

/// Univariate polynomial over Q in a formal variable s; coeffs[k] multiplies s^k.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly constant(const Rational& c) { return QPoly({c}); }
  static QPoly s() { return QPoly({Rational(0), Rational(1)}); }
  /// s - r
  static QPoly linear_factor(const Rational& r) { return QPoly({-r, Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return QPoly(std::move(r));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
    return QPoly(std::move(r));
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
  }
  friend QPoly operator*(const Rational& x, QPoly p) {
    for (auto& v : p.c_) v *= x;
    p.trim();
    return p;
  }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// p(a*s + b)
  QPoly compose_affine(const Rational& a, const Rational& b) const {
    QPoly result;
    const QPoly inner({b, a});
    for (std::size_t k = c_.size(); k-- > 0;) result = result * inner + constant(c_[k]);
    return result;
  }

  QPoly monic() const {
    if (is_zero()) return {};
    return (Rational(1) / leading()) * (*this);
  }

  /// Quotient by (s - r); the remainder must be zero.
  QPoly deflate(const Rational& r) const {
    if (degree() < 1) throw Error(ErrorCode::InvalidInput, "exactalg", "cannot deflate a constant");
    std::vector<Rational> q(c_.size() - 1);
    Rational carry = 0;
    for (std::size_t k = c_.size(); k-- > 1;) {
      carry = carry * r + c_[k];
      q[k - 1] = carry;
    }
    if (carry * r + c_[0] != 0) throw Error(ErrorCode::InvalidInput, "exactalg", "deflation by a non-root");
    return QPoly(std::move(q));
  }

  std::string to_string(const std::string& var = "s") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& v = c_[k];
      if (v == 0) continue;
      const Rational mag = abs(v);
      if (first) {
        if (v < 0) out += '-';
      } else {
        out += v < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      if (mono.empty()) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.get_str() + "*" + mono;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// det(sI - A), monic (Faddeev-LeVerrier, exact over Q).
inline QPoly char_poly(const QMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "exactalg", "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const Rational tr = (a * m).trace();
    c[n - k] = -tr / static_cast<long>(k);
  }
  return QPoly(std::move(c));
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<std::pair<Integer, unsigned>> factors;
  Integer p = 2;
  while (p * p <= v) {
    unsigned e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
    p += (p == 2) ? 1 : 2;
  }
  if (v > 1) factors.emplace_back(v, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [q, e] : factors) {
    const std::size_t count = divs.size();
    Integer power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= q;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

struct FactoredRoots {
  std::vector<std::pair<Rational, unsigned>> roots;  // ascending by root
  QPoly remainder;                                   // monic cofactor without rational roots
};

/// Rational roots with multiplicity: scale to integer coefficients and test
/// p/q with p | trailing coefficient and q | leading coefficient.
inline FactoredRoots rational_roots(const QPoly& poly) {
  if (poly.is_zero()) throw Error(ErrorCode::InvalidInput, "exactalg", "roots of the zero polynomial");
  FactoredRoots out;
  QPoly p = poly.monic();
  std::map<Rational, unsigned> found;
  while (p.degree() >= 1 && p.coeff(0) == 0) {
    p = p.deflate(0);
    ++found[Rational(0)];
  }
  bool progress = true;
  while (p.degree() >= 1 && progress) {
    progress = false;
    Integer lcm = 1;
    for (const auto& v : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    const Integer lead = Integer(p.leading() * lcm);
    const Integer trail = Integer(p.coeff(0) * lcm);
    const auto nums = detail::positive_divisors(trail);
    const auto dens = detail::positive_divisors(lead);
    std::vector<Rational> candidates;
    for (const auto& q : dens) {
      for (const auto& a : nums) {
        Rational r(a, q);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      if (p(r) == 0) {
        p = p.deflate(r);
        ++found[r];
        progress = true;
        break;
      }
    }
  }
  for (const auto& [r, m] : found) out.roots.emplace_back(r, m);
  out.remainder = p;
  return out;
}

/// Monic polynomial with all roots rational, kept together with its
/// factorization.
struct BPoly {
  QPoly poly;
  std::vector<std::pair<Rational, unsigned>> factors;  // (root, multiplicity), ascending

  static BPoly from_poly(const QPoly& p, const std::string& module = "exactalg") {
    FactoredRoots fr = rational_roots(p);
    if (fr.remainder.degree() > 0) {
      throw Error(ErrorCode::NonRationalSpectrum, module,
                  "polynomial " + p.to_string() + " does not split over the rationals");
    }
    return {p.monic(), std::move(fr.roots)};
  }

  static BPoly from_roots(std::vector<std::pair<Rational, unsigned>> roots) {
    std::sort(roots.begin(), roots.end());
    QPoly p = QPoly::constant(1);
    for (const auto& [r, m] : roots) {
      for (unsigned i = 0; i < m; ++i) p = p * QPoly::linear_factor(r);
    }
    return {p, std::move(roots)};
  }

  std::vector<Rational> root_multiset() const {
    std::vector<Rational> out;
    for (const auto& [r, m] : factors) out.insert(out.end(), m, r);
    return out;
  }

  /// e.g. "(s + 4/3)*(s + 1)^4*(s + 2/3)" in ascending root order.
  std::string factored_string(const std::string& var = "s") const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& [r, m] : factors) {
      if (!out.empty()) out += '*';
      std::string f = r == 0 ? var : var + (r < 0 ? " + " : " - ") + Rational(abs(r)).get_str();
      out += r == 0 ? f : "(" + f + ")";
      if (m > 1) out += "^" + std::to_string(m);
    }
    return out;
  }

  friend bool operator==(const BPoly& a, const BPoly& b) { return a.poly == b.poly; }
};

}  // namespace lfd

#endif  // LFD_UPOLY_HPP
