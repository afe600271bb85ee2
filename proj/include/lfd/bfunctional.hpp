#ifndef LFD_BFUNCTIONAL_HPP
#define LFD_BFUNCTIONAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <future>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lfd/error.hpp"
#include "lfd/mpoly.hpp"
#include "lfd/upoly.hpp"

namespace lfd {

/// sum_k q_k(x, s) h^{s+1-k}. The q_k live in n+1 variables, s last.
struct SExpr {
  std::size_t n = 0;
  std::map<int, MPoly> q;

  /// h^{s+1}
  static SExpr h_power(std::size_t n) { return {n, {{0, MPoly::constant(n + 1, 1)}}}; }

  SExpr& operator+=(const SExpr& o) {
    for (const auto& [k, p] : o.q) add(k, p);
    return *this;
  }
  SExpr scaled(const Rational& c) const {
    SExpr r{n, {}};
    for (const auto& [k, p] : q) r.add(k, c * p);
    return r;
  }
  void add(int k, const MPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = q.try_emplace(k, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) q.erase(it);
    }
  }
  bool is_zero() const { return q.empty(); }
};

/// Constant-coefficient operator: y_i stands for d/dx_i.
struct DualOperator {
  MPoly symbol;
};

/// h*(d) = h(d) for rational h.
inline DualOperator default_dual(const MPoly& h) { return {h}; }

/// h(w_1 d_1, ..., w_n d_n)
inline DualOperator weighted_dual(const MPoly& h, const std::vector<Rational>& weights) {
  const std::size_t n = h.nvars();
  if (weights.size() != n) throw Error(ErrorCode::MismatchedVariables, "bfunctional", "one weight per variable");
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(weights[i] * MPoly::variable(n, i));
  return {h.compose(images)};
}

namespace detail {

inline MPoly lift(const MPoly& p) {
  std::vector<std::size_t> map(p.nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return p.remap(p.nvars() + 1, map);
}

// dh_lifted is d_i h embedded in n+1 variables.
inline SExpr sexpr_diff_lifted(const SExpr& e, std::size_t i, const MPoly& dh_lifted) {
  const std::size_t n = e.n;
  SExpr out{n, {}};
  const MPoly s = MPoly::variable(n + 1, n);
  for (const auto& [k, q] : e.q) {
    out.add(k, q.derivative(i));
    out.add(k + 1, q * dh_lifted * (s + MPoly::constant(n + 1, 1 - k)));
  }
  return out;
}

}  // namespace detail

/// d/dx_i (q h^{s+1-k}) = (d_i q) h^{s+1-k} + (s+1-k) q (d_i h) h^{s-k}.
inline SExpr sexpr_diff(const SExpr& e, std::size_t i, const MPoly& h) {
  if (h.nvars() != e.n) throw Error(ErrorCode::MismatchedVariables, "bfunctional", "h has wrong variable count");
  return detail::sexpr_diff_lifted(e, i, detail::lift(h.derivative(i)));
}

inline unsigned thread_cap() {
  if (const char* env = std::getenv("LFD_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

/// P h^{s+1}. Monomials of P are applied in graded-lex order with a memo on
/// the partial derivative multi-index already applied; worker results are
/// summed in a fixed order so the output does not depend on LFD_THREADS.
inline SExpr apply_operator(const DualOperator& p, const MPoly& h, unsigned threads = thread_cap()) {
  const std::size_t n = h.nvars();
  if (p.symbol.nvars() != n) throw Error(ErrorCode::MismatchedVariables, "bfunctional", "operator has wrong variable count");
  std::vector<MPoly> dh;
  for (std::size_t i = 0; i < n; ++i) dh.push_back(detail::lift(h.derivative(i)));
  std::vector<std::pair<Exponents, Rational>> monos(p.symbol.terms().begin(), p.symbol.terms().end());

  auto work = [&](std::size_t begin, std::size_t end) {
    std::map<Exponents, SExpr> memo;
    SExpr total{n, {}};
    for (std::size_t m = begin; m < end; ++m) {
      const auto& [ex, coef] = monos[m];
      Exponents done(n, 0);
      SExpr cur = SExpr::h_power(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (int r = 0; r < ex[i]; ++r) {
          ++done[i];
          if (auto it = memo.find(done); it != memo.end()) {
            cur = it->second;
          } else {
            cur = detail::sexpr_diff_lifted(cur, i, dh[i]);
            memo.emplace(done, cur);
          }
        }
      }
      total += cur.scaled(coef);
    }
    return total;
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(monos.size())));
  if (threads <= 1) return work(0, monos.size());
  std::vector<std::future<SExpr>> parts;
  const std::size_t chunk = (monos.size() + threads - 1) / threads;
  for (std::size_t b = 0; b < monos.size(); b += chunk) {
    parts.push_back(std::async(std::launch::async, work, b, std::min(monos.size(), b + chunk)));
  }
  SExpr total{n, {}};
  for (auto& f : parts) total += f.get();
  return total;
}

struct FunctionalResult {
  BPoly b;                   // monic
  Rational leading_constant; // B(s) = leading_constant * b(s)
  QPoly raw;
};

/// Reads B(s) off T = sum_k q_k h^{n-k} = B(s) h^{n-1} and verifies the
/// identity exactly.
inline FunctionalResult extract_b(const SExpr& e, const MPoly& h) {
  const std::size_t n = h.nvars();
  const int order = static_cast<int>(n);
  if (!e.q.empty() && e.q.rbegin()->first > order) {
    throw Error(ErrorCode::NotProportional, "bfunctional", "operator order exceeds n");
  }
  const MPoly h_lift = detail::lift(h);
  std::vector<MPoly> h_pow{MPoly::constant(n + 1, 1)};
  while (static_cast<int>(h_pow.size()) <= order) h_pow.push_back(h_pow.back() * h_lift);
  MPoly t(n + 1);
  for (const auto& [k, q] : e.q) t += q * h_pow[static_cast<std::size_t>(order - k)];

  const MPoly& ref_poly = h_pow[static_cast<std::size_t>(order - 1)];
  const auto& [ref_mono, ref_coeff] = *ref_poly.terms().begin();
  std::vector<Rational> coeffs;
  for (const auto& [ex, c] : t.terms()) {
    if (!std::equal(ex.begin(), ex.end() - 1, ref_mono.begin())) continue;
    const auto k = static_cast<std::size_t>(ex.back());
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = c / ref_coeff;
  }
  const QPoly b(coeffs);
  if (b.is_zero()) throw Error(ErrorCode::NotProportional, "bfunctional", "P h^{s+1} vanishes at the reference monomial");
  MPoly b_lift(n + 1);
  for (std::size_t k = 0; k < b.coeffs().size(); ++k) {
    Exponents ex(n + 1, 0);
    ex[n] = static_cast<int>(k);
    b_lift.add_term(ex, b.coeffs()[k]);
  }
  if (!(t == b_lift * ref_poly)) {
    throw Error(ErrorCode::NotProportional, "bfunctional",
                "P h^{s+1} is not a multiple of h^s; supply the operator h*(d) in unitary coordinates");
  }
  FunctionalResult out;
  out.raw = b;
  out.leading_constant = b.leading();
  out.b = BPoly::from_poly(b, "bfunctional");
  return out;
}

inline FunctionalResult bernstein_via_functional(const DualOperator& p, const MPoly& h) {
  return extract_b(apply_operator(p, h), h);
}

}  // namespace lfd

#endif  // LFD_BFUNCTIONAL_HPP
