#ifndef LFD_BRIESKORN_HPP
#define LFD_BRIESKORN_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lfd/defalg.hpp"
#include "lfd/eigen.hpp"
#include "lfd/error.hpp"
#include "lfd/freediv.hpp"
#include "lfd/mpoly.hpp"
#include "lfd/qmatrix.hpp"
#include "lfd/sparse.hpp"
#include "lfd/upoly.hpp"

namespace lfd {

/// sum_a theta^a p_a(x) omega_1
struct LatticeElement {
  std::size_t nvars = 0;
  std::map<int, MPoly> terms;

  static LatticeElement omega1(std::size_t n) { return {n, {{0, MPoly::constant(n, 1)}}}; }
  static LatticeElement of(const MPoly& p, int theta_power = 0) { return {p.nvars(), {{theta_power, p}}}; }

  LatticeElement& add(int a, const MPoly& p) {
    auto [it, inserted] = terms.try_emplace(a, p);
    if (!inserted) it->second += p;
    if (it->second.is_zero()) terms.erase(it);
    return *this;
  }

  /// a + deg p_a, constant across terms; nullopt for zero or mixed elements.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [a, p] : terms) {
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) return std::nullopt;
      const int w = a + p.degree();
      if (d && *d != w) return std::nullopt;
      d = w;
    }
    return d;
  }
};

/// (theta exponent a, t exponent b, f exponent e) with 0 <= e < n.
using ClassKey = std::tuple<int, int, int>;

/// sum gamma theta^a t^b e_{e+1}, where e_j is the class of f^{j-1} omega_1.
/// Theta exponents may be negative in intermediate results.
class ReducedClass {
 public:
  using Map = std::map<ClassKey, Rational>;

  ReducedClass() = default;
  static ReducedClass basis(int a, int b, int e) {
    ReducedClass r;
    r.add({a, b, e}, 1);
    return r;
  }

  const Map& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  Rational coeff(const ClassKey& k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rational(0) : it->second;
  }

  void add(const ClassKey& k, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = c_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  ReducedClass& operator+=(const ReducedClass& o) {
    for (const auto& [k, v] : o.c_) add(k, v);
    return *this;
  }
  ReducedClass& operator-=(const ReducedClass& o) {
    for (const auto& [k, v] : o.c_) add(k, -v);
    return *this;
  }
  friend ReducedClass operator+(ReducedClass a, const ReducedClass& b) { return a += b; }
  friend ReducedClass operator-(ReducedClass a, const ReducedClass& b) { return a -= b; }
  friend ReducedClass operator*(const Rational& s, const ReducedClass& a) {
    ReducedClass r;
    for (const auto& [k, v] : a.c_) r.add(k, s * v);
    return r;
  }
  friend bool operator==(const ReducedClass& a, const ReducedClass& b) { return a.c_ == b.c_; }

  /// Multiplication by theta^da t^db.
  ReducedClass shifted(int da, int db) const {
    ReducedClass r;
    for (const auto& [k, v] : c_) r.c_.emplace(ClassKey{std::get<0>(k) + da, std::get<1>(k) + db, std::get<2>(k)}, v);
    return r;
  }

  /// Specialization theta -> value (value = +1 or -1); keys become (0, b, e).
  ReducedClass at_theta(int value) const {
    ReducedClass r;
    for (const auto& [k, v] : c_) {
      const int a = std::get<0>(k);
      const bool flip = value == -1 && (a % 2 != 0);
      r.add({0, std::get<1>(k), std::get<2>(k)}, flip ? Rational(-v) : v);
    }
    return r;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : c_) {
      const auto [a, b, e] = k;
      if (!out.empty()) out += v < 0 ? " - " : " + ";
      else if (v < 0) out += "-";
      out += Rational(abs(v)).get_str();
      if (a != 0) out += "*theta^" + std::to_string(a);
      if (b != 0) out += "*t^" + std::to_string(b);
      out += "*e" + std::to_string(e + 1);
    }
    return out;
  }

 private:
  Map c_;
};

/// Reduction of classes to the cyclic basis e_1..e_n using the rule
///   [g xi_i(f) omega_1] = theta [(xi_i(g) + g tr xi_i) omega_1].
/// Works in coordinates adapted to (f, h): y_i = xi_i(f) (i < n-1), y_{n-1} = f.
/// There the Jacobian ideal is (y_0..y_{n-2}) and the quotient part of a
/// degree-d polynomial is its y_{n-1}^d coefficient.
class Reducer {
 public:
  explicit Reducer(const PairData& pair) : n_(pair.divisor.n) {
    auto fr = adapted_frame(pair.divisor, pair.f);
    if (!fr || fr->h_at_base == 0) throw Error(ErrorCode::NoDecomposition, "brieskorn", "linear form is not generic");
    frame_ = std::move(*fr);
    Exponents top(n_, 0);
    top[n_ - 1] = static_cast<int>(n_);
    h_top_ = frame_.h_adapted.coeff(top);
    if (h_top_ == 0) throw Error(ErrorCode::NoDecomposition, "brieskorn", "h vanishes on the base line");
    for (const auto& b : frame_.relative_adapted) fields_.emplace_back(b, 0);
  }

  std::size_t n() const noexcept { return n_; }
  const AdaptedFrame& frame() const noexcept { return frame_; }
  /// Coefficient of y_{n-1}^n in h; c = -1 / h_top.
  const Rational& h_top() const noexcept { return h_top_; }

  ReducedClass reduce(const LatticeElement& el) const {
    if (el.nvars != n_) throw Error(ErrorCode::MismatchedVariables, "brieskorn", "lattice element has wrong variable count");
    bool nonzero = false;
    for (const auto& [a, p] : el.terms) nonzero = nonzero || !p.is_zero();
    if (nonzero && !el.degree()) {
      throw Error(ErrorCode::InvalidInput, "brieskorn", "lattice element must be homogeneous");
    }
    std::map<int, MPoly> adapted;
    for (const auto& [a, p] : el.terms) {
      if (!p.is_zero()) adapted.emplace(a, frame_.to_y(p));
    }
    return reduce_adapted(std::move(adapted));
  }

  ReducedClass reduce(const MPoly& p, int theta_power = 0) const { return reduce(LatticeElement::of(p, theta_power)); }

 private:
  ReducedClass reduce_adapted(std::map<int, MPoly> terms) const {
    ReducedClass out;
    if (terms.empty()) return out;
    std::vector<MPoly> h_powers{MPoly::constant(n_, 1)};
    int a = terms.begin()->first;
    MPoly cur(n_);
    while (true) {
      if (auto it = terms.find(a); it != terms.end()) {
        cur += it->second;
        terms.erase(it);
      }
      if (cur.is_zero()) {
        if (terms.empty()) break;
        a = terms.begin()->first;
        continue;
      }
      const int d = cur.degree();
      Exponents top(n_, 0);
      top[n_ - 1] = d;
      const Rational mu = cur.coeff(top);
      if (mu != 0) {
        const int b = d / static_cast<int>(n_);
        const int e = d % static_cast<int>(n_);
        const Rational coef = mu / lfd::pow(h_top_, static_cast<unsigned>(b));
        out.add({a, b, e}, coef);
        while (static_cast<int>(h_powers.size()) <= b) h_powers.push_back(h_powers.back() * frame_.h_adapted);
        Exponents ye(n_, 0);
        ye[n_ - 1] = e;
        cur -= coef * (h_powers[b] * MPoly::monomial(ye, 1));
      }
      if (cur.is_zero()) {
        ++a;
        continue;
      }
      // cur lies in (y_0..y_{n-2}); split each monomial at its first such variable.
      std::vector<MPoly> g(n_ - 1, MPoly(n_));
      for (const auto& [ex, c] : cur.terms()) {
        std::size_t i = 0;
        while (i + 1 < n_ && ex[i] == 0) ++i;
        if (i + 1 >= n_) throw Error(ErrorCode::NoDecomposition, "brieskorn", "remainder outside the Jacobian ideal");
        Exponents q = ex;
        q[i] -= 1;
        g[i].add_term(q, c);
      }
      MPoly next(n_);
      for (std::size_t i = 0; i + 1 < n_; ++i) {
        if (g[i].is_zero()) continue;
        next += fields_[i].apply(g[i]);
        next += frame_.relative_traces[i] * g[i];
      }
      cur = std::move(next);
      ++a;
    }
    return out;
  }

  std::size_t n_;
  AdaptedFrame frame_;
  Rational h_top_;
  std::vector<LinearDerivation> fields_;
};

inline ReducedClass reduce_class(const PairData& pair, const LatticeElement& el) { return Reducer(pair).reduce(el); }

/// f-action in the cyclic basis together with the derived residue data.
struct ConnectionData {
  std::size_t n = 0;
  /// F[i][j] is a polynomial in (theta, t); companion shape.
  std::vector<std::vector<MPoly>> F;
  ReducedClass fn_class;        // class of f^n omega_1
  std::vector<Rational> alpha;  // alpha_j, j = 1..n (0-indexed here)
  Rational c_from_F;            // coefficient of t in entry (1, n)
  QMatrix R;                    // residue of the saturation in the basis theta^{1-j} e_j
};

inline ConnectionData f_action_matrix(const PairData& pair, const Reducer& reducer) {
  const std::size_t n = pair.divisor.n;
  ConnectionData conn;
  conn.n = n;
  conn.F.assign(n, std::vector<MPoly>(n, MPoly(2)));
  for (std::size_t j = 0; j + 1 < n; ++j) conn.F[j + 1][j] = MPoly::constant(2, 1);
  conn.fn_class = reducer.reduce(pair.f.pow(static_cast<unsigned>(n)));
  conn.alpha.assign(n, 0);
  for (const auto& [key, v] : conn.fn_class.coeffs()) {
    const auto [a, b, e] = key;
    if (a < 0 || b < 0 || a + static_cast<int>(n) * b != static_cast<int>(n) - e) {
      throw Error(ErrorCode::InvalidInput, "brieskorn",
                  "entry " + std::to_string(e + 1) + " of the last column is not weighted-homogeneous");
    }
    conn.F[e][n - 1].add_term({a, b}, v);
    if (b == 0) conn.alpha[e] += v;
  }
  conn.c_from_F = conn.F[0][n - 1].coeff({0, 1});
  return conn;
}

inline ConnectionData f_action_matrix(const PairData& pair) { return f_action_matrix(pair, Reducer(pair)); }

/// theta nabla on e~_j = theta^{1-j} e_j:  e~_j -> e~_{j+1} + (1-j) e~_j  (j < n),
/// e~_n -> sum alpha_j e~_j + (1-n) e~_n. Column j holds the image of e~_j.
inline QMatrix saturation_residue(const ConnectionData& conn) {
  const std::size_t n = conn.n;
  QMatrix r(n, n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    r(j + 1, j) = 1;
    r(j, j) = -static_cast<long>(j);
  }
  for (std::size_t j = 0; j < n; ++j) r(j, n - 1) += conn.alpha[j];
  r(n - 1, n - 1) += 1 - static_cast<long>(n);
  return r;
}

/// b_h(s) = n^{-n} chi_R(n(s+1)).
inline BPoly bernstein_via_spectral(const ConnectionData& conn) {
  const Rational n = static_cast<long>(conn.n);
  return BPoly::from_poly(char_poly(conn.R).compose_affine(n, n), "brieskorn");
}

/// b_{G_1(log D)}(s) = n^{-n} chi_R(n s).
inline BPoly spectral_polynomial(const ConnectionData& conn) {
  const Rational n = static_cast<long>(conn.n);
  return BPoly::from_poly(char_poly(conn.R).compose_affine(n, 0), "brieskorn");
}

/// t nabla_t on classes:  n t nabla_t [g omega_1] = [E(g) omega_1] - theta^{-1} [f g omega_1].
class TConnection {
 public:
  explicit TConnection(const ConnectionData& conn) : n_(static_cast<int>(conn.n)), fn_(conn.fn_class) {}

  ReducedClass apply(const ReducedClass& v) const {
    ReducedClass out;
    const Rational inv_n = Rational(1, n_);
    for (const auto& [key, coef] : v.coeffs()) {
      const auto [a, b, e] = key;
      out.add(key, coef * inv_n * (n_ * b + e));
      if (e + 1 < n_) {
        out.add({a - 1, b, e + 1}, -coef * inv_n);
      } else {
        out -= (coef * inv_n) * fn_.shifted(a - 1, b);
      }
    }
    return out;
  }

 private:
  int n_;
  ReducedClass fn_;
};

struct CyclicCheck {
  bool holds = false;
  ReducedClass lhs;         // b(t nabla_t) omega_1 with theta symbolic
  ReducedClass lhs_at_one;  // specialized at theta = 1
  Rational expected;        // coefficient of t e_1 at theta = 1
  ReducedClass residual;
};

/// Applies b_{G_1}(t nabla_t) to omega_1 and compares at theta = 1 with
/// (-1)^n (-c / n^n) t omega_1. The sign comes from the cyclic basis: the
/// normal form with subdiagonal -1 is built on (-f)^{j-1} omega_1.
inline CyclicCheck verify_cyclic_equation(const ConnectionData& conn, const BPoly& b_g1, const Rational& c) {
  const TConnection tc(conn);
  CyclicCheck out;
  ReducedClass power = ReducedClass::basis(0, 0, 0);
  const auto& coeffs = b_g1.poly.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out.lhs += coeffs[k] * power;
    if (k + 1 < coeffs.size()) power = tc.apply(power);
  }
  out.lhs_at_one = out.lhs.at_theta(1);
  const Rational nn = lfd::pow(Rational(static_cast<long>(conn.n)), static_cast<unsigned>(conn.n));
  out.expected = (conn.n % 2 == 0 ? Rational(1) : Rational(-1)) * (-c / nn);
  ReducedClass rhs;
  rhs.add({0, 1, 0}, out.expected);
  out.residual = out.lhs_at_one - rhs;
  out.holds = out.residual.is_zero();
  return out;
}

/// e_j = theta^{j-1} e~_j written over a Jordan basis U of R. An elementary
/// section theta^m (e~ . u_k) has exponent lambda_k + m.
struct ElementaryDecomposition {
  std::size_t n = 0;
  Eigenstructure eigen;
  QMatrix U;
  QMatrix U_inv;                  // e_j = theta^{j-1} sum_k U_inv(k, j) u_k
  std::vector<Rational> exponents;  // lambda_k per column of U
  bool reconstructs = false;
};

inline ElementaryDecomposition elementary_decomposition(const ConnectionData& conn) {
  ElementaryDecomposition d;
  d.n = conn.n;
  d.eigen = rational_eigenstructure(conn.R);
  d.U = d.eigen.basis(conn.n);
  auto inv = inverse(d.U);
  if (!inv) throw Error(ErrorCode::NonRationalSpectrum, "brieskorn", "generalized eigenvectors do not span");
  d.U_inv = *inv;
  d.exponents = d.eigen.column_eigenvalues();
  d.reconstructs = d.U * d.U_inv == QMatrix::identity(conn.n) &&
                   d.U_inv * conn.R * d.U == d.eigen.jordan_form(conn.n);
  return d;
}

/// Sorted multiset of rationals.
struct Spectrum {
  std::vector<Rational> values;

  std::map<Rational, unsigned> multiplicities() const {
    std::map<Rational, unsigned> m;
    for (const auto& v : values) ++m[v];
    return m;
  }
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].get_str();
    return out + ")";
  }
  friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.values == b.values; }
};

enum class SpectrumSide { Zero, Infinity };

namespace detail {

// Dimension of the image in E/theta E of sections of E (theta-degree < K)
// whose elementary components all have exponent >= alpha (Zero) or
// <= alpha (Infinity). strict shifts to > / <.
inline std::size_t filtered_dim(const ElementaryDecomposition& d, SpectrumSide side, const Rational& alpha,
                                bool strict, int window) {
  const std::size_t n = d.n;
  const int k_max = window;
  // unknown (j, m): coefficient of theta^m e_j, theta-power p = m + j < K
  std::vector<std::pair<std::size_t, int>> unknowns;
  std::map<std::pair<std::size_t, int>, std::size_t> idx;
  for (std::size_t j = 0; j < n; ++j) {
    for (int m = 0; m + static_cast<int>(j) < k_max; ++m) {
      idx.emplace(std::pair{j, m}, unknowns.size());
      unknowns.emplace_back(j, m);
    }
  }
  std::vector<QVector> rows;
  for (int p = 0; p < k_max; ++p) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational ex = d.exponents[k] + p;
      bool excluded = false;
      if (side == SpectrumSide::Zero) excluded = strict ? ex <= alpha : ex < alpha;
      else excluded = strict ? ex >= alpha : ex > alpha;
      if (!excluded) continue;
      QVector row(unknowns.size());
      bool any = false;
      for (std::size_t j = 0; j < n; ++j) {
        const int m = p - static_cast<int>(j);
        if (m < 0) continue;
        row[idx.at({j, m})] = d.U_inv(k, j);
        any = any || d.U_inv(k, j) != 0;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  std::vector<QVector> kernel;
  if (rows.empty()) {
    return n;
  }
  kernel = kernel_basis(QMatrix::from_rows(rows, unknowns.size()));
  if (kernel.empty()) return 0;
  std::vector<QVector> proj;
  for (const auto& v : kernel) {
    QVector w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = v[idx.at({j, 0})];
    proj.push_back(std::move(w));
  }
  return rank(QMatrix::from_rows(proj, n));
}

inline std::optional<Spectrum> spectrum_in_window(const ElementaryDecomposition& d, SpectrumSide side, int window) {
  std::vector<Rational> cands;
  for (const auto& l : d.exponents) {
    for (int p = -1; p <= window; ++p) cands.push_back(l + p);
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  Spectrum sp;
  for (const auto& a : cands) {
    // jump of the filtration at a: F^a / F^{>a}  (zero) or G_a / G_{<a}  (infinity)
    const std::size_t full = filtered_dim(d, side, a, false, window);
    const std::size_t part = filtered_dim(d, side, a, true, window);
    if (full < part) return std::nullopt;
    sp.values.insert(sp.values.end(), full - part, a);
  }
  if (sp.values.size() != d.n) return std::nullopt;
  return sp;
}

}  // namespace detail

/// Window K = n + ceil(spread) + 1, confirmed at K+1; up to four widenings.
inline Spectrum spectrum_of(const ElementaryDecomposition& d, SpectrumSide side, int* window_used = nullptr) {
  const auto [lo, hi] = std::minmax_element(d.exponents.begin(), d.exponents.end());
  int k = static_cast<int>(d.n) + static_cast<int>(lfd::ceil(*hi - *lo).get_si()) + 1;
  for (int attempt = 0; attempt <= 4; ++attempt, ++k) {
    auto a = detail::spectrum_in_window(d, side, k);
    auto b = detail::spectrum_in_window(d, side, k + 1);
    if (a && b && *a == *b) {
      if (window_used != nullptr) *window_used = k;
      return *a;
    }
  }
  throw Error(ErrorCode::WindowUnstable, "brieskorn", "filtration dimensions did not stabilize");
}

inline Spectrum spectrum_at_zero(const ElementaryDecomposition& d) { return spectrum_of(d, SpectrumSide::Zero); }
inline Spectrum spectrum_at_infinity(const ElementaryDecomposition& d) { return spectrum_of(d, SpectrumSide::Infinity); }

struct TheoremReport {
  bool roots_in_open_interval = false;     // all roots of b_h in (-2, 0)
  bool roots_symmetric = false;            // root multiset symmetric about -1
  bool minus_one_only_integer_root = false;
  bool infinity_symmetric = false;         // alpha_i + alpha_{n+1-i} = n-1
  bool integer_block = false;
  std::optional<int> block_k;              // smallest k with k..n-1-k in the spectrum
  bool block_matches_root_multiplicity = false;  // block length = multiplicity of -1
  bool zero_symmetric = false;             // conjectural: symmetric about (n-1)/2

  bool hard_checks_pass() const {
    return roots_in_open_interval && roots_symmetric && minus_one_only_integer_root && infinity_symmetric &&
           integer_block;
  }
};

inline TheoremReport theorem_checks(const BPoly& b_h, const Spectrum& zero, const Spectrum& infinity) {
  TheoremReport r;
  const auto roots = b_h.root_multiset();
  const int n = static_cast<int>(roots.size());
  r.roots_in_open_interval = std::all_of(roots.begin(), roots.end(), [](const Rational& x) { return x > -2 && x < 0; });
  std::vector<Rational> mirrored;
  for (const auto& x : roots) mirrored.push_back(-2 - x);
  std::sort(mirrored.begin(), mirrored.end());
  r.roots_symmetric = mirrored == roots;
  unsigned minus_one = 0;
  bool other_integer = false;
  for (const auto& x : roots) {
    if (x == -1) ++minus_one;
    else if (is_integer(x)) other_integer = true;
  }
  r.minus_one_only_integer_root = minus_one > 0 && !other_integer;

  const auto& nu = infinity.values;
  r.infinity_symmetric = nu.size() == roots.size();
  for (std::size_t i = 0; r.infinity_symmetric && i < nu.size(); ++i) {
    if (nu[i] + nu[nu.size() - 1 - i] != n - 1) r.infinity_symmetric = false;
  }
  const auto mult = infinity.multiplicities();
  for (int k = 0; 2 * k <= n - 1; ++k) {
    bool all = true;
    for (int v = k; v <= n - 1 - k; ++v) all = all && mult.count(Rational(v)) > 0;
    if (all) {
      r.block_k = k;
      break;
    }
  }
  r.integer_block = r.block_k.has_value();
  r.block_matches_root_multiplicity = r.block_k && static_cast<unsigned>(n - 2 * *r.block_k) == minus_one;

  const auto& z = zero.values;
  r.zero_symmetric = z.size() == roots.size();
  for (std::size_t i = 0; r.zero_symmetric && i < z.size(); ++i) {
    if (z[i] + z[z.size() - 1 - i] != n - 1) r.zero_symmetric = false;
  }
  return r;
}

/// Degree-d piece of C[theta][x] modulo the relations
///   theta^a (g xi_i(f) - theta (xi_i(g) + g tr xi_i)),
/// i.e. of the t=0 lattice together with its t-multiples (theta and x both of
/// weight 1). Freeness of rank n predicts graded_rank_prediction(n, d).
inline std::size_t relation_quotient_dim(const PairData& pair, int d) {
  const std::size_t n = pair.divisor.n;
  std::map<std::pair<int, Exponents>, std::size_t> row;
  for (int a = 0; a <= d; ++a) {
    for (auto& m : monomial_basis(n, d - a)) row.emplace(std::pair{a, std::move(m)}, row.size());
  }
  ColumnEchelon ech(row.size());
  for (int a = 0; a < d; ++a) {
    for (const auto& m : monomial_basis(n, d - 1 - a)) {
      const MPoly g = MPoly::monomial(m, 1);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto& xi = pair.divisor.relative_fields[i];
        SparseVector col;
        const MPoly lhs = g * pair.jacobian[i];
        const MPoly rhs = xi.apply(g) + xi.trace() * g;
        for (const auto& [e, c] : lhs.terms()) axpy(col, c, {{row.at({a, e}), Rational(1)}});
        for (const auto& [e, c] : rhs.terms()) axpy(col, -c, {{row.at({a + 1, e}), Rational(1)}});
        ech.add_column(std::move(col));
      }
    }
  }
  return row.size() - ech.rank();
}

/// #{(a, b, e) : a + n b + e = d, 0 <= e < n}
inline std::size_t graded_rank_prediction(std::size_t n, int d) {
  std::size_t count = 0;
  for (int b = 0; static_cast<int>(n) * b <= d; ++b) {
    for (int e = 0; e < static_cast<int>(n); ++e) {
      if (d - static_cast<int>(n) * b - e >= 0) ++count;
    }
  }
  return count;
}

/// Everything the spectral route produces for one generic pair.
struct SpectralResult {
  ConnectionData conn;
  BPoly b_h;
  BPoly b_g1;
  ElementaryDecomposition elementary;
  Spectrum zero;
  Spectrum infinity;
  CyclicCheck cyclic;
  TheoremReport checks;
};

inline SpectralResult spectral_pipeline(const PairData& pair) {
  const Reducer reducer(pair);
  SpectralResult r;
  r.conn = f_action_matrix(pair, reducer);
  r.conn.R = saturation_residue(r.conn);
  r.b_h = bernstein_via_spectral(r.conn);
  r.b_g1 = spectral_polynomial(r.conn);
  r.elementary = elementary_decomposition(r.conn);
  r.zero = spectrum_at_zero(r.elementary);
  r.infinity = spectrum_at_infinity(r.elementary);
  r.cyclic = verify_cyclic_equation(r.conn, r.b_g1, pair.c);
  r.checks = theorem_checks(r.b_h, r.zero, r.infinity);
  return r;
}

/// Spectra and b_h do not depend on the generic linear form.
inline bool f_independence_check(const DivisorData& divisor, const MPoly& f1, const MPoly& f2) {
  const PairOptions fast{false};
  const SpectralResult a = spectral_pipeline(make_pair(divisor, f1, fast));
  const SpectralResult b = spectral_pipeline(make_pair(divisor, f2, fast));
  return a.b_h == b.b_h && a.infinity == b.infinity && a.zero == b.zero;
}

}  // namespace lfd

#endif  // LFD_BRIESKORN_HPP
