#ifndef LFD_DEFALG_HPP
#define LFD_DEFALG_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lfd/error.hpp"
#include "lfd/freediv.hpp"
#include "lfd/mpoly.hpp"
#include "lfd/qmatrix.hpp"
#include "lfd/sparse.hpp"

namespace lfd {

/// [xi_1(f), ..., xi_{n-1}(f)] for the relative fields of the divisor.
inline std::vector<MPoly> jacobian_gens(const DivisorData& divisor, const MPoly& f) {
  if (f.nvars() != divisor.n) throw Error(ErrorCode::MismatchedVariables, "defalg", "f has the wrong number of variables");
  if (f.is_zero() || f.degree() != 1 || !f.is_homogeneous()) {
    throw Error(ErrorCode::NotLinear, "defalg", "f must be a nonzero linear form");
  }
  std::vector<MPoly> out;
  for (const auto& xi : divisor.relative_fields) out.push_back(xi.apply(f));
  return out;
}

namespace detail {

inline SparseVector to_sparse(const MPoly& p, const std::map<Exponents, std::size_t, GradedLexGreater>& index) {
  SparseVector v;
  for (const auto& [e, c] : p.terms()) v.emplace(index.at(e), c);
  return v;
}

inline std::map<Exponents, std::size_t, GradedLexGreater> index_of(const std::vector<Exponents>& basis) {
  std::map<Exponents, std::size_t, GradedLexGreater> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

}  // namespace detail

struct GradedPiece {
  std::size_t dim = 0;          // dim of (C[x] / (J_h(f) + (h)))_d
  bool f_power_spans = false;   // f^d spans that piece
};

/// Degree-d piece of C[x]/(J_h(f) + (h)) by exact sparse linear algebra.
inline GradedPiece graded_quotient_dim(const DivisorData& divisor, const std::vector<MPoly>& gens,
                                       const MPoly& f, int d) {
  const std::size_t n = divisor.n;
  const auto rows = monomial_basis(n, d);
  const auto index = detail::index_of(rows);
  ColumnEchelon ech(rows.size());
  if (d >= 1) {
    const auto lower = monomial_basis(n, d - 1);
    for (const auto& g : gens) {
      for (const auto& m : lower) ech.add_column(detail::to_sparse(g * MPoly::monomial(m, 1), index));
    }
  }
  if (d >= static_cast<int>(n)) {
    for (const auto& m : monomial_basis(n, d - static_cast<int>(n))) {
      ech.add_column(detail::to_sparse(divisor.h * MPoly::monomial(m, 1), index));
    }
  }
  GradedPiece out;
  out.dim = rows.size() - ech.rank();
  const bool added = ech.add_column(detail::to_sparse(f.pow(static_cast<unsigned>(d)), index));
  out.f_power_spans = rows.size() == ech.rank() && (added || out.dim == 0);
  return out;
}

struct GenericityResult {
  bool generic = false;
  std::optional<int> failing_degree;      // first degree violating (1,...,1,0)
  std::vector<std::size_t> hilbert;       // dims in degrees 0..n
};

/// f is generic iff the Hilbert function of C[x]/(J_h(f)+(h)) is (1,...,1,0)
/// in degrees 0..n with f^d spanning each nonzero piece.
inline GenericityResult genericity_check(const DivisorData& divisor, const MPoly& f) {
  const auto gens = jacobian_gens(divisor, f);
  GenericityResult res;
  res.generic = true;
  for (int d = 0; d <= static_cast<int>(divisor.n); ++d) {
    const GradedPiece piece = graded_quotient_dim(divisor, gens, f, d);
    res.hilbert.push_back(piece.dim);
    const bool ok = d < static_cast<int>(divisor.n) ? (piece.dim == 1 && piece.f_power_spans) : piece.dim == 0;
    if (!ok && res.generic) {
      res.generic = false;
      res.failing_degree = d;
    }
  }
  return res;
}

/// Linear coordinates adapted to a generic pair: y_i = xi_i(f) for i < n-1 and
/// y_{n-1} = f, so that J_h(f) = (y_0, ..., y_{n-2}). The quotient map
/// C[x] -> C[x]/J_h(f) is evaluation along the line through `base_point`,
/// where all xi_i(f) vanish and f = 1.
struct AdaptedFrame {
  QMatrix to_adapted;                      // y = to_adapted * x
  QMatrix to_original;                     // x = to_original * y
  QVector base_point;                      // x with y = (0, ..., 0, 1)
  Rational h_at_base;                      // h(base_point), nonzero iff generic
  MPoly h_adapted;                         // h in y coordinates
  std::vector<QMatrix> relative_adapted;   // relative field matrices in y coordinates
  std::vector<Rational> relative_traces;

  /// Substitution x -> to_original * y.
  MPoly to_y(const MPoly& p) const {
    const std::size_t n = to_original.rows();
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(MPoly::linear_form(to_original.row(i)));
    return p.compose(images);
  }

  MPoly to_x(const MPoly& p) const {
    const std::size_t n = to_adapted.rows();
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(MPoly::linear_form(to_adapted.row(i)));
    return p.compose(images);
  }
};

/// Adapted frame when the xi_i(f) and f are linearly independent.
inline std::optional<AdaptedFrame> adapted_frame(const DivisorData& divisor, const MPoly& f) {
  const std::size_t n = divisor.n;
  const auto gens = jacobian_gens(divisor, f);
  QMatrix l(n, n);
  auto put_row = [&](std::size_t r, const MPoly& lin) {
    for (const auto& [e, c] : lin.terms()) {
      for (std::size_t j = 0; j < n; ++j) {
        if (e[j] == 1) l(r, j) = c;
      }
    }
  };
  for (std::size_t k = 0; k + 1 < n; ++k) put_row(k, gens[k]);
  put_row(n - 1, f);
  auto inv = inverse(l);
  if (!inv) return std::nullopt;
  AdaptedFrame fr;
  fr.to_adapted = l;
  fr.to_original = *inv;
  fr.base_point = fr.to_original.column(n - 1);
  fr.h_at_base = divisor.h.evaluate(fr.base_point);
  fr.h_adapted = fr.to_y(divisor.h);
  for (const auto& xi : divisor.relative_fields) {
    fr.relative_adapted.push_back(l * xi.matrix() * fr.to_original);
    fr.relative_traces.push_back(xi.trace());
  }
  return fr;
}

/// Cheap exact genericity test: the adapted frame exists and h does not
/// vanish at its base point. Equivalent to genericity_check.
inline bool is_generic_fast(const DivisorData& divisor, const MPoly& f) {
  auto fr = adapted_frame(divisor, f);
  return fr && fr->h_at_base != 0;
}

/// q = sum lambda_{(b,e)} h^b f^e + sum xi_i(f) g_i.
struct Decomposition {
  std::map<std::pair<int, int>, Rational> lambda;  // (b, e) -> coefficient
  std::vector<MPoly> g;
};

struct PairData {
  DivisorData divisor;
  MPoly f;
  std::vector<MPoly> jacobian;
  bool generic = false;
  GenericityResult genericity;
  Rational c;
  std::vector<MPoly> k;  // certificate: f^n = -c h + sum xi_i(f) k_i
};

/// Canonical decompositions modulo the Jacobian ideal, one factorized linear
/// system per degree. Unknown order: lambda first, then the coefficients of
/// g_1, ..., g_{n-1} in graded-lex order.
class JacobianDecomposer {
 public:
  explicit JacobianDecomposer(const DivisorData& divisor, const MPoly& f, std::vector<MPoly> gens)
      : divisor_(divisor), f_(f), gens_(std::move(gens)) {}

  Decomposition decompose(const MPoly& q) {
    const int n = static_cast<int>(divisor_.n);
    if (q.nvars() != divisor_.n) throw Error(ErrorCode::MismatchedVariables, "defalg", "q has the wrong number of variables");
    if (!q.is_homogeneous()) throw Error(ErrorCode::NoDecomposition, "defalg", "q must be homogeneous");
    Decomposition out;
    out.g.assign(gens_.size(), MPoly(divisor_.n));
    if (q.is_zero()) return out;
    const int d = q.degree();
    if (d > n) throw Error(ErrorCode::NoDecomposition, "defalg", "degree exceeds n");
    System& sys = system(d);
    auto sol = sys.echelon.solve(detail::to_sparse(q, sys.row_index));
    if (!sol) {
      throw Error(ErrorCode::NoDecomposition, "defalg",
                  "q is not in the span of h^b f^e and J_h(f) in degree " + std::to_string(d));
    }
    const auto lower = monomial_basis(divisor_.n, d - 1);
    for (const auto& [col, value] : *sol) {
      if (col == 0) {
        out.lambda[sys.lambda_key] = value;
      } else {
        const std::size_t i = (col - 1) / lower.size();
        out.g[i].add_term(lower[(col - 1) % lower.size()], value);
      }
    }
    MPoly rebuilt(divisor_.n);
    for (const auto& [be, v] : out.lambda) {
      rebuilt += v * divisor_.h.pow(be.first) * f_.pow(be.second);
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) rebuilt += gens_[i] * out.g[i];
    if (!(rebuilt == q)) throw Error(ErrorCode::NoDecomposition, "defalg", "decomposition failed to reconstruct q");
    return out;
  }

 private:
  struct System {
    std::map<Exponents, std::size_t, GradedLexGreater> row_index;
    ColumnEchelon echelon{0};
    std::pair<int, int> lambda_key;
  };

  System& system(int d) {
    auto it = systems_.find(d);
    if (it != systems_.end()) return *it->second;
    const int n = static_cast<int>(divisor_.n);
    auto sys = std::make_unique<System>();
    const auto rows = monomial_basis(divisor_.n, d);
    sys->row_index = detail::index_of(rows);
    sys->echelon = ColumnEchelon(rows.size());
    sys->lambda_key = d < n ? std::pair{0, d} : std::pair{1, 0};
    const MPoly lambda_col = d < n ? f_.pow(static_cast<unsigned>(d)) : divisor_.h;
    sys->echelon.add_column(detail::to_sparse(lambda_col, sys->row_index));
    const auto lower = monomial_basis(divisor_.n, d - 1);
    for (const auto& g : gens_) {
      for (const auto& m : lower) sys->echelon.add_column(detail::to_sparse(g * MPoly::monomial(m, 1), sys->row_index));
    }
    return *systems_.emplace(d, std::move(sys)).first->second;
  }

  DivisorData divisor_;
  MPoly f_;
  std::vector<MPoly> gens_;
  std::map<int, std::unique_ptr<System>> systems_;
};

inline Decomposition decompose(const PairData& pair, const MPoly& q) {
  if (!pair.generic) throw Error(ErrorCode::NoDecomposition, "defalg", "linear form is not generic");
  JacobianDecomposer dec(pair.divisor, pair.f, pair.jacobian);
  return dec.decompose(q);
}

/// c from f^n = -c h + sum xi_i(f) k_i; the k_i are returned via `k`.
inline Rational compute_c(const PairData& pair, std::vector<MPoly>* k = nullptr) {
  const Decomposition d = decompose(pair, pair.f.pow(static_cast<unsigned>(pair.divisor.n)));
  if (k != nullptr) *k = d.g;
  auto it = d.lambda.find({1, 0});
  return it == d.lambda.end() ? Rational(0) : Rational(-it->second);
}

struct PairOptions {
  bool full_genericity_check = true;
};

/// Assembles the pair (f, h); throws NoDecomposition if f is not generic.
inline PairData make_pair(const DivisorData& divisor, const MPoly& f, PairOptions opts = {}) {
  PairData p;
  p.divisor = divisor;
  p.f = f;
  p.jacobian = jacobian_gens(divisor, f);
  if (opts.full_genericity_check) {
    p.genericity = genericity_check(divisor, f);
    p.generic = p.genericity.generic;
  } else {
    p.generic = is_generic_fast(divisor, f);
  }
  if (!p.generic) {
    throw Error(ErrorCode::NoDecomposition, "defalg",
                "linear form is not generic" +
                    (p.genericity.failing_degree ? " (fails in degree " + std::to_string(*p.genericity.failing_degree) + ")"
                                                 : std::string()));
  }
  p.c = compute_c(p, &p.k);
  return p;
}

struct GenericFormChoice {
  MPoly f;
  std::string rule;  // which candidate won, for reproducibility
};

/// Deterministic search: sum x_i, then sum (i+1) x_i, then seeded
/// pseudo-random small-integer forms.
inline GenericFormChoice find_generic_form(const DivisorData& divisor, int max_random = 200) {
  const std::size_t n = divisor.n;
  std::vector<Rational> ones(n, 1);
  if (MPoly f = MPoly::linear_form(ones); is_generic_fast(divisor, f)) return {f, "sum"};
  std::vector<Rational> ramp;
  for (std::size_t i = 0; i < n; ++i) ramp.emplace_back(static_cast<long>(i + 1));
  if (MPoly f = MPoly::linear_form(ramp); is_generic_fast(divisor, f)) return {f, "weighted-sum"};
  std::mt19937 rng(20091201U);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int attempt = 0; attempt < max_random; ++attempt) {
    std::vector<Rational> c(n);
    for (auto& v : c) v = coeff(rng);
    MPoly f = MPoly::linear_form(c);
    if (!f.is_zero() && is_generic_fast(divisor, f)) return {f, "random-" + std::to_string(attempt)};
  }
  throw Error(ErrorCode::NoDecomposition, "defalg", "no generic linear form found");
}

}  // namespace lfd

#endif  // LFD_DEFALG_HPP
