#ifndef LFD_FREEDIV_HPP
#define LFD_FREEDIV_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "lfd/error.hpp"
#include "lfd/mpoly.hpp"
#include "lfd/qmatrix.hpp"

namespace lfd {

/// Linear vector field  sum_{i,j} A_ij x_j d/dx_i  with  xi(h) = lambda * h.
class LinearDerivation {
 public:
  LinearDerivation() = default;
  LinearDerivation(QMatrix matrix, Rational h_eigenvalue)
      : matrix_(std::move(matrix)), h_eigenvalue_(std::move(h_eigenvalue)) {
    if (!matrix_.is_square()) throw Error(ErrorCode::NonSquare, "freediv", "derivation matrix must be square");
  }

  static LinearDerivation euler(std::size_t n) {
    return LinearDerivation(QMatrix::identity(n), static_cast<long>(n));
  }

  const QMatrix& matrix() const noexcept { return matrix_; }
  const Rational& h_eigenvalue() const noexcept { return h_eigenvalue_; }
  Rational trace() const { return matrix_.trace(); }
  std::size_t dim() const noexcept { return matrix_.rows(); }

  /// Coefficient of d/dx_i: the linear form sum_j A_ij x_j.
  MPoly coefficient(std::size_t i) const {
    const std::size_t n = dim();
    MPoly p(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix_(i, j) != 0) p.add_term(MPoly::unit_exponents(n, j), matrix_(i, j));
    }
    return p;
  }

  /// xi(g) for a polynomial g in the same n variables.
  MPoly apply(const MPoly& g) const {
    const std::size_t n = dim();
    MPoly out(n);
    for (std::size_t i = 0; i < n; ++i) {
      MPoly d = g.derivative(i);
      if (d.is_zero()) continue;
      out += coefficient(i) * d;
    }
    return out;
  }

  QVector flatten() const {
    QVector v;
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) v.push_back(matrix_(i, j));
    }
    return v;
  }

 private:
  QMatrix matrix_;
  Rational h_eigenvalue_;
};

inline QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

/// Basis of all linear fields xi with xi(h) = lambda*h (for some lambda),
/// canonicalized as the RREF of the solution space over (A, lambda).
inline std::vector<LinearDerivation> linear_log_fields(const MPoly& h) {
  if (!h.is_homogeneous() || h.is_zero()) {
    throw Error(ErrorCode::DegreeMismatch, "freediv", "h must be a nonzero homogeneous polynomial");
  }
  const std::size_t n = h.nvars();
  const auto rows = monomial_basis(n, h.degree());
  std::map<Exponents, std::size_t, GradedLexGreater> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
  const std::size_t unknowns = n * n + 1;
  QMatrix system(rows.size(), unknowns);
  for (std::size_t i = 0; i < n; ++i) {
    const MPoly dh = h.derivative(i);
    for (std::size_t j = 0; j < n; ++j) {
      const MPoly col = MPoly::variable(n, j) * dh;
      for (const auto& [e, c] : col.terms()) system(row_of.at(e), i * n + j) += c;
    }
  }
  for (const auto& [e, c] : h.terms()) system(row_of.at(e), n * n) -= c;
  const auto kernel = canonical_span_basis(kernel_basis(system), unknowns);
  std::vector<LinearDerivation> out;
  for (const auto& v : kernel) {
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = v[i * n + j];
    }
    out.emplace_back(std::move(a), v[n * n]);
  }
  return out;
}

/// Determinant of a square matrix of polynomials (Laplace expansion with
/// memoized minors over column subsets).
inline MPoly polynomial_determinant(const std::vector<std::vector<MPoly>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::constant(nvars, 1);
  if (n > 20) throw Error(ErrorCode::TooLarge, "freediv", "determinant size too large");
  std::unordered_map<std::uint32_t, MPoly> memo;
  std::function<MPoly(std::uint32_t)> minor = [&](std::uint32_t mask) -> MPoly {
    const int k = std::popcount(mask);
    if (k == 0) return MPoly::constant(nvars, 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t r = static_cast<std::size_t>(k - 1);
    MPoly acc(nvars);
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      if (!m[r][c].is_zero()) {
        MPoly term = m[r][c] * minor(mask & ~(1U << c));
        if ((static_cast<int>(r) + position) % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++position;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor((n == 32) ? 0xffffffffU : ((1U << n) - 1));
}

struct SaitoResult {
  bool ok = false;
  Rational unit;  // det = unit * h when ok
  MPoly determinant;
};

/// Saito's criterion for n linear fields: det of the coefficient matrix must
/// be a nonzero constant multiple of h.
inline SaitoResult saito_check(const MPoly& h, const std::vector<LinearDerivation>& fields) {
  const std::size_t n = h.nvars();
  if (fields.size() != n) {
    throw Error(ErrorCode::WrongCount, "freediv",
                "Saito criterion needs exactly " + std::to_string(n) + " fields, got " +
                    std::to_string(fields.size()));
  }
  std::vector<std::vector<MPoly>> m(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[k].push_back(fields[k].coefficient(i));
  }
  SaitoResult out;
  out.determinant = polynomial_determinant(m, n);
  if (h.is_zero() || out.determinant.is_zero()) return out;
  const auto& [lead, lead_coeff] = *h.terms().begin();
  out.unit = out.determinant.coeff(lead) / lead_coeff;
  out.ok = out.unit != 0 && out.determinant == out.unit * h;
  return out;
}

/// A certified linear free divisor together with its Euler/relative split.
struct DivisorData {
  std::size_t n = 0;
  MPoly h;
  LinearDerivation euler;
  std::vector<LinearDerivation> relative_fields;  // n-1 fields with xi(h) = 0
  std::vector<LinearDerivation> all_fields;       // canonical basis of linear log fields
  Rational saito_unit;
};

inline DivisorData build_divisor(const MPoly& h) {
  const std::size_t n = h.nvars();
  if (h.is_zero() || !h.is_homogeneous()) {
    throw Error(ErrorCode::DegreeMismatch, "freediv", "h must be a nonzero homogeneous polynomial");
  }
  DivisorData d;
  d.n = n;
  d.h = h;
  d.euler = LinearDerivation::euler(n);
  // Field count first: a deficit is the more informative diagnosis, and for
  // n linear fields passing Saito's criterion deg h = n is automatic.
  d.all_fields = linear_log_fields(h);
  if (d.all_fields.size() < n) {
    throw Error(ErrorCode::NotLinearFree, "freediv",
                "space of linear logarithmic fields has dimension " + std::to_string(d.all_fields.size()) +
                    ", expected " + std::to_string(n));
  }
  if (h.degree() != static_cast<int>(n)) {
    throw Error(ErrorCode::DegreeMismatch, "freediv",
                "h must have degree equal to the number of variables (" + std::to_string(n) + "), got degree " +
                    std::to_string(h.degree()));
  }
  if (d.all_fields.size() != n) {
    throw Error(ErrorCode::NotLinearFree, "freediv",
                "space of linear logarithmic fields has dimension " + std::to_string(d.all_fields.size()) +
                    ", expected " + std::to_string(n));
  }
  // lambda = 0 subspace, RREF over the flattened matrix coordinates.
  QMatrix eig(1, n);
  for (std::size_t k = 0; k < n; ++k) eig(0, k) = d.all_fields[k].h_eigenvalue();
  std::vector<QVector> rel;
  for (const auto& combo : kernel_basis(eig)) {
    QVector flat(n * n);
    for (std::size_t k = 0; k < n; ++k) {
      if (combo[k] == 0) continue;
      const QVector f = d.all_fields[k].flatten();
      for (std::size_t t = 0; t < flat.size(); ++t) flat[t] += combo[k] * f[t];
    }
    rel.push_back(std::move(flat));
  }
  for (const auto& v : canonical_span_basis(rel, n * n)) {
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = v[i * n + j];
    }
    d.relative_fields.emplace_back(std::move(a), 0);
  }
  std::vector<LinearDerivation> basis{d.euler};
  basis.insert(basis.end(), d.relative_fields.begin(), d.relative_fields.end());
  if (basis.size() != n) {
    throw Error(ErrorCode::NotLinearFree, "freediv", "relative fields do not have rank n-1");
  }
  const SaitoResult saito = saito_check(h, basis);
  if (!saito.ok) throw Error(ErrorCode::NotLinearFree, "freediv", "Saito determinant is not a unit multiple of h");
  d.saito_unit = saito.unit;
  for (const auto& xi : d.relative_fields) {
    if (!xi.apply(h).is_zero()) throw Error(ErrorCode::NotLinearFree, "freediv", "relative field does not annihilate h");
  }
  return d;
}

struct ReductivityReport {
  bool bracket_closed = false;
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::size_t derived_dim = 0;
  bool center_derived_split = false;  // g = z(g) + [g,g], direct
  bool trace_form_nondegenerate = false;
  bool reductive = false;
  std::string caveat = "Lie-algebra proxy: certifies reductivity of the Lie algebra of linear fields, "
                       "not of the group G_D";
};

inline ReductivityReport reductivity_probe(const std::vector<LinearDerivation>& fields) {
  ReductivityReport rep;
  if (fields.empty()) {
    rep.bracket_closed = rep.center_derived_split = rep.trace_form_nondegenerate = rep.reductive = true;
    return rep;
  }
  const std::size_t n = fields.front().dim();
  const std::size_t m = fields.size();
  std::vector<QVector> basis;
  for (const auto& f : fields) basis.push_back(f.flatten());
  const QMatrix g_rows = QMatrix::from_rows(basis, n * n);
  rep.dim = rank(g_rows);
  auto flatten = [n](const QMatrix& a) {
    QVector v;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v.push_back(a(i, j));
    }
    return v;
  };
  std::vector<QVector> brackets;
  rep.bracket_closed = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      QVector b = flatten(commutator(fields[i].matrix(), fields[j].matrix()));
      std::vector<QVector> with = basis;
      with.push_back(b);
      if (rank(QMatrix::from_rows(with, n * n)) != rep.dim) rep.bracket_closed = false;
      brackets.push_back(std::move(b));
    }
  }
  if (!rep.bracket_closed) {
    throw Error(ErrorCode::NotClosed, "freediv", "commutators leave the span of the given fields");
  }
  // center: sum_k c_k [A_k, A_l] = 0 for all l
  QMatrix center_sys(m * n * n, m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      const QVector b = flatten(commutator(fields[k].matrix(), fields[l].matrix()));
      for (std::size_t t = 0; t < n * n; ++t) center_sys(l * n * n + t, k) = b[t];
    }
  }
  std::vector<QVector> center;
  for (const auto& c : kernel_basis(center_sys)) {
    QVector v(n * n);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t t = 0; t < n * n; ++t) v[t] += c[k] * basis[k][t];
    }
    center.push_back(std::move(v));
  }
  center = canonical_span_basis(center, n * n);
  const std::vector<QVector> derived = canonical_span_basis(brackets, n * n);
  rep.center_dim = center.size();
  rep.derived_dim = derived.size();
  std::vector<QVector> both = center;
  both.insert(both.end(), derived.begin(), derived.end());
  const std::size_t sum_dim = both.empty() ? 0 : rank(QMatrix::from_rows(both, n * n));
  rep.center_derived_split = sum_dim == rep.dim && rep.center_dim + rep.derived_dim == rep.dim;
  // trace form tr(XY) on [g,g]
  QMatrix gram(derived.size(), derived.size());
  for (std::size_t a = 0; a < derived.size(); ++a) {
    for (std::size_t b = 0; b < derived.size(); ++b) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s += derived[a][i * n + j] * derived[b][j * n + i];
      }
      gram(a, b) = s;
    }
  }
  rep.trace_form_nondegenerate = derived.empty() || determinant(gram) != 0;
  rep.reductive = rep.bracket_closed && rep.center_derived_split && rep.trace_form_nondegenerate;
  return rep;
}

}  // namespace lfd

#endif  // LFD_FREEDIV_HPP
