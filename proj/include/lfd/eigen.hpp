#ifndef LFD_EIGEN_HPP
#define LFD_EIGEN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lfd/error.hpp"
#include "lfd/qmatrix.hpp"
#include "lfd/upoly.hpp"

namespace lfd {

/// vectors[0] is an eigenvector and (A - lambda) vectors[k+1] = vectors[k].
struct JordanChain {
  Rational eigenvalue;
  std::vector<QVector> vectors;
};

struct Eigenstructure {
  std::vector<JordanChain> chains;  // eigenvalues ascending, longer chains first

  /// Columns are the chain vectors in order; U^{-1} A U is the Jordan form.
  QMatrix basis(std::size_t n) const {
    std::vector<QVector> cols;
    for (const auto& ch : chains) cols.insert(cols.end(), ch.vectors.begin(), ch.vectors.end());
    return QMatrix::from_columns(cols, n);
  }

  /// Jordan form matching basis(): eigenvalues on the diagonal, ones on the
  /// superdiagonal inside each chain.
  QMatrix jordan_form(std::size_t n) const {
    QMatrix j(n, n);
    std::size_t pos = 0;
    for (const auto& ch : chains) {
      for (std::size_t k = 0; k < ch.vectors.size(); ++k) {
        j(pos + k, pos + k) = ch.eigenvalue;
        if (k > 0) j(pos + k - 1, pos + k) = 1;
      }
      pos += ch.vectors.size();
    }
    return j;
  }

  /// Eigenvalue of each basis column.
  std::vector<Rational> column_eigenvalues() const {
    std::vector<Rational> out;
    for (const auto& ch : chains) out.insert(out.end(), ch.vectors.size(), ch.eigenvalue);
    return out;
  }
};

namespace detail {

inline bool in_span(const std::vector<QVector>& spanning, const QVector& v, std::size_t n) {
  if (spanning.empty()) {
    for (const auto& x : v) {
      if (x != 0) return false;
    }
    return true;
  }
  std::vector<QVector> with = spanning;
  with.push_back(v);
  return rank(QMatrix::from_rows(spanning, n)) == rank(QMatrix::from_rows(with, n));
}

inline QMatrix matrix_power(const QMatrix& a, std::size_t k) {
  QMatrix r = QMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

}  // namespace detail

/// Generalized eigenvectors grouped into Jordan chains. Requires the
/// characteristic polynomial to split over Q.
inline Eigenstructure rational_eigenstructure(const QMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "exactalg", "eigenstructure of non-square matrix");
  const std::size_t n = a.rows();
  const FactoredRoots fr = rational_roots(char_poly(a));
  if (fr.remainder.degree() > 0) {
    throw Error(ErrorCode::NonRationalSpectrum, "exactalg",
                "characteristic polynomial has a factor without rational roots: " + fr.remainder.to_string());
  }
  Eigenstructure out;
  for (const auto& [lambda, mult] : fr.roots) {
    const QMatrix nil = a - lambda * QMatrix::identity(n);
    // kernels[j] = basis of ker N^j
    std::vector<std::vector<QVector>> kernels{{}};
    for (std::size_t j = 1;; ++j) {
      kernels.push_back(kernel_basis(detail::matrix_power(nil, j)));
      if (kernels.back().size() == mult) break;
      if (j > n) throw Error(ErrorCode::InvalidInput, "exactalg", "generalized eigenspace did not stabilize");
    }
    const std::size_t top = kernels.size() - 1;
    struct Top {
      QVector v;
      std::size_t level;
    };
    std::vector<Top> tops;
    for (std::size_t j = top; j >= 1; --j) {
      std::vector<QVector> spanning = kernels[j - 1];
      for (const auto& t : tops) spanning.push_back(detail::matrix_power(nil, t.level - j) * t.v);
      for (const auto& v : kernels[j]) {
        if (!detail::in_span(spanning, v, n)) {
          tops.push_back({v, j});
          spanning.push_back(v);
        }
      }
    }
    for (const auto& t : tops) {
      JordanChain ch{lambda, {}};
      for (std::size_t k = t.level; k-- > 0;) ch.vectors.push_back(detail::matrix_power(nil, k) * t.v);
      out.chains.push_back(std::move(ch));
    }
  }
  return out;
}

}  // namespace lfd

#endif  // LFD_EIGEN_HPP
