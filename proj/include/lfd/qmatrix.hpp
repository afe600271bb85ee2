#ifndef LFD_QMATRIX_HPP
#define LFD_QMATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfd/error.hpp"
#include "lfd/rational.hpp"

namespace lfd {

using QVector = std::vector<Rational>;

/// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::InvalidInput, "exactalg", "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows) {
    QMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j].at(i);
    }
    return m;
  }

  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const { return QVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  QVector column(std::size_t j) const {
    QVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (v != 0) return false;
    }
    return true;
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "exactalg", "matrix product dimension mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend QVector operator*(const QMatrix& a, const QVector& v) {
    if (a.cols_ != v.size()) throw Error(ErrorCode::InvalidInput, "exactalg", "matrix-vector dimension mismatch");
    QVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (a(i, j) != 0) out[i] += a(i, j) * v[j];
      }
    }
    return out;
  }

  friend QMatrix operator+(QMatrix a, const QMatrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend QMatrix operator-(QMatrix a, const QMatrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend QMatrix operator*(const Rational& s, QMatrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const QMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw Error(ErrorCode::InvalidInput, "exactalg", "matrix shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with the leftmost-pivot rule: columns are scanned
/// left to right and the first remaining row with a nonzero entry is used.
struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

inline RowEchelon rref(QMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const QMatrix& a) { return rref(a).pivot_cols.size(); }

/// RREF-canonical kernel basis: one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
inline std::vector<QVector> kernel_basis(const QMatrix& a) {
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Canonical solution of A x = b (free variables zero), or nullopt.
inline std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidInput, "exactalg", "right-hand side has wrong length");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = rref(std::move(aug));
  QVector x(a.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == a.cols()) return std::nullopt;
    x[e.pivot_cols[r]] = e.reduced(r, a.cols());
  }
  return x;
}

/// Rows of the RREF of the given vectors (zero rows dropped): a canonical
/// basis of their span.
inline std::vector<QVector> canonical_span_basis(const std::vector<QVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const RowEchelon e = rref(QMatrix::from_rows(vectors, dim));
  std::vector<QVector> out;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

inline Rational determinant(QMatrix m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "exactalg", "determinant of non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

/// Inverse, or nullopt when singular.
inline std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "exactalg", "inverse of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

}  // namespace lfd

#endif  // LFD_QMATRIX_HPP
