#ifndef LFD_SPARSE_HPP
#define LFD_SPARSE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lfd/error.hpp"
#include "lfd/qmatrix.hpp"
#include "lfd/rational.hpp"

namespace lfd {

/// Sparse column/row vector: index -> nonzero value.
using SparseVector = std::map<std::size_t, Rational>;

inline void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  for (const auto& [i, v] : x) {
    auto [it, inserted] = y.try_emplace(i, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

/// Incremental column echelon form for large sparse systems.
///
/// Columns are added left to right; a column becomes a pivot column exactly
/// when it is independent of the columns before it, so the pivot set equals
/// the RREF pivot set of the same matrix. `solve` returns the unique solution
/// supported on the pivot columns, i.e. the leftmost-pivot canonical solution
/// with free variables zero.
class ColumnEchelon {
 public:
  explicit ColumnEchelon(std::size_t rows) : rows_(rows), owner_(rows, kNone) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t columns() const noexcept { return columns_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& b : basis_) out.push_back(b.column);
    return out;
  }

  /// Returns true when the column is a new pivot.
  bool add_column(SparseVector col) {
    check(col);
    std::vector<std::pair<std::size_t, Rational>> factors;
    reduce(col, &factors);
    const std::size_t index = columns_++;
    if (col.empty()) return false;
    const std::size_t pivot_row = col.begin()->first;
    owner_[pivot_row] = basis_.size();
    basis_.push_back({pivot_row, index, std::move(col), std::move(factors)});
    return true;
  }

  bool in_span(SparseVector v) const {
    check(v);
    reduce(v, nullptr);
    return v.empty();
  }

  /// Canonical solution as (column index, value) pairs over pivot columns.
  std::optional<std::vector<std::pair<std::size_t, Rational>>> solve(SparseVector rhs) const {
    check(rhs);
    std::vector<std::pair<std::size_t, Rational>> mu;
    reduce(rhs, &mu);
    if (!rhs.empty()) return std::nullopt;
    std::vector<Rational> coeff(basis_.size());
    for (auto& [k, m] : mu) coeff[k] += m;
    // col_{j_l} = b_l + sum_{i<l} f_{li} b_i; back-substitute from the end.
    std::vector<Rational> x(basis_.size());
    for (std::size_t l = basis_.size(); l-- > 0;) {
      x[l] = coeff[l];
      if (x[l] == 0) continue;
      for (const auto& [k, f] : basis_[l].factors) coeff[k] -= f * x[l];
    }
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t l = 0; l < basis_.size(); ++l) {
      if (x[l] != 0) out.emplace_back(basis_[l].column, x[l]);
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct BasisVector {
    std::size_t pivot_row;
    std::size_t column;
    SparseVector reduced;
    // reduced = column - sum factor * basis[k].reduced  (k earlier)
    std::vector<std::pair<std::size_t, Rational>> factors;
  };

  void check(const SparseVector& v) const {
    if (!v.empty() && v.rbegin()->first >= rows_) {
      throw Error(ErrorCode::InvalidInput, "exactalg", "sparse vector index out of range");
    }
  }

  // Eliminates every pivot row from v. Basis vector k vanishes on the pivot
  // rows of all earlier basis vectors, so eliminating in insertion order
  // never reintroduces an entry that was already cleared.
  void reduce(SparseVector& v, std::vector<std::pair<std::size_t, Rational>>* record) const {
    std::map<std::size_t, std::size_t> pending;  // basis index -> row
    for (const auto& [row, val] : v) {
      if (owner_[row] != kNone) pending.emplace(owner_[row], row);
    }
    while (!pending.empty()) {
      const auto [k, row] = *pending.begin();
      pending.erase(pending.begin());
      auto it = v.find(row);
      if (it == v.end()) continue;
      const BasisVector& b = basis_[k];
      const Rational factor = it->second / b.reduced.at(row);
      for (const auto& [r, bv] : b.reduced) {
        auto [jt, inserted] = v.try_emplace(r, -factor * bv);
        if (!inserted) {
          jt->second -= factor * bv;
          if (jt->second == 0) {
            v.erase(jt);
            continue;
          }
        }
        if (owner_[r] != kNone && owner_[r] > k) pending.emplace(owner_[r], r);
      }
      if (record != nullptr) record->emplace_back(k, factor);
    }
  }

  std::size_t rows_;
  std::size_t columns_ = 0;
  std::vector<std::size_t> owner_;
  std::vector<BasisVector> basis_;
};

}  // namespace lfd

#endif  // LFD_SPARSE_HPP
