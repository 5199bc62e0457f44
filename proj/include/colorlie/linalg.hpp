#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "colorlie/scalar.hpp"

namespace colorlie {

/// Dense matrix over Q(zeta_m). Sized for desk-scale exact computation.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// Exact rank by fraction-free (Bareiss) elimination, pivoting on the first
/// nonzero of each column.
std::size_t rank_fraction_free(QMatrix m);

/// Basis of the right kernel {x : Mx = 0}, via exact Gauss-Jordan.
std::vector<std::vector<Scalar>> kernel_basis(QMatrix m);

/// Any exact solution of Mx = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(QMatrix m, std::vector<Scalar> b);

/// One sparse equation sum_j lhs[j] x_j = rhs.
struct SparseRow {
  std::map<int, Scalar> lhs;
  Scalar rhs;
};

/// Exact consistency of a sparse linear system (pivoting on short rows).
bool sparse_system_consistent(std::vector<SparseRow> rows);

}  // namespace colorlie
