#pragma once

#include "liebi/matrix.hpp"

#include <optional>
#include <vector>

namespace liebi {

/// Full affine solution set of A x = b.
///
/// `particular` is absent exactly when the system is inconsistent, in which
/// case `rank_augmented > rank` certifies it. Kernel vectors are the standard
/// basis of the null space read off the reduced row echelon form: one vector
/// per free column, with a 1 in that column.
struct LinearSolution {
  std::optional<Vector> particular;
  std::vector<Vector> kernel_basis;
  std::size_t rank = 0;            ///< rank(A)
  std::size_t rank_augmented = 0;  ///< rank([A | b])

  bool consistent() const { return particular.has_value(); }
};

/// Reduced row echelon form over the rationals.
///
/// Pivoting rule: columns are scanned left to right; the pivot of a column is
/// the lowest-indexed unused row with a nonzero entry there. Pivot rows are
/// scaled to a leading 1 and cleared above and below.
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;           ///< one per pivot, in pivot-column order
  std::vector<std::size_t> pivot_cols;   ///< increasing

  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon row_reduce(std::vector<SparseRow> rows, std::size_t cols);

LinearSolution solve(const Matrix& a, const Vector& b);
LinearSolution solve(const SparseMatrix& a, const Vector& b);

std::size_t rank(const Matrix& a);
std::size_t rank(const SparseMatrix& a);

/// Basis of {v : A v = 0}.
std::vector<Vector> kernel(const SparseMatrix& a);
std::vector<Vector> kernel(const Matrix& a);

}  // namespace liebi
