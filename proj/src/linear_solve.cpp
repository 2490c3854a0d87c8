#include "liebi/linear_solve.hpp"

#include <algorithm>
#include <stdexcept>

namespace liebi {

namespace {

const Rational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

}  // namespace

Echelon row_reduce(std::vector<SparseRow> rows, std::size_t cols) {
  Echelon out;
  out.cols = cols;

  // by_lead[c] holds the rows whose first nonzero sits in column c.
  std::vector<std::vector<std::size_t>> by_lead(cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) by_lead.at(rows[r].front().col).push_back(r);

  // Forward elimination.
  for (std::size_t c = 0; c < cols; ++c) {
    auto& bucket = by_lead[c];
    if (bucket.empty()) continue;
    auto pivot_it = std::min_element(bucket.begin(), bucket.end());
    std::size_t pivot = *pivot_it;
    SparseRow prow = std::move(rows[pivot]);
    Rational inv = 1 / prow.front().value;
    for (auto& e : prow) e.value *= inv;

    for (std::size_t r : bucket) {
      if (r == pivot) continue;
      Rational factor = -rows[r].front().value;
      axpy(rows[r], factor, prow);
      if (!rows[r].empty()) by_lead[rows[r].front().col].push_back(r);
    }
    bucket.clear();
    bucket.shrink_to_fit();
    out.rows.push_back(std::move(prow));
    out.pivot_cols.push_back(c);
  }

  // Back substitution: clear every pivot column above its pivot.
  for (std::size_t p = out.rows.size(); p-- > 0;) {
    const std::size_t c = out.pivot_cols[p];
    for (std::size_t q = 0; q < p; ++q) {
      const Rational* v = find_entry(out.rows[q], c);
      if (!v) continue;
      Rational factor = -*v;
      axpy(out.rows[q], factor, out.rows[p]);
    }
  }
  return out;
}

namespace {

std::vector<SparseRow> to_rows(const SparseMatrix& a) {
  std::vector<SparseRow> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows[r] = a.row(r);
  return rows;
}

std::vector<Vector> kernel_from_echelon(const Echelon& e, std::size_t cols) {
  std::vector<std::ptrdiff_t> free_index(cols, -1);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols)
    if (c < cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    free_index[c] = static_cast<std::ptrdiff_t>(basis.size());
    basis.push_back(unit_vector(cols, c));
  }
  for (std::size_t p = 0; p < e.rows.size(); ++p) {
    const std::size_t pc = e.pivot_cols[p];
    if (pc >= cols) continue;
    for (const auto& entry : e.rows[p]) {
      if (entry.col >= cols || entry.col == pc) continue;
      basis[static_cast<std::size_t>(free_index[entry.col])][pc] = -entry.value;
    }
  }
  return basis;
}

}  // namespace

LinearSolution solve(const SparseMatrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: A has " + std::to_string(a.rows()) +
                                                        " rows but b has length " + std::to_string(b.size()));
  const std::size_t n = a.cols();
  auto rows = to_rows(a);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!is_zero(b[r])) rows[r].push_back({n, b[r]});

  Echelon e = row_reduce(std::move(rows), n + 1);

  LinearSolution sol;
  sol.rank_augmented = e.rank();
  sol.rank = (!e.pivot_cols.empty() && e.pivot_cols.back() == n) ? e.rank() - 1 : e.rank();
  if (sol.rank == sol.rank_augmented) {
    Vector x(n);
    for (std::size_t p = 0; p < e.rows.size(); ++p)
      if (!e.rows[p].empty() && e.rows[p].back().col == n) x[e.pivot_cols[p]] = e.rows[p].back().value;
    sol.particular = std::move(x);
  }
  sol.kernel_basis = kernel_from_echelon(e, n);
  return sol;
}

LinearSolution solve(const Matrix& a, const Vector& b) { return solve(SparseMatrix::from_dense(a), b); }

std::size_t rank(const SparseMatrix& a) { return row_reduce(to_rows(a), a.cols()).rank(); }

std::size_t rank(const Matrix& a) { return rank(SparseMatrix::from_dense(a)); }

std::vector<Vector> kernel(const SparseMatrix& a) {
  return kernel_from_echelon(row_reduce(to_rows(a), a.cols()), a.cols());
}

std::vector<Vector> kernel(const Matrix& a) { return kernel(SparseMatrix::from_dense(a)); }

}  // namespace liebi
