#include "liebi/matrix.hpp"

#include "liebi/linear_solve.hpp"

#include <algorithm>
#include <stdexcept>

namespace liebi {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_{rows}, cols_{cols}, data_{std::move(entries)} {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return liebi::is_zero(data_); }

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Matrix operator-(const Matrix& a) { return Rational{-1} * a; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j)) && !is_zero(v[j])) r[i] += a(i, j) * v[j];
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rational trace(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    auto sol = solve(a, unit_vector(n, c));
    if (!sol.particular || !sol.kernel_basis.empty()) throw std::domain_error("matrix is singular");
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = (*sol.particular)[r];
  }
  return inv;
}

// ---------------------------------------------------------------------------

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  SparseMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& x, const Triplet& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  });
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet index out of range");
    auto& row = m.rows_[t.row];
    if (!row.empty() && row.back().col == t.col)
      row.back().value += t.value;
    else
      row.push_back({t.col, std::move(t.value)});
  }
  for (auto& row : m.rows_)
    std::erase_if(row, [](const SparseEntry& e) { return liebi::is_zero(e.value); });
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (!liebi::is_zero(d(r, c))) m.rows_[r].push_back({c, d(r, c)});
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, Rational{1}});
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return {};
}

Matrix SparseMatrix::to_dense() const {
  Matrix d(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& e : rows_[r]) d(r, e.col) = e.value;
  return d;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& e : rows_[r]) t.rows_[e.col].push_back({r, e.value});
  return t;
}

SparseMatrix SparseMatrix::vstack(const std::vector<SparseMatrix>& blocks) {
  if (blocks.empty()) return {};
  SparseMatrix m(0, blocks.front().cols());
  for (const auto& b : blocks) {
    if (b.cols() != m.cols_) throw std::invalid_argument("vstack column mismatch");
    m.rows_.insert(m.rows_.end(), b.rows_.begin(), b.rows_.end());
  }
  return m;
}

void axpy(SparseRow& dst, const Rational& s, const SparseRow& src) {
  if (is_zero(s) || src.empty()) return;
  SparseRow out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->col < b->col)) {
      out.push_back(std::move(*a++));
    } else if (a == dst.end() || b->col < a->col) {
      out.push_back({b->col, s * b->value});
      ++b;
    } else {
      a->value += s * b->value;
      if (!is_zero(a->value)) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

Vector operator*(const SparseMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("sparse matrix-vector shape mismatch");
  Vector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& e : a.row(i))
      if (!is_zero(v[e.col])) r[i] += e.value * v[e.col];
  return r;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("sparse product shape mismatch");
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow acc;
    for (const auto& e : a.row(i)) axpy(acc, e.value, b.row(e.col));
    for (auto& e : acc) out.push_back({i, e.col, std::move(e.value)});
  }
  return SparseMatrix::from_triplets(a.rows(), b.cols(), std::move(out));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("sparse shape mismatch");
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow acc = a.row(i);
    axpy(acc, Rational{1}, b.row(i));
    for (auto& e : acc) out.push_back({i, e.col, std::move(e.value)});
  }
  return SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(out));
}

SparseMatrix operator*(const Rational& s, const SparseMatrix& a) {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& e : a.row(i)) out.push_back({i, e.col, s * e.value});
  return SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(out));
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + Rational{-1} * b; }

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

}  // namespace liebi
