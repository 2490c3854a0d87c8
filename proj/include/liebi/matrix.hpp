#pragma once

#include "liebi/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace liebi {

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_{rows}, cols_{cols}, data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Rows given as nested lists; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& entries() const { return data_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);
Rational trace(const Matrix& a);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& a);

struct SparseEntry {
  std::size_t col;
  Rational value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// A row of nonzero entries with strictly increasing column indices.
using SparseRow = std::vector<SparseEntry>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Row-compressed sparse matrix. Rows never store explicit zeros.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_{cols}, rows_(rows) {}

  /// Duplicate (row, col) pairs are summed; zero sums are dropped.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  const SparseRow& row(std::size_t r) const { return rows_[r]; }
  Rational at(std::size_t r, std::size_t c) const;

  Matrix to_dense() const;
  SparseMatrix transpose() const;
  bool is_zero() const { return nonzeros() == 0; }

  /// Stacks matrices with equal column counts on top of each other.
  static SparseMatrix vstack(const std::vector<SparseMatrix>& blocks);

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

Vector operator*(const SparseMatrix& a, const Vector& v);
SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator*(const Rational& s, const SparseMatrix& a);
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// dst += s * src, both sorted sparse rows.
void axpy(SparseRow& dst, const Rational& s, const SparseRow& src);

}  // namespace liebi
