#include "liebi/lie_algebra.hpp"

#include "liebi/linear_solve.hpp"

#include <sstream>

namespace liebi {

StructureConstants::StructureConstants(std::size_t dim, std::vector<Rational> data)
    : dim_{dim}, data_{std::move(data)} {
  if (data_.size() != dim * dim * dim)
    throw std::invalid_argument("structure tensor must have dim^3 = " + std::to_string(dim * dim * dim) +
                                " entries, got " + std::to_string(data_.size()));
}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("bracket index out of range");
  (*this)(i, j, k) = value;
  (*this)(j, i, k) = -value;
}

std::string LieViolation::describe(const std::vector<std::string>& names) const {
  auto nm = [&](std::size_t i) { return i < names.size() ? names[i] : "#" + std::to_string(i); };
  std::ostringstream os;
  if (kind == Kind::antisymmetry) {
    os << "antisymmetry violated at (" << index[0] << "," << index[1] << "," << index[2] << "): c[" << nm(index[0])
       << "," << nm(index[1]) << "] + c[" << nm(index[1]) << "," << nm(index[0]) << "] has " << to_string(value)
       << " on " << nm(index[2]);
  } else {
    os << "Jacobi violated at (" << index[0] << "," << index[1] << "," << index[2] << "," << index[3]
       << "): Jacobiator of (" << nm(index[0]) << "," << nm(index[1]) << "," << nm(index[2]) << ") has "
       << to_string(value) << " on " << nm(index[3]);
  }
  return os.str();
}

namespace {

std::string summarize(const LieValidation& report) {
  std::string msg = "invalid Lie algebra: " + std::to_string(report.violations.size()) + " violation(s)";
  if (!report.violations.empty()) msg += "; first: " + report.violations.front().describe();
  return msg;
}

// [x_i, x_j] with its nonzero pattern, for the sparse Jacobi sweep.
std::vector<SparseRow> bracket_rows(const StructureConstants& c) {
  const std::size_t n = c.dim();
  std::vector<SparseRow> rows(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(c(i, j, k))) rows[i * n + j].push_back({k, c(i, j, k)});
  return rows;
}

}  // namespace

InvalidLieAlgebra::InvalidLieAlgebra(LieValidation report)
    : std::runtime_error(summarize(report)), report_{std::move(report)} {}

LieValidation validate_lie(const StructureConstants& c) {
  const std::size_t n = c.dim();
  LieValidation report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = c(i, j, k) + c(j, i, k);
        if (!is_zero(s))
          report.violations.push_back({LieViolation::Kind::antisymmetry, {i, j, k, 0}, s});
      }
  const bool alternating = report.ok();

  auto rows = bracket_rows(c);
  // [[x_a, x_b], x_e] as a sparse row.
  auto nested = [&](std::size_t a, std::size_t b, std::size_t e, SparseRow& acc) {
    for (const auto& m : rows[a * n + b]) axpy(acc, m.value, rows[m.col * n + e]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = alternating ? i + 1 : 0; j < n; ++j)
      for (std::size_t k = alternating ? j + 1 : 0; k < n; ++k) {
        SparseRow acc;
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        for (auto& e : acc)
          report.violations.push_back({LieViolation::Kind::jacobi, {i, j, k, e.col}, std::move(e.value)});
      }
  return report;
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, StructureConstants constants)
    : names_{std::move(basis_names)}, c_{std::move(constants)} {
  if (names_.size() != c_.dim())
    throw std::invalid_argument("basis has " + std::to_string(names_.size()) + " names but dimension is " +
                                std::to_string(c_.dim()));
  auto report = validate_lie(c_);
  if (!report.ok()) throw InvalidLieAlgebra(std::move(report));
}

std::vector<std::string> LieAlgebra::default_names(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
  return names;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, const std::string& prefix) {
  return LieAlgebra(default_names(dim, prefix), StructureConstants(dim));
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  Vector v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = c_(i, j, k);
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: vector dimension mismatch");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(c_(i, j, k))) out[k] += s * c_(i, j, k);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = c_(i, j, k);
  return m;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw std::invalid_argument("ad: vector dimension mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(x[i])) m = m + x[i] * ad(i);
  return m;
}

bool LieAlgebra::is_abelian() const { return is_zero(c_.data()); }

std::vector<Vector> LieAlgebra::center() const {
  // v is central iff [x_i, v] = 0 for every i: stack the ad matrices.
  const std::size_t n = dim();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(c_(i, j, k))) t.push_back({i * n + k, j, c_(i, j, k)});
  return kernel(SparseMatrix::from_triplets(n * n, n, std::move(t)));
}

bool LieAlgebra::is_central(const Vector& x) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!is_zero(ad(i) * x)) return false;
  return true;
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& basis, std::vector<std::string> new_names) {
  const std::size_t n = g.dim();
  if (basis.rows() != n || basis.cols() != n) throw std::invalid_argument("change_basis: shape mismatch");
  Matrix back = inverse(basis);
  StructureConstants c(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector y = g.bracket(basis.column(a), basis.column(b));
      Vector coords = back * y;
      for (std::size_t k = 0; k < n; ++k) c(a, b, k) = coords[k];
    }
  if (new_names.empty()) new_names = g.basis_names();
  return LieAlgebra(std::move(new_names), std::move(c));
}

}  // namespace liebi
