#pragma once

#include "liebi/matrix.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace liebi {

/// Structure tensor c with [x_i, x_j] = sum_k c(i, j, k) x_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_{dim}, data_(dim * dim * dim) {}
  StructureConstants(std::size_t dim, std::vector<Rational> data);

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& data() const { return data_; }

  /// Sets [x_i, x_j] = value * x_k and [x_j, x_i] = -value * x_k.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

struct LieViolation {
  enum class Kind { antisymmetry, jacobi };
  Kind kind;
  /// (i, j, k) for antisymmetry; (i, j, k, l) for Jacobi, where l is the
  /// output component of the Jacobiator of (x_i, x_j, x_k).
  std::array<std::size_t, 4> index{};
  Rational value;  ///< c(i,j,k)+c(j,i,k), or the Jacobiator component

  std::string describe(const std::vector<std::string>& names = {}) const;
};

struct LieValidation {
  std::vector<LieViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Lists every antisymmetry violation (i <= j) and every nonzero Jacobiator
/// component. When antisymmetry holds the Jacobiator is alternating, so only
/// i < j < k is scanned; otherwise all ordered triples are.
LieValidation validate_lie(const StructureConstants& c);

class InvalidLieAlgebra : public std::runtime_error {
 public:
  explicit InvalidLieAlgebra(LieValidation report);
  const LieValidation& report() const { return report_; }

 private:
  LieValidation report_;
};

/// Finite-dimensional Lie algebra over Q on a named basis. Construction
/// validates antisymmetry and Jacobi and throws InvalidLieAlgebra otherwise.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> basis_names, StructureConstants constants);

  /// Abelian algebra with basis names `prefix1 .. prefixN`.
  static LieAlgebra abelian(std::size_t dim, const std::string& prefix = "x");
  static std::vector<std::string> default_names(std::size_t dim, const std::string& prefix);

  std::size_t dim() const { return c_.dim(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const StructureConstants& constants() const { return c_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Coordinates of [x_i, x_j].
  Vector bracket(std::size_t i, std::size_t j) const;

  /// Matrix of ad_{x_i}: column j holds the coordinates of [x_i, x_j].
  Matrix ad(std::size_t i) const;
  Matrix ad(const Vector& x) const;
  /// Transpose of ad_x, i.e. the dual map acting on the dual-basis
  /// coordinates: <ad*_x xi, y> = <xi, [x, y]>. The coadjoint action is -ad*.
  Matrix ad_star(std::size_t i) const { return ad(i).transpose(); }
  Matrix ad_star(const Vector& x) const { return ad(x).transpose(); }

  bool is_abelian() const;
  /// Basis of the center, as coordinate vectors.
  std::vector<Vector> center() const;
  bool is_central(const Vector& x) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.c_ == b.c_; }

 private:
  std::vector<std::string> names_;
  StructureConstants c_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Expresses the algebra in the basis y_j = sum_i basis(i, j) x_i.
/// `basis` must be invertible.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& basis, std::vector<std::string> new_names = {});

}  // namespace liebi
