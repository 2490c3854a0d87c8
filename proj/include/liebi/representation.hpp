#pragma once

#include "liebi/lie_algebra.hpp"

#include <optional>
#include <utility>

namespace liebi {

/// A g-module: one matrix rho(x_i) per basis vector of g.
///
/// Constructors below always produce homomorphisms; the raw constructor only
/// checks shapes, use homomorphism_defect() to validate user input.
class Representation {
 public:
  Representation(AlgebraPtr algebra, std::size_t space_dim, std::vector<SparseMatrix> rho);

  const LieAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t space_dim() const { return dim_; }
  const SparseMatrix& rho(std::size_t i) const { return rho_[i]; }
  const std::vector<SparseMatrix>& rho() const { return rho_; }

  /// Action of a general element x = sum x_i basis_i.
  SparseMatrix act(const Vector& x) const;

  /// First (i, j) with rho([x_i,x_j]) != [rho(x_i), rho(x_j)], if any.
  std::optional<std::pair<std::size_t, std::size_t>> homomorphism_defect() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<SparseMatrix> rho_;
};

/// True when both refer to the same algebra (by identity or by constants).
bool same_algebra(const Representation& a, const Representation& b);

Representation trivial_rep(AlgebraPtr g, std::size_t space_dim);
/// rho[i] = ad_{x_i}, i.e. rho[i](k, j) = c(i, j, k).
Representation adjoint(AlgebraPtr g);
/// rho[i] = -(ad_{x_i})^T on dual-basis coordinates.
Representation coadjoint(AlgebraPtr g);
/// rho_{V*} = -rho_V^T.
Representation dual_rep(const Representation& v);
/// rho_{V (x) W} = rho_V (x) id + id (x) rho_W; index of v_a (x) w_b is a*dim(W) + b.
Representation tensor_rep(const Representation& v, const Representation& w);
/// rho_{End(V)}(x) T = [rho_V(x), T]. End(V) is flattened column-major:
/// T(r, c) sits at index c*dim(V) + r.
Representation end_rep(const Representation& v);
/// The module g (x) g with ad (x) id + id (x) ad.
Representation ad2(AlgebraPtr g);
/// The module g (x) End(g*) with x.(y (x) T) = [x,y] (x) T + y (x) [-ad*_x, T].
Representation g_tensor_end_gdual(AlgebraPtr g);

/// rho'(x) = P^{-1} rho(x) P: the same module in the basis given by P's columns.
Representation change_module_basis(const Representation& v, const Matrix& p);

/// Column-major flattening used for End(V).
std::size_t end_index(std::size_t row, std::size_t col, std::size_t dim);
Vector flatten_end(const Matrix& t);
Matrix unflatten_end(const Vector& v, std::size_t dim);

/// A linear map between two g-modules over the same algebra.
struct ModuleMap {
  Representation source;
  Representation target;
  SparseMatrix matrix;  ///< target.space_dim x source.space_dim
};

struct MorphismCheck {
  bool equivariant = true;
  std::optional<std::size_t> first_violation;  ///< basis index i where f rho_s(x_i) != rho_t(x_i) f
};

/// Throws std::invalid_argument on dimension or algebra mismatch.
MorphismCheck is_module_morphism(const ModuleMap& f);

}  // namespace liebi
