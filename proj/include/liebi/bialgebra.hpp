#pragma once

#include "liebi/cochain.hpp"

#include <array>
#include <optional>
#include <string>

namespace liebi {

/// A Lie bialgebra (g, g*) with g* presented in the basis xi^i dual to x_i.
///
/// The cobracket is read off the dual constants d, [xi^j, xi^k] = sum_i
/// d(j,k,i) xi^i, as gamma(x_i) = sum_{j,k} d(j,k,i) x_j (x) x_k. It is stored
/// as a 1-cochain with values in g (x) g (index j*n + k) under ad (x) id + id (x) ad.
///
/// Instances are only produced by validate_bialgebra / make_bialgebra /
/// coboundary_bialgebra, so gamma is always an antisymmetric cocycle.
class LieBialgebra {
 public:
  const LieAlgebra& g() const { return *g_; }
  const LieAlgebra& g_dual() const { return *g_dual_; }
  const AlgebraPtr& g_ptr() const { return g_; }
  const AlgebraPtr& g_dual_ptr() const { return g_dual_; }
  std::size_t dim() const { return g_->dim(); }
  const Cochain& gamma() const { return gamma_; }

  /// ad*_{xi^a} acting on g coordinates: <ad*_xi x, eta> = <x, [xi, eta]>.
  Matrix ad_star_dual(std::size_t a) const { return g_dual_->ad_star(a); }
  Matrix ad_star_dual(const Vector& xi) const { return g_dual_->ad_star(xi); }

  friend bool operator==(const LieBialgebra& a, const LieBialgebra& b) {
    return *a.g_ == *b.g_ && *a.g_dual_ == *b.g_dual_;
  }

 private:
  friend struct BialgebraFactory;
  LieBialgebra(AlgebraPtr g, AlgebraPtr g_dual, Cochain gamma)
      : g_{std::move(g)}, g_dual_{std::move(g_dual)}, gamma_{std::move(gamma)} {}

  AlgebraPtr g_;
  AlgebraPtr g_dual_;
  Cochain gamma_;
};

/// gamma(x_i) in g (x) g, read from the dual constants.
Cochain cobracket_from_dual(const AlgebraPtr& g, const LieAlgebra& g_dual);

struct BialgebraValidation {
  std::optional<LieBialgebra> bialgebra;
  std::vector<std::string> violations;
  bool ok() const { return bialgebra.has_value(); }
};

/// Checks that gamma lands in g ^ g and that d gamma = 0 in g (x) g.
/// Throws std::invalid_argument when the dimensions differ.
BialgebraValidation validate_bialgebra(AlgebraPtr g, AlgebraPtr g_dual);

class InvalidBialgebra : public std::runtime_error {
 public:
  explicit InvalidBialgebra(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// validate_bialgebra, throwing InvalidBialgebra on failure.
LieBialgebra make_bialgebra(AlgebraPtr g, AlgebraPtr g_dual);

/// Classical r-matrix r = sum r(j,k) x_j (x) x_k.
struct RMatrix {
  Matrix r;
  Vector flatten() const;  ///< index j*n + k
  /// Contraction of xi with the first tensor slot: sum_{j,k} xi_j r(j,k) x_k.
  Vector contract_first(const Vector& xi) const;
};

/// gamma := d r. Returns the bialgebra whose dual bracket is induced by
/// gamma, or the list of failures (non-antisymmetric image, Jacobi of the
/// induced bracket).
BialgebraValidation coboundary_bialgebra(AlgebraPtr g, const RMatrix& r,
                                          std::vector<std::string> dual_names = {});

/// (g*, g): the dual bialgebra. Failure means an implementation bug and
/// raises std::logic_error.
LieBialgebra swap(const LieBialgebra& b);

/// Re-expresses b in the basis y_j = sum_i basis(i, j) x_i of g and the
/// corresponding dual basis of g*.
LieBialgebra change_basis(const LieBialgebra& b, const Matrix& basis);

/// The Drinfeld double g |x| g* on x_1..x_n, xi^1..xi^n with mixed bracket
/// [x, xi] = -ad*_x xi + ad*_xi x and pairing <x + xi, y + eta> = <x, eta> + <xi, y>.
struct Double {
  AlgebraPtr algebra;
  Matrix pairing;   ///< 2n x 2n
  std::size_t n = 0;  ///< g occupies [0, n), g* occupies [n, 2n)

  Vector embed_g(const Vector& x) const;
  Vector embed_g_dual(const Vector& xi) const;
};

/// Raised when the two brackets do not assemble into a quadratic Lie algebra.
class NotMatchedPair : public std::runtime_error {
 public:
  NotMatchedPair(const std::string& what, std::array<std::size_t, 3> witness)
      : std::runtime_error(what), witness_{witness} {}
  /// Basis triple of the double where Jacobi or invariance fails.
  const std::array<std::size_t, 3>& witness() const { return witness_; }

 private:
  std::array<std::size_t, 3> witness_;
};

/// Structure constants of the double, before any validation.
StructureConstants double_constants(const LieAlgebra& g, const LieAlgebra& g_dual);

/// Assembles and validates the double (Jacobi, invariance, isotropy).
Double build_double(const LieBialgebra& b);

}  // namespace liebi
