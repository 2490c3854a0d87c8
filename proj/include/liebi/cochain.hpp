#pragma once

#include "liebi/linear_solve.hpp"
#include "liebi/representation.hpp"

#include <optional>

namespace liebi {

/// Alternating k-cochain on g with values in a module V, for k = 0, 1, 2.
///
/// Degree 0 stores one vector, degree 1 stores f(x_i) for every i, degree 2
/// stores f(x_i, x_j) for i < j only (the other slots follow by antisymmetry).
class Cochain {
 public:
  Cochain(Representation module, int degree, std::vector<Vector> values);

  static Cochain zero(Representation module, int degree);
  static Cochain from_flat(Representation module, int degree, const Vector& flat);

  int degree() const { return degree_; }
  const Representation& module() const { return module_; }
  std::size_t algebra_dim() const { return module_.algebra().dim(); }

  const Vector& value() const;                           ///< degree 0
  const Vector& at(std::size_t i) const;                 ///< degree 1
  Vector at(std::size_t i, std::size_t j) const;         ///< degree 2
  const std::vector<Vector>& values() const { return values_; }

  /// Concatenation of the stored slots; index of (slot, a) is slot*dim(V) + a.
  Vector flatten() const;
  bool is_zero() const;

  static std::size_t slot_count(std::size_t n, int degree);
  static std::size_t pair_slot(std::size_t i, std::size_t j, std::size_t n);  ///< i < j

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.module_.space_dim() == b.module_.space_dim() && a.values_ == b.values_;
  }

 private:
  Representation module_;
  int degree_;
  std::vector<Vector> values_;
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a);

/// Chevalley-Eilenberg differential C^k -> C^{k+1} for k <= 1.
///   (df)(x)      = rho(x) f
///   (df)(x, y)   = rho(x) f(y) - rho(y) f(x) - f([x, y])
/// Throws std::invalid_argument for other degrees.
Cochain coboundary(const Cochain& f);

/// The same differential as a matrix on flattened cochains.
SparseMatrix coboundary_matrix(const Representation& module, int degree);

bool is_cocycle(const Cochain& f);

/// (f o c)(x) = f(c(x)) for a module map f whose source is c's module.
Cochain push_forward(const ModuleMap& f, const Cochain& c);

struct PrimitiveSearch {
  std::optional<Cochain> primitive;
  std::size_t rank = 0;            ///< rank of the degree-0 differential
  std::size_t rank_augmented = 0;  ///< rank after appending f; larger iff no primitive
};

/// Looks for a 0-cochain p with dp = f. Requires f to be a 1-cocycle
/// (std::invalid_argument otherwise). The returned p is the deterministic
/// particular solution of the linear system, not a canonical choice.
PrimitiveSearch solve_primitive(const Cochain& f);
std::optional<Cochain> find_primitive(const Cochain& f);

struct H1Dimensions {
  std::size_t cochains = 0;       ///< dim C^1
  std::size_t rank_d0 = 0;        ///< dim B^1
  std::size_t rank_d1 = 0;
  std::size_t cocycles = 0;       ///< dim Z^1 = dim C^1 - rank d1
  std::size_t h1 = 0;             ///< dim Z^1 - dim B^1
};

H1Dimensions h1_dimensions(const Representation& module);
inline std::size_t h1_dim(const Representation& module) { return h1_dimensions(module).h1; }

}  // namespace liebi
