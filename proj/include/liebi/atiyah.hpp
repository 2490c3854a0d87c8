#pragma once

#include "liebi/bialgebra.hpp"

#include <optional>

namespace liebi {

// Atiyah class of the Lie pair (L = g |x| g*, A = g) with A-module E = g*.
//
// A connection datum S : g* -> End(g*) is identified with the element
// sum_j x_j (x) S(xi^j) of g (x) End(g*). Cochains of the Atiyah complex take
// values in g (x) End(g*) with the action of g_tensor_end_gdual(); a value is
// flattened as j*n^2 + end_index(r, c, n).

/// The free part of an L-connection on g*: one n x n matrix S(xi^j) per dual
/// basis vector, acting on g* coordinates.
struct ConnectionDatum {
  std::vector<Matrix> blocks;

  static ConnectionDatum zero(std::size_t n);
  static ConnectionDatum from_flat(const Vector& flat, std::size_t n);

  std::size_t dim() const { return blocks.size(); }
  Vector flatten() const;
  /// S(xi) for a general xi in g*.
  Matrix apply(const Vector& xi) const;

  friend bool operator==(const ConnectionDatum&, const ConnectionDatum&) = default;
};

/// lambda(x_i, xi^j) = ad*_{ad*_{xi^j} x_i} as an n x n matrix on g*.
Matrix lambda_block(const LieBialgebra& b, std::size_t i, std::size_t j);

struct AtiyahCocycle {
  Cochain lambda;  ///< degree 1, values in g (x) End(g*)
};

/// Builds lambda from its closed formula and checks, at construction, that it
/// equals -F o gamma and is a cocycle (std::logic_error otherwise).
AtiyahCocycle lambda_cocycle(const LieBialgebra& b);

/// R(x, xi) = -ad*_x S(xi) + S(xi) ad*_x + S(ad*_x xi) + ad*_{ad*_xi x},
/// evaluated on all basis pairs. Equals lambda + dS.
Cochain curvature(const LieBialgebra& b, const ConnectionDatum& s);

/// F = id (x) (-ad*) : g (x) g -> g (x) End(g*).
ModuleMap f_map(const LieBialgebra& b);

/// tr = id (x) trace : g (x) End(g*) -> g.
ModuleMap trace_map(const LieBialgebra& b);

/// Size and rank data of a linear system; rank_augmented > rank certifies
/// inconsistency.
struct SystemCertificate {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t rank_augmented = 0;
  bool consistent() const { return rank == rank_augmented; }
};

struct AtiyahVerdict {
  bool vanishes = false;
  std::optional<ConnectionDatum> witness;  ///< S with curvature(b, S) == 0
  SystemCertificate system;
};

/// Decides vanishing of the Atiyah class by solving dS = -lambda.
AtiyahVerdict atiyah_vanishes(const LieBialgebra& b);

/// S(xi) = -ad*_{r(xi)} for a coboundary bialgebra with gamma = dr. Throws
/// std::invalid_argument when gamma != dr.
ConnectionDatum r_matrix_connection(const LieBialgebra& b, const RMatrix& r);

struct CenterWitness {
  Vector x;      ///< central element of g
  Vector xi;     ///< element of g*
  Vector image;  ///< ad*_xi x, which is not central
};

/// Searches center basis vectors x and dual basis vectors xi (in that order)
/// for ad*_xi x outside the center. A witness forces non-vanishing.
std::optional<CenterWitness> center_obstruction(const LieBialgebra& b);

/// kappa_i = tr(ad_{x_i}). Also checks that ad*_x kappa = 0 for every x.
Vector modular_vector(const LieAlgebra& g);

/// i_kappa gamma : g -> g, contraction of kappa into the first slot of gamma,
/// as a 1-cochain in the adjoint module. Checked to be a cocycle equal to
/// -tr o lambda.
Cochain c1_representative(const LieBialgebra& b);

struct C1Verdict {
  bool vanishes = false;
  std::optional<Vector> v;  ///< ad*_kappa = ad_v on g
  SystemCertificate system;
};

/// Decides whether [i_kappa gamma] = 0 in H^1(g, g). When it is, the returned
/// v satisfies ad*_kappa = ad_v and [kappa + v, g] = 0 inside the double.
C1Verdict c1_vanishes(const LieBialgebra& b);

/// [kappa + v, x_i] = 0 in the double for all i.
bool double_condition_holds(const Double& d, const Vector& kappa, const Vector& v);

/// Solves [kappa + v, x_i] = 0 (all i) for v, assembled from the double's
/// structure constants alone.
LinearSolution solve_double_condition(const Double& d, const Vector& kappa);

/// The scalar factor of c_1, kept symbolic: c_1 = factor * [i_kappa gamma].
inline constexpr const char* c1_prefactor = "-sqrt(-1)/(2*pi)";

struct AtiyahReport {
  std::optional<bool> vanishing;             ///< absent for c1-only reports
  std::optional<ConnectionDatum> witness_S;
  bool c1_vanishing = false;
  std::optional<Vector> witness_v;
  Vector kappa;
  Cochain c1_representative;
  std::optional<CenterWitness> center_obstruction;
  std::optional<SystemCertificate> atiyah_system;
  SystemCertificate c1_system;
};

struct ReportOptions {
  bool c1_only = false;
};

/// Runs every computation above and cross-checks them; any inconsistency
/// raises std::logic_error.
AtiyahReport full_report(const LieBialgebra& b, ReportOptions options = {});

}  // namespace liebi
