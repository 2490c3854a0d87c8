#pragma once

#include "liebi/atiyah.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liebi::catalog {

/// An n x n matrix with entries in Q(i), stored as its real and imaginary
/// parts. Only used to realify the matrix models of su(n) and sb(n, C).
struct GaussianMatrix {
  Matrix re;
  Matrix im;

  static GaussianMatrix zero(std::size_t n) { return {Matrix(n, n), Matrix(n, n)}; }
  /// Matrix unit E_jk scaled by (a + b i).
  static GaussianMatrix unit(std::size_t n, std::size_t j, std::size_t k, const Rational& a, const Rational& b);

  std::size_t size() const { return re.rows(); }
  /// Real coordinates (Re entries row-major, then Im entries row-major).
  Vector realify() const;

  friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;
};

GaussianMatrix operator+(const GaussianMatrix& a, const GaussianMatrix& b);
GaussianMatrix operator-(const GaussianMatrix& a, const GaussianMatrix& b);
GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);
GaussianMatrix operator*(const Rational& s, const GaussianMatrix& a);
GaussianMatrix commutator(const GaussianMatrix& a, const GaussianMatrix& b);
/// Im(trace(a b)).
Rational im_trace_pairing(const GaussianMatrix& a, const GaussianMatrix& b);

/// sum_i coords[i] * basis[i]
GaussianMatrix combine(const std::vector<GaussianMatrix>& basis, const Vector& coords);

/// Coordinates of m in the given (linearly independent) basis; throws
/// std::domain_error when m is outside the span.
Vector coordinates(const std::vector<GaussianMatrix>& basis, const GaussianMatrix& m);

/// Structure constants of the real span of `basis`, which must be closed
/// under the matrix commutator.
StructureConstants structure_from_matrices(const std::vector<GaussianMatrix>& basis);

/// Largest n accepted by the sl(n, C) entries unless overridden.
inline constexpr std::size_t default_max_n = 4;

/// su(n) basis, in order: for j < k (lexicographic) A_jk = E_jk - E_kj and
/// B_jk = i(E_jk + E_kj); then H_j = i(E_jj - E_{j+1,j+1}) for j = 1..n-1.
std::vector<GaussianMatrix> su_basis(std::size_t n);
std::vector<std::string> su_basis_names(std::size_t n);
/// sb(n, C) basis, in order: for j < k (lexicographic) E_jk and iE_jk; then
/// D_j = E_jj - E_{j+1,j+1} for j = 1..n-1.
std::vector<GaussianMatrix> sb_basis(std::size_t n);
std::vector<std::string> sb_basis_names(std::size_t n);

/// Throws std::invalid_argument for n < 2 or n > max_n.
LieAlgebra su_n(std::size_t n, std::size_t max_n = default_max_n);
LieAlgebra sb_n(std::size_t n, std::size_t max_n = default_max_n);

/// Coordinate vectors, in the sb(n, C) basis above, spanning t (real
/// traceless diagonal) and n_+ (strictly upper triangular).
std::vector<Vector> t_subspace(std::size_t n);
std::vector<Vector> n_plus_subspace(std::size_t n);
/// Coordinate vectors, in the su(n) basis above, spanning i*t.
std::vector<Vector> i_t_subspace(std::size_t n);

struct ExpectedVerdicts {
  std::optional<bool> vanishing;
  std::optional<bool> c1_vanishing;
};

/// Matrix realization of both halves of a Manin triple inside sl(n, C).
struct MatrixModel {
  std::vector<GaussianMatrix> g_basis;       ///< x_i
  std::vector<GaussianMatrix> g_dual_basis;  ///< xi^i, dual to x_i under Im tr
};

struct CatalogEntry {
  std::string name;
  LieBialgebra bialgebra;
  std::string provenance;
  ExpectedVerdicts expected;
  std::optional<RMatrix> r_matrix;
  std::optional<MatrixModel> model;
  std::vector<std::pair<std::string, std::string>> metadata;
};

CatalogEntry hong_liu_3d();
CatalogEntry affine_2d_coboundary();

enum class Orientation { su_first, sb_first };

/// The Manin triple (sl(n, C), su(n), sb(n, C)) read with g = the first
/// factor. The dual constants are computed in the basis of the second factor
/// that is dual to g's basis under <X, Y> = Im tr(XY).
CatalogEntry manin_triple_sl_n(std::size_t n, Orientation orientation, std::size_t max_n = default_max_n);

/// Names of the listed entries.
std::vector<std::string> names();

class UnknownEntry : public std::runtime_error {
 public:
  explicit UnknownEntry(const std::string& name) : std::runtime_error("unknown catalog entry '" + name + "'") {}
};

/// Resolves a listed name, or "sl<n>-su-first" / "sl<n>-sb-first" for
/// 2 <= n <= max_n. Throws UnknownEntry otherwise.
CatalogEntry get(const std::string& name, std::size_t max_n = default_max_n);

}  // namespace liebi::catalog
