#pragma once

#include "liebi/bialgebra.hpp"

#include <random>

namespace liebi::testing {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int bound = 3);
Vector random_vector(Rng& rng, std::size_t n, int bound = 3);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 3);
/// Random invertible matrix with small integer entries.
Matrix random_invertible(Rng& rng, std::size_t n);

/// A random Lie algebra of dimension n <= 4: a named low-dimensional type
/// (or a direct sum of them) in a random basis.
LieAlgebra random_lie_algebra(Rng& rng, std::size_t n);

/// Random valid Lie bialgebra with dim <= max_dim. Candidates come from
/// perturbing and rescaling known pairs, random pairings of small algebras
/// kept only when validate_bialgebra and build_double accept them, direct
/// sums, and random changes of basis.
LieBialgebra random_bialgebra(Rng& rng, std::size_t max_dim = 4);

/// Direct sum of two bialgebras.
LieBialgebra direct_sum(const LieBialgebra& a, const LieBialgebra& b);

/// Random representation of g: adjoint, coadjoint, trivial, or a tensor,
/// dual or End built from those, kept at space dimension <= max_space.
Representation random_module(Rng& rng, const AlgebraPtr& g, std::size_t max_space = 16);

Cochain random_cochain(Rng& rng, const Representation& module, int degree);

}  // namespace liebi::testing
