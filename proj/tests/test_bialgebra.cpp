#include "liebi/catalog.hpp"
#include "random_bialgebra.hpp"

#include <doctest.h>

using namespace liebi;
using liebi::testing::Rng;

namespace {

AlgebraPtr algebra(StructureConstants c, const std::string& prefix = "x") {
  return std::make_shared<const LieAlgebra>(LieAlgebra::default_names(c.dim(), prefix), std::move(c));
}

void check_bialgebra_invariants(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  CHECK(is_cocycle(b.gamma()));
  for (std::size_t i = 0; i < n; ++i) {
    const Vector& g = b.gamma().at(i);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(g[j * n + k] == -g[k * n + j]);
        CHECK(g[j * n + k] == b.g_dual().c(j, k, i));
      }
    // i_xi gamma(x) = ad*_xi x
    for (std::size_t a = 0; a < n; ++a) {
      Vector contracted(n);
      for (std::size_t k = 0; k < n; ++k) contracted[k] = g[a * n + k];
      CHECK(contracted == b.ad_star_dual(a) * unit_vector(n, i));
    }
  }

  auto d = build_double(b);
  REQUIRE(d.algebra->dim() == 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(d.algebra->c(i, j, k) == b.g().c(i, j, k));
        CHECK(is_zero(d.algebra->c(i, j, n + k)));
        CHECK(d.algebra->c(n + i, n + j, n + k) == b.g_dual().c(i, j, k));
        CHECK(is_zero(d.algebra->c(n + i, n + j, k)));
      }
  // mixed bracket [x_i, xi^a] = -ad*_{x_i} xi^a + ad*_{xi^a} x_i
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      Vector mixed = d.algebra->bracket(i, n + a);
      Vector expected_g = b.ad_star_dual(a) * unit_vector(n, i);
      Vector expected_dual = -(b.g().ad_star(i) * unit_vector(n, a));
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(mixed[k] == expected_g[k]);
        CHECK(mixed[n + k] == expected_dual[k]);
      }
    }
  // invariance of the pairing over all basis triples
  const std::size_t m = 2 * n;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t c = 0; c < m; ++c) {
        Vector ab = d.algebra->bracket(a, p);
        Vector ac = d.algebra->bracket(a, c);
        CHECK(is_zero(dot(d.pairing * ab, unit_vector(m, c)) + dot(d.pairing * unit_vector(m, p), ac)));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(is_zero(d.pairing(i, j)));
      CHECK(is_zero(d.pairing(n + i, n + j)));
      CHECK(d.pairing(i, n + j) == (i == j ? 1 : 0));
    }
}

}  // namespace

TEST_CASE("validate_bialgebra examples") {
  auto ab = validate_bialgebra(algebra(StructureConstants(3)), algebra(StructureConstants(3), "xi"));
  REQUIRE(ab.ok());
  CHECK(ab.bialgebra->gamma().is_zero());
  auto dbl = build_double(*ab.bialgebra);
  CHECK(dbl.algebra->is_abelian());

  auto hl = catalog::hong_liu_3d().bialgebra;
  check_bialgebra_invariants(hl);

  // perturbation search: a single extra dual constant that keeps g* a Lie
  // algebra but destroys the cocycle condition
  std::optional<StructureConstants> perturbed;
  for (std::size_t i = 0; i < 3 && !perturbed; ++i)
    for (std::size_t j = i + 1; j < 3 && !perturbed; ++j)
      for (std::size_t k = 0; k < 3 && !perturbed; ++k) {
        auto d = hl.g_dual().constants();
        d.set_bracket(i, j, k, d(i, j, k) + 1);
        if (validate_lie(d).ok() && !validate_bialgebra(hl.g_ptr(), algebra(d, "xi")).ok()) perturbed = d;
      }
  REQUIRE(perturbed);
  auto broken = validate_bialgebra(hl.g_ptr(), algebra(*perturbed, "xi"));
  CHECK_FALSE(broken.violations.empty());
  auto gamma = cobracket_from_dual(hl.g_ptr(), LieAlgebra(LieAlgebra::default_names(3, "xi"), *perturbed));
  CHECK_FALSE(coboundary(gamma).is_zero());

  CHECK_THROWS_AS(validate_bialgebra(algebra(StructureConstants(2)), algebra(StructureConstants(3))),
                  std::invalid_argument);
}

TEST_CASE("cobracket of the three-dimensional example") {
  auto hl = catalog::hong_liu_3d().bialgebra;
  // gamma(x2) = x1 (x) x2 - x2 (x) x1
  Vector expected = unit_vector(9, 0 * 3 + 1) - unit_vector(9, 1 * 3 + 0);
  CHECK(hl.gamma().at(1) == expected);
}

TEST_CASE("invariants on random bialgebras") {
  Rng rng(404);
  for (int t = 0; t < 40; ++t) check_bialgebra_invariants(liebi::testing::random_bialgebra(rng));
}

TEST_CASE("doubles of the sl(2, C) Manin triple") {
  for (auto o : {catalog::Orientation::su_first, catalog::Orientation::sb_first}) {
    auto e = catalog::manin_triple_sl_n(2, o);
    check_bialgebra_invariants(e.bialgebra);
    auto d = build_double(e.bialgebra);
    CHECK(d.algebra->dim() == 6);
    CHECK(d.algebra->center().empty());
  }
}

TEST_CASE("the double fails Jacobi exactly when the cocycle condition fails") {
  Rng rng(19);
  int broken = 0;
  for (int t = 0; t < 40; ++t) {
    auto g = liebi::testing::random_lie_algebra(rng, 2 + t % 2);
    auto d = liebi::testing::random_lie_algebra(rng, g.dim());
    auto v = validate_bialgebra(std::make_shared<const LieAlgebra>(g),
                                std::make_shared<const LieAlgebra>(LieAlgebra::default_names(g.dim(), "xi"), d.constants()));
    CHECK(v.ok() == validate_lie(double_constants(g, d)).ok());
    broken += !v.ok();
  }
  CHECK(broken > 0);
}

TEST_CASE("coboundary bialgebras") {
  StructureConstants aff(2);
  aff.set_bracket(0, 1, 1, 1);
  auto g = algebra(aff);

  auto zero = coboundary_bialgebra(g, RMatrix{Matrix(2, 2)});
  REQUIRE(zero.ok());
  CHECK(zero.bialgebra->g_dual().is_abelian());

  RMatrix r{Matrix::from_rows({{0, 1}, {-1, 0}})};
  auto v = coboundary_bialgebra(g, r, {"xi_t", "xi_e"});
  REQUIRE(v.ok());
  CHECK(validate_lie(v.bialgebra->g_dual().constants()).ok());
  CHECK(coboundary(Cochain(v.bialgebra->gamma().module(), 0, {r.flatten()})) == v.bialgebra->gamma());
  CHECK(find_primitive(v.bialgebra->gamma()).has_value());
  check_bialgebra_invariants(*v.bialgebra);

  // a generic r on su(2) induces a bracket violating Jacobi
  auto su2 = std::make_shared<const LieAlgebra>(catalog::su_n(2));
  Rng rng(13);
  int invalid = 0;
  for (int t = 0; t < 10; ++t) {
    auto res = coboundary_bialgebra(su2, RMatrix{liebi::testing::random_matrix(rng, 3, 3)});
    if (!res.ok()) {
      ++invalid;
      CHECK_FALSE(res.violations.empty());
    }
  }
  CHECK(invalid > 0);
}

TEST_CASE("swap") {
  auto hl = catalog::hong_liu_3d().bialgebra;
  CHECK(swap(swap(hl)) == hl);
  auto ab = make_bialgebra(algebra(StructureConstants(2)), algebra(StructureConstants(2), "xi"));
  CHECK(swap(ab) == ab);
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    auto b = liebi::testing::random_bialgebra(rng);
    CHECK(swap(swap(b)) == b);
    check_bialgebra_invariants(swap(b));
  }
}

TEST_CASE("change of basis preserves the bialgebra conditions") {
  Rng rng(23);
  auto hl = catalog::hong_liu_3d().bialgebra;
  for (int t = 0; t < 5; ++t) {
    auto p = liebi::testing::random_invertible(rng, 3);
    auto b = change_basis(hl, p);
    check_bialgebra_invariants(b);
    CHECK(change_basis(b, inverse(p)) == hl);
  }
}

TEST_CASE("direct sums") {
  auto a = catalog::affine_2d_coboundary().bialgebra;
  StructureConstants one(1);
  auto triv = make_bialgebra(algebra(one), algebra(one, "xi"));
  auto s = liebi::testing::direct_sum(a, triv);
  CHECK(s.dim() == 3);
  check_bialgebra_invariants(s);
}
