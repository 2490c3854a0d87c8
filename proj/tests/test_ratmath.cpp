#include "liebi/linear_solve.hpp"
#include "random_bialgebra.hpp"

#include <doctest.h>

using namespace liebi;
using liebi::testing::Rng;

TEST_CASE("rationals are canonical and exact") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(3, -6).get_den() == 2);
  CHECK(make_rational(3, -6).get_num() == -1);
  CHECK(make_rational(1, 3) + make_rational(1, 6) == make_rational(1, 2));
  CHECK(to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(to_string(make_rational(5)) == "5");
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    auto a = liebi::testing::random_rational(rng, 50);
    auto b = liebi::testing::random_rational(rng, 50);
    Rational s = a + b;
    CHECK(s.get_den() > 0);
    CHECK(gcd(s.get_num(), s.get_den()) == 1);
    CHECK(s - b == a);
  }
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-1/2") == make_rational(-1, 2));
  CHECK(parse_rational("+6/4") == make_rational(3, 2));
  CHECK(parse_rational("123456789012345678901234567890/3") == parse_rational("41152263004115226300411522630"));
  for (const char* bad : {"", "1.5", "1/0", "1/", "/2", "a", "1e3", "1/-2", " 1", "--1"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("solve: identity, zero, and a rank-one system") {
  auto s1 = solve(Matrix::identity(2), Vector{1, 2});
  REQUIRE(s1.particular);
  CHECK(*s1.particular == Vector{1, 2});
  CHECK(s1.kernel_basis.empty());

  auto s2 = solve(Matrix::zero(2, 2), Vector{0, 0});
  REQUIRE(s2.particular);
  CHECK(*s2.particular == Vector{0, 0});
  CHECK(s2.kernel_basis.size() == 2);

  Matrix a = Matrix::from_rows({{1, 2}, {2, 4}});
  auto s3 = solve(a, Vector{3, 6});
  REQUIRE(s3.particular);
  CHECK(a * *s3.particular == Vector{3, 6});
  CHECK(s3.kernel_basis.size() == 1);
  CHECK(is_zero(a * s3.kernel_basis[0]));

  auto s4 = solve(a, Vector{3, 7});
  CHECK_FALSE(s4.particular);
  CHECK(s4.rank == 1);
  CHECK(s4.rank_augmented == 2);

  CHECK_THROWS_AS(solve(a, Vector{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix::zero(3, 3)) == 0);
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(SparseMatrix::from_dense(Matrix::from_rows({{1, 2}, {2, 4}}))) == 1);
}

TEST_CASE("rank-nullity and substitution on random matrices up to 8x8") {
  Rng rng(11);
  for (std::size_t rows = 1; rows <= 8; ++rows)
    for (std::size_t cols = 1; cols <= 8; ++cols)
      for (int t = 0; t < 3; ++t) {
        Matrix a = liebi::testing::random_matrix(rng, rows, cols);
        // force rank deficiency sometimes by duplicating a combination of rows
        if (rows > 1 && t == 1)
          for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = a(0, c) * 2 - a(rows > 2 ? 1 : 0, c);
        const auto ker = kernel(a);
        CHECK(rank(a) + ker.size() == cols);
        for (const auto& k : ker) CHECK(is_zero(a * k));
        CHECK(rank(Matrix(cols, ker.size(), [&] {
                std::vector<Rational> e;
                for (std::size_t r = 0; r < cols; ++r)
                  for (const auto& k : ker) e.push_back(k[r]);
                return e;
              }())) == ker.size());

        Vector x = liebi::testing::random_vector(rng, cols);
        Vector b = a * x;
        auto sol = solve(a, b);
        REQUIRE(sol.particular);
        Vector y = *sol.particular;
        for (const auto& k : sol.kernel_basis) y = y + liebi::testing::random_rational(rng, 5) * k;
        CHECK(a * y == b);
      }
}

TEST_CASE("solve is deterministic") {
  Rng rng(3);
  Matrix a = liebi::testing::random_matrix(rng, 6, 8);
  Vector b = a * liebi::testing::random_vector(rng, 8);
  auto s1 = solve(a, b);
  auto s2 = solve(a, b);
  CHECK(s1.particular == s2.particular);
  CHECK(s1.kernel_basis == s2.kernel_basis);
  auto s3 = solve(SparseMatrix::from_dense(a), b);
  CHECK(s1.particular == s3.particular);
  CHECK(s1.kernel_basis == s3.kernel_basis);
}

TEST_CASE("sparse matrices agree with dense arithmetic") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    Matrix a = liebi::testing::random_matrix(rng, 4, 5, 1);
    Matrix b = liebi::testing::random_matrix(rng, 5, 3, 1);
    auto sa = SparseMatrix::from_dense(a);
    auto sb = SparseMatrix::from_dense(b);
    CHECK((sa * sb).to_dense() == a * b);
    CHECK(sa.transpose().to_dense() == a.transpose());
    Vector v = liebi::testing::random_vector(rng, 5);
    CHECK(sa * v == a * v);
  }
  auto m = SparseMatrix::from_triplets(2, 2, {{0, 1, 1}, {0, 1, -1}, {1, 0, 2}, {1, 0, 3}});
  CHECK(m.nonzeros() == 1);
  CHECK(m.at(1, 0) == 5);
}

TEST_CASE("inverse") {
  Matrix a = Matrix::from_rows({{2, 1}, {1, 1}});
  CHECK(a * inverse(a) == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 2}, {2, 4}})), std::domain_error);
}
