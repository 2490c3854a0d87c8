#include "random_bialgebra.hpp"

#include "liebi/linear_solve.hpp"

namespace liebi::testing {

Rational random_rational(Rng& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 2);
  return make_rational(num(rng), den(rng));
}

Vector random_vector(Rng& rng, std::size_t n, int bound) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng, bound);
  return v;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, bound);
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    std::uniform_int_distribution<int> d(-2, 2);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = make_rational(d(rng));
    if (rank(m) == n) return m;
  }
}

namespace {

StructureConstants sum_constants(const StructureConstants& a, const StructureConstants& b) {
  const std::size_t na = a.dim();
  const std::size_t n = na + b.dim();
  StructureConstants c(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c(i, j, k) = a(i, j, k);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) c(na + i, na + j, na + k) = b(i, j, k);
  return c;
}

StructureConstants scaled(const StructureConstants& c, const Rational& s) {
  auto data = c.data();
  for (auto& x : data) x *= s;
  return StructureConstants(c.dim(), std::move(data));
}

// Low-dimensional Lie algebras in their standard bases.
std::vector<StructureConstants> named_types(std::size_t n, Rng& rng) {
  std::vector<StructureConstants> out;
  out.emplace_back(n);  // abelian
  if (n == 2) {
    StructureConstants c(2);
    c.set_bracket(0, 1, 1, 1);  // aff(1)
    out.push_back(c);
  }
  if (n == 3) {
    StructureConstants heis(3);
    heis.set_bracket(0, 1, 2, 1);
    out.push_back(heis);
    StructureConstants sl2(3);  // h, e, f
    sl2.set_bracket(0, 1, 1, 2);
    sl2.set_bracket(0, 2, 2, -2);
    sl2.set_bracket(1, 2, 0, 1);
    out.push_back(sl2);
    StructureConstants so3(3);
    so3.set_bracket(0, 1, 2, 1);
    so3.set_bracket(1, 2, 0, 1);
    so3.set_bracket(2, 0, 1, 1);
    out.push_back(so3);
    StructureConstants r3(3);  // [x3, x1] = x1, [x3, x2] = a x2
    r3.set_bracket(2, 0, 0, 1);
    r3.set_bracket(2, 1, 1, random_rational(rng, 2));
    out.push_back(r3);
    StructureConstants book(3);  // [x1, x2] = x2, [x1, x3] = x3
    book.set_bracket(0, 1, 1, 1);
    book.set_bracket(0, 2, 2, 1);
    out.push_back(book);
  }
  if (n == 4) {
    StructureConstants filiform(4);  // [x1, x2] = x3, [x1, x3] = x4
    filiform.set_bracket(0, 1, 2, 1);
    filiform.set_bracket(0, 2, 3, 1);
    out.push_back(filiform);
    StructureConstants oscillator(4);  // [t, a] = b, [t, b] = -a, [a, b] = z
    oscillator.set_bracket(0, 1, 2, 1);
    oscillator.set_bracket(0, 2, 1, -1);
    oscillator.set_bracket(1, 2, 3, 1);
    out.push_back(oscillator);
  }
  return out;
}

AlgebraPtr algebra(const StructureConstants& c, const std::string& prefix) {
  return std::make_shared<const LieAlgebra>(LieAlgebra::default_names(c.dim(), prefix), c);
}

std::optional<LieBialgebra> try_pair(const StructureConstants& g, const StructureConstants& d) {
  if (!validate_lie(g).ok() || !validate_lie(d).ok()) return std::nullopt;
  auto v = validate_bialgebra(algebra(g, "x"), algebra(d, "xi"));
  if (!v.bialgebra) return std::nullopt;
  try {
    build_double(*v.bialgebra);
  } catch (const NotMatchedPair&) {
    return std::nullopt;
  }
  return std::move(v.bialgebra);
}

StructureConstants random_type(Rng& rng, std::size_t n) {
  if (n == 4 && rng() % 3 == 0) {
    auto a = random_lie_algebra(rng, 2);
    auto b = random_lie_algebra(rng, 2);
    return sum_constants(a.constants(), b.constants());
  }
  auto types = named_types(n, rng);
  return types[rng() % types.size()];
}

// Known bialgebras of dimension n in standard bases.
std::vector<LieBialgebra> seeds(std::size_t n, Rng& rng) {
  std::vector<LieBialgebra> out;
  if (n == 2) {
    StructureConstants g(2);
    g.set_bracket(0, 1, 1, 1);
    auto r = coboundary_bialgebra(algebra(g, "x"), RMatrix{Matrix::from_rows({{0, 1}, {-1, 0}})},
                                  LieAlgebra::default_names(2, "xi"));
    out.push_back(*r.bialgebra);
  }
  if (n == 3) {
    StructureConstants g(3);
    g.set_bracket(0, 1, 2, 1);
    StructureConstants d(3);
    d.set_bracket(0, 1, 1, 1);
    d.set_bracket(2, 0, 2, -1);
    out.push_back(*try_pair(g, d));
    // standard sl2 r-matrix r = e (x) f - f (x) e
    auto sl2 = named_types(3, rng)[2];
    Matrix r(3, 3);
    r(1, 2) = 1;
    r(2, 1) = -1;
    auto v = coboundary_bialgebra(algebra(sl2, "x"), RMatrix{r}, LieAlgebra::default_names(3, "xi"));
    if (v.bialgebra) out.push_back(*v.bialgebra);
  }
  return out;
}

LieBialgebra random_basis(Rng& rng, const LieBialgebra& b) { return change_basis(b, random_invertible(rng, b.dim())); }

LieBialgebra rescale(Rng& rng, const LieBialgebra& b) {
  Rational s = random_rational(rng, 2);
  if (is_zero(s)) s = 1;
  Rational t = random_rational(rng, 2);
  if (is_zero(t)) t = -1;
  return *try_pair(scaled(b.g().constants(), s), scaled(b.g_dual().constants(), t));
}

// Perturbation search: nudge single dual constants and keep candidates that
// still form a bialgebra.
std::optional<LieBialgebra> perturb(Rng& rng, const LieBialgebra& b) {
  const std::size_t n = b.dim();
  if (n < 2) return std::nullopt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto d = b.g_dual().constants();
    std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (i == j) continue;
    std::size_t k = rng() % n;
    d.set_bracket(i, j, k, d(i, j, k) + random_rational(rng, 2));
    if (auto c = try_pair(b.g().constants(), d)) return c;
  }
  return std::nullopt;
}

LieBialgebra one_summand(Rng& rng, std::size_t n) {
  switch (rng() % 5) {
    case 0: {
      // abelian g: any dual bracket is compatible
      return *try_pair(StructureConstants(n), random_type(rng, n));
    }
    case 1: {
      return *try_pair(random_type(rng, n), StructureConstants(n));
    }
    case 2: {
      for (int attempt = 0; attempt < 20; ++attempt)
        if (auto b = try_pair(random_lie_algebra(rng, n).constants(), random_lie_algebra(rng, n).constants()))
          return *b;
      return *try_pair(StructureConstants(n), random_type(rng, n));
    }
    default: {
      auto s = seeds(n, rng);
      if (s.empty()) return *try_pair(StructureConstants(n), random_type(rng, n));
      return s[rng() % s.size()];
    }
  }
}

}  // namespace

LieAlgebra random_lie_algebra(Rng& rng, std::size_t n) {
  auto c = random_type(rng, n);
  LieAlgebra g(LieAlgebra::default_names(n, "x"), c);
  return change_basis(g, random_invertible(rng, n));
}

LieBialgebra direct_sum(const LieBialgebra& a, const LieBialgebra& b) {
  auto g = sum_constants(a.g().constants(), b.g().constants());
  auto d = sum_constants(a.g_dual().constants(), b.g_dual().constants());
  return make_bialgebra(algebra(g, "x"), algebra(d, "xi"));
}

LieBialgebra random_bialgebra(Rng& rng, std::size_t max_dim) {
  std::size_t n = 1 + rng() % max_dim;
  LieBialgebra b = [&] {
    if (n >= 2 && rng() % 4 == 0) {
      std::size_t k = 1 + rng() % (n - 1);
      return direct_sum(one_summand(rng, k), one_summand(rng, n - k));
    }
    return one_summand(rng, n);
  }();
  if (rng() % 2 == 0)
    if (auto p = perturb(rng, b)) b = *p;
  if (rng() % 2 == 0) b = rescale(rng, b);
  return random_basis(rng, b);
}

Representation random_module(Rng& rng, const AlgebraPtr& g, std::size_t max_space) {
  const std::size_t n = g->dim();
  std::vector<Representation> pool{adjoint(g), coadjoint(g), trivial_rep(g, 1 + rng() % 3)};
  for (int round = 0; round < 2; ++round) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    switch (rng() % 3) {
      case 0:
        if (a.space_dim() * b.space_dim() <= max_space) pool.push_back(tensor_rep(a, b));
        break;
      case 1:
        pool.push_back(dual_rep(a));
        break;
      default:
        if (a.space_dim() * a.space_dim() <= max_space) pool.push_back(end_rep(a));
    }
  }
  (void)n;
  return pool[rng() % pool.size()];
}

Cochain random_cochain(Rng& rng, const Representation& module, int degree) {
  std::vector<Vector> values;
  const std::size_t slots = Cochain::slot_count(module.algebra().dim(), degree);
  for (std::size_t s = 0; s < slots; ++s) values.push_back(random_vector(rng, module.space_dim()));
  return Cochain(module, degree, std::move(values));
}

}  // namespace liebi::testing
