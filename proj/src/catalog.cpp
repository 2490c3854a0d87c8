#include "liebi/catalog.hpp"

#include <charconv>

namespace liebi::catalog {

GaussianMatrix GaussianMatrix::unit(std::size_t n, std::size_t j, std::size_t k, const Rational& a,
                                    const Rational& b) {
  auto m = zero(n);
  m.re(j, k) = a;
  m.im(j, k) = b;
  return m;
}

Vector GaussianMatrix::realify() const {
  Vector v = re.entries();
  v.insert(v.end(), im.entries().begin(), im.entries().end());
  return v;
}

GaussianMatrix operator+(const GaussianMatrix& a, const GaussianMatrix& b) { return {a.re + b.re, a.im + b.im}; }
GaussianMatrix operator-(const GaussianMatrix& a, const GaussianMatrix& b) { return {a.re - b.re, a.im - b.im}; }

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianMatrix operator*(const Rational& s, const GaussianMatrix& a) { return {s * a.re, s * a.im}; }

GaussianMatrix commutator(const GaussianMatrix& a, const GaussianMatrix& b) { return a * b - b * a; }

Rational im_trace_pairing(const GaussianMatrix& a, const GaussianMatrix& b) { return trace((a * b).im); }

GaussianMatrix combine(const std::vector<GaussianMatrix>& basis, const Vector& coords) {
  if (basis.empty() || coords.size() != basis.size()) throw std::invalid_argument("combine: size mismatch");
  auto out = GaussianMatrix::zero(basis.front().size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!is_zero(coords[i])) out = out + coords[i] * basis[i];
  return out;
}

namespace {

Matrix realified_basis(const std::vector<GaussianMatrix>& basis) {
  const std::size_t n = basis.front().size();
  Matrix b(2 * n * n, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto v = basis[c].realify();
    for (std::size_t r = 0; r < v.size(); ++r) b(r, c) = v[r];
  }
  return b;
}

Vector coordinates_in(const Matrix& realified, const GaussianMatrix& m) {
  auto sol = solve(realified, m.realify());
  if (!sol.particular) throw std::domain_error("matrix is not in the span of the basis");
  if (!sol.kernel_basis.empty()) throw std::invalid_argument("basis matrices are linearly dependent");
  return *sol.particular;
}

}  // namespace

Vector coordinates(const std::vector<GaussianMatrix>& basis, const GaussianMatrix& m) {
  return coordinates_in(realified_basis(basis), m);
}

StructureConstants structure_from_matrices(const std::vector<GaussianMatrix>& basis) {
  const std::size_t d = basis.size();
  const Matrix realified = realified_basis(basis);
  StructureConstants c(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto coords = coordinates_in(realified, commutator(basis[i], basis[j]));
      for (std::size_t k = 0; k < d; ++k)
        if (!is_zero(coords[k])) c.set_bracket(i, j, k, coords[k]);
    }
  return c;
}

namespace {

void check_rank(std::size_t n, std::size_t max_n) {
  if (n < 2) throw std::invalid_argument("sl(n, C) entries need n >= 2, got " + std::to_string(n));
  if (n > max_n)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the size cap " + std::to_string(max_n) +
                                " (raise max_n to override)");
}

std::string idx(std::size_t j, std::size_t k) { return std::to_string(j + 1) + std::to_string(k + 1); }

}  // namespace

std::vector<GaussianMatrix> su_basis(std::size_t n) {
  std::vector<GaussianMatrix> basis;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      basis.push_back(GaussianMatrix::unit(n, j, k, 1, 0) - GaussianMatrix::unit(n, k, j, 1, 0));
      basis.push_back(GaussianMatrix::unit(n, j, k, 0, 1) + GaussianMatrix::unit(n, k, j, 0, 1));
    }
  for (std::size_t j = 0; j + 1 < n; ++j)
    basis.push_back(GaussianMatrix::unit(n, j, j, 0, 1) - GaussianMatrix::unit(n, j + 1, j + 1, 0, 1));
  return basis;
}

std::vector<std::string> su_basis_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      names.push_back("A" + idx(j, k));
      names.push_back("B" + idx(j, k));
    }
  for (std::size_t j = 0; j + 1 < n; ++j) names.push_back("H" + std::to_string(j + 1));
  return names;
}

std::vector<GaussianMatrix> sb_basis(std::size_t n) {
  std::vector<GaussianMatrix> basis;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      basis.push_back(GaussianMatrix::unit(n, j, k, 1, 0));
      basis.push_back(GaussianMatrix::unit(n, j, k, 0, 1));
    }
  for (std::size_t j = 0; j + 1 < n; ++j)
    basis.push_back(GaussianMatrix::unit(n, j, j, 1, 0) - GaussianMatrix::unit(n, j + 1, j + 1, 1, 0));
  return basis;
}

std::vector<std::string> sb_basis_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      names.push_back("E" + idx(j, k));
      names.push_back("iE" + idx(j, k));
    }
  for (std::size_t j = 0; j + 1 < n; ++j) names.push_back("D" + std::to_string(j + 1));
  return names;
}

LieAlgebra su_n(std::size_t n, std::size_t max_n) {
  check_rank(n, max_n);
  return LieAlgebra(su_basis_names(n), structure_from_matrices(su_basis(n)));
}

LieAlgebra sb_n(std::size_t n, std::size_t max_n) {
  check_rank(n, max_n);
  return LieAlgebra(sb_basis_names(n), structure_from_matrices(sb_basis(n)));
}

std::vector<Vector> t_subspace(std::size_t n) {
  const std::size_t off = n * (n - 1);
  std::vector<Vector> out;
  for (std::size_t j = 0; j + 1 < n; ++j) out.push_back(unit_vector(n * n - 1, off + j));
  return out;
}

std::vector<Vector> n_plus_subspace(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < n * (n - 1); ++j) out.push_back(unit_vector(n * n - 1, j));
  return out;
}

std::vector<Vector> i_t_subspace(std::size_t n) { return t_subspace(n); }

CatalogEntry hong_liu_3d() {
  StructureConstants c(3);
  c.set_bracket(0, 1, 2, 1);  // [x1, x2] = x3
  StructureConstants d(3);
  d.set_bracket(0, 1, 1, 1);   // [xi1, xi2] = xi2
  d.set_bracket(2, 0, 2, -1);  // [xi3, xi1] = -xi3
  auto g = std::make_shared<const LieAlgebra>(LieAlgebra::default_names(3, "x"), std::move(c));
  auto g_dual = std::make_shared<const LieAlgebra>(LieAlgebra::default_names(3, "xi"), std::move(d));
  return {.name = "hong-liu-3d",
          .bialgebra = make_bialgebra(std::move(g), std::move(g_dual)),
          .provenance = "3-dimensional bialgebra on the Heisenberg algebra: [x1,x2]=x3; [xi1,xi2]=xi2, [xi3,xi1]=-xi3",
          .expected = {.vanishing = false, .c1_vanishing = true},
          .r_matrix = std::nullopt,
          .model = std::nullopt,
          .metadata = {{"center", "span(x3)"}}};
}

CatalogEntry affine_2d_coboundary() {
  StructureConstants c(2);
  c.set_bracket(0, 1, 1, 1);  // [t, e] = e
  auto g = std::make_shared<const LieAlgebra>(std::vector<std::string>{"t", "e"}, std::move(c));
  RMatrix r{Matrix::from_rows({{0, 1}, {-1, 0}})};  // t (x) e - e (x) t
  auto v = coboundary_bialgebra(g, r, {"xi_t", "xi_e"});
  if (!v.ok()) throw std::logic_error("affine-2d-r: " + v.violations.front());
  return {.name = "affine-2d-r",
          .bialgebra = std::move(*v.bialgebra),
          .provenance = "coboundary bialgebra on [t,e]=e with r = t(x)e - e(x)t",
          .expected = {.vanishing = true, .c1_vanishing = true},
          .r_matrix = std::move(r),
          .model = std::nullopt,
          .metadata = {{"gamma", "dr"}}};
}

CatalogEntry manin_triple_sl_n(std::size_t n, Orientation orientation, std::size_t max_n) {
  check_rank(n, max_n);
  const bool su_first = orientation == Orientation::su_first;
  auto first = su_first ? su_basis(n) : sb_basis(n);
  auto second = su_first ? sb_basis(n) : su_basis(n);
  auto first_names = su_first ? su_basis_names(n) : sb_basis_names(n);
  const std::size_t d = first.size();

  // P(i, a) = <x_i, y_a>; the dual basis is xi^j = sum_a Q(a, j) y_a, Q = P^{-1}.
  Matrix p(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a) p(i, a) = im_trace_pairing(first[i], second[a]);
  Matrix q;
  try {
    q = inverse(p);
  } catch (const std::domain_error&) {
    throw std::logic_error("Im tr pairing between su(n) and sb(n, C) is degenerate");
  }
  std::vector<GaussianMatrix> dual;
  for (std::size_t j = 0; j < d; ++j) dual.push_back(combine(second, q.column(j)));

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (im_trace_pairing(first[i], first[j]) != 0 || im_trace_pairing(dual[i], dual[j]) != 0)
        throw std::logic_error("su(n) or sb(n, C) is not isotropic under Im tr");
      if (im_trace_pairing(first[i], dual[j]) != (i == j ? 1 : 0))
        throw std::logic_error("dual basis alignment failed");
    }

  std::vector<std::string> dual_names;
  for (const auto& nm : first_names) dual_names.push_back("xi_" + nm);
  auto g = std::make_shared<const LieAlgebra>(first_names, structure_from_matrices(first));
  auto g_dual = std::make_shared<const LieAlgebra>(std::move(dual_names), structure_from_matrices(dual));
  auto b = make_bialgebra(std::move(g), std::move(g_dual));
  build_double(b);

  const std::string sl = "sl" + std::to_string(n);
  CatalogEntry e{
      .name = sl + (su_first ? "-su-first" : "-sb-first"),
      .bialgebra = std::move(b),
      .provenance = su_first ? "Manin triple (sl(n,C), su(n), sb(n,C)) with g = su(n), n = " + std::to_string(n)
                             : "Manin triple (sl(n,C), sb(n,C), su(n)) with g = sb(n,C), n = " + std::to_string(n),
      .expected = su_first ? ExpectedVerdicts{.vanishing = true, .c1_vanishing = true}
                           : ExpectedVerdicts{.vanishing = false, .c1_vanishing = false},
      .r_matrix = std::nullopt,
      .model = MatrixModel{std::move(first), std::move(dual)},
      .metadata = {
          {"pairing", "<X,Y> = Im(trace(XY))"},
          {"g_basis", su_first ? "su(n): A_jk = E_jk - E_kj, B_jk = i(E_jk + E_kj), H_j = i(E_jj - E_j+1,j+1)"
                               : "sb(n,C): E_jk, iE_jk, D_j = E_jj - E_j+1,j+1"},
          {"g_dual_basis", su_first ? "sb(n,C) combinations dual to the su(n) basis under Im tr"
                                    : "su(n) combinations dual to the sb(n,C) basis under Im tr"},
          {"mixed_bracket", "[x,xi] = -ad*_x xi + ad*_xi x; agrees with the sl(n,C) matrix commutator"},
      },
  };
  return e;
}

std::vector<std::string> names() {
  return {"hong-liu-3d",  "sl2-su-first", "sl2-sb-first", "sl3-su-first",
          "sl3-sb-first", "sl4-su-first", "sl4-sb-first", "affine-2d-r"};
}

CatalogEntry get(const std::string& name, std::size_t max_n) {
  if (name == "hong-liu-3d") return hong_liu_3d();
  if (name == "affine-2d-r") return affine_2d_coboundary();
  for (auto [suffix, orientation] : {std::pair{"-su-first", Orientation::su_first},
                                     std::pair{"-sb-first", Orientation::sb_first}}) {
    const std::string_view sfx{suffix};
    if (name.size() <= 2 + sfx.size() || !name.starts_with("sl") || !name.ends_with(sfx)) continue;
    std::string_view digits{name.data() + 2, name.size() - 2 - sfx.size()};
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 2) break;
    return manin_triple_sl_n(n, orientation, max_n);
  }
  throw UnknownEntry(name);
}

}  // namespace liebi::catalog
