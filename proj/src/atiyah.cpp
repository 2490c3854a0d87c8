#include "liebi/atiyah.hpp"

namespace liebi {

ConnectionDatum ConnectionDatum::zero(std::size_t n) { return {std::vector<Matrix>(n, Matrix(n, n))}; }

ConnectionDatum ConnectionDatum::from_flat(const Vector& flat, std::size_t n) {
  const std::size_t block = n * n;
  if (flat.size() != n * block) throw std::invalid_argument("connection datum has wrong length");
  ConnectionDatum s;
  for (std::size_t j = 0; j < n; ++j)
    s.blocks.push_back(unflatten_end(Vector(flat.begin() + static_cast<std::ptrdiff_t>(j * block),
                                            flat.begin() + static_cast<std::ptrdiff_t>((j + 1) * block)),
                                     n));
  return s;
}

Vector ConnectionDatum::flatten() const {
  Vector flat;
  for (const auto& b : blocks) {
    auto v = flatten_end(b);
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return flat;
}

Matrix ConnectionDatum::apply(const Vector& xi) const {
  const std::size_t n = dim();
  if (xi.size() != n) throw std::invalid_argument("S(xi): dimension mismatch");
  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    if (!is_zero(xi[j])) out = out + xi[j] * blocks[j];
  return out;
}

namespace {

Vector concat_blocks(const std::vector<Matrix>& blocks) {
  Vector flat;
  for (const auto& b : blocks) {
    auto v = flatten_end(b);
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return flat;
}

}  // namespace

Matrix lambda_block(const LieBialgebra& b, std::size_t i, std::size_t j) {
  const std::size_t n = b.dim();
  Vector y = b.ad_star_dual(j) * unit_vector(n, i);
  return b.g().ad_star(y);
}

ModuleMap f_map(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  const std::size_t n2 = n * n;
  std::vector<Triplet> t;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix block = -b.g().ad_star(k);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (is_zero(block(r, c))) continue;
        for (std::size_t a = 0; a < n; ++a) t.push_back({a * n2 + end_index(r, c, n), a * n + k, block(r, c)});
      }
  }
  return {ad2(b.g_ptr()), g_tensor_end_gdual(b.g_ptr()),
          SparseMatrix::from_triplets(n * n2, n2, std::move(t))};
}

ModuleMap trace_map(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  const std::size_t n2 = n * n;
  std::vector<Triplet> t;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < n; ++r) t.push_back({a, a * n2 + end_index(r, r, n), Rational{1}});
  return {g_tensor_end_gdual(b.g_ptr()), adjoint(b.g_ptr()), SparseMatrix::from_triplets(n, n * n2, std::move(t))};
}

AtiyahCocycle lambda_cocycle(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  auto module = g_tensor_end_gdual(b.g_ptr());
  std::vector<Vector> values;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Matrix> blocks;
    for (std::size_t j = 0; j < n; ++j) blocks.push_back(lambda_block(b, i, j));
    values.push_back(concat_blocks(blocks));
  }
  Cochain lambda(module, 1, std::move(values));

  auto f_gamma = push_forward(f_map(b), b.gamma());
  if (!(lambda == -f_gamma)) throw std::logic_error("lambda != -F o gamma");
  if (!is_cocycle(lambda)) throw std::logic_error("lambda is not a cocycle");
  return {std::move(lambda)};
}

Cochain curvature(const LieBialgebra& b, const ConnectionDatum& s) {
  const std::size_t n = b.dim();
  if (s.dim() != n) throw std::invalid_argument("curvature: connection datum has dimension " +
                                                std::to_string(s.dim()) + ", expected " + std::to_string(n));
  for (const auto& blk : s.blocks)
    if (blk.rows() != n || blk.cols() != n) throw std::invalid_argument("curvature: S block has wrong shape");
  std::vector<Vector> values;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a = b.g().ad_star(i);
    std::vector<Matrix> blocks;
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& sj = s.blocks[j];
      blocks.push_back(-(a * sj) + sj * a + s.apply(a.column(j)) + lambda_block(b, i, j));
    }
    values.push_back(concat_blocks(blocks));
  }
  return Cochain(g_tensor_end_gdual(b.g_ptr()), 1, std::move(values));
}

AtiyahVerdict atiyah_vanishes(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  auto lambda = lambda_cocycle(b).lambda;
  auto a = coboundary_matrix(lambda.module(), 0);
  auto sol = solve(a, (-lambda).flatten());

  AtiyahVerdict out;
  out.system = {a.cols(), a.rows(), sol.rank, sol.rank_augmented};
  out.vanishes = sol.consistent();
  if (sol.particular) out.witness = ConnectionDatum::from_flat(*sol.particular, n);
  return out;
}

ConnectionDatum r_matrix_connection(const LieBialgebra& b, const RMatrix& r) {
  const std::size_t n = b.dim();
  if (r.r.rows() != n || r.r.cols() != n) throw std::invalid_argument("r-matrix must be n x n");
  auto dr = coboundary(Cochain(b.gamma().module(), 0, {r.flatten()}));
  if (!(dr == b.gamma())) throw std::invalid_argument("r_matrix_connection: gamma != dr");

  ConnectionDatum s;
  for (std::size_t j = 0; j < n; ++j) s.blocks.push_back(-b.g().ad_star(r.contract_first(unit_vector(n, j))));

  auto f_r = f_map(b).matrix * r.flatten();
  if (f_r != s.flatten()) throw std::logic_error("r-matrix connection differs from F(r)");
  return s;
}

std::optional<CenterWitness> center_obstruction(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  for (const auto& z : b.g().center())
    for (std::size_t a = 0; a < n; ++a) {
      Vector image = b.ad_star_dual(a) * z;
      if (!b.g().is_central(image)) return CenterWitness{z, unit_vector(n, a), std::move(image)};
    }
  return std::nullopt;
}

Vector modular_vector(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Vector kappa(n);
  for (std::size_t i = 0; i < n; ++i) kappa[i] = trace(g.ad(i));
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(g.ad_star(i) * kappa)) throw std::logic_error("modular vector is not coadjoint-invariant");
  return kappa;
}

Cochain c1_representative(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  const Vector kappa = modular_vector(b.g());
  // i_kappa gamma(x_i) = sum_{j,k} kappa_j d(j,k,i) x_k = ad*_kappa x_i
  Matrix m = b.ad_star_dual(kappa);
  std::vector<Vector> values;
  for (std::size_t i = 0; i < n; ++i) values.push_back(m.column(i));
  Cochain rep(adjoint(b.g_ptr()), 1, std::move(values));

  if (!is_cocycle(rep)) throw std::logic_error("i_kappa gamma is not a cocycle");
  auto tr_lambda = push_forward(trace_map(b), lambda_cocycle(b).lambda);
  if (!(tr_lambda == -rep)) throw std::logic_error("tr o lambda != -i_kappa gamma");
  return rep;
}

bool double_condition_holds(const Double& d, const Vector& kappa, const Vector& v) {
  Vector w = d.embed_g(v) + d.embed_g_dual(kappa);
  for (std::size_t i = 0; i < d.n; ++i)
    if (!is_zero(d.algebra->bracket(w, d.embed_g(unit_vector(d.n, i))))) return false;
  return true;
}

LinearSolution solve_double_condition(const Double& d, const Vector& kappa) {
  const std::size_t n = d.n;
  const auto& L = *d.algebra;
  std::vector<Triplet> t;
  Vector rhs(n * 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < 2 * n; ++k) {
      const std::size_t row = i * 2 * n + k;
      for (std::size_t m = 0; m < n; ++m)
        if (!is_zero(L.c(m, i, k))) t.push_back({row, m, L.c(m, i, k)});
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(kappa[j])) rhs[row] -= kappa[j] * L.c(n + j, i, k);
    }
  return solve(SparseMatrix::from_triplets(n * 2 * n, n, std::move(t)), rhs);
}

C1Verdict c1_vanishes(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  auto rep = c1_representative(b);
  auto search = solve_primitive(rep);

  C1Verdict out;
  out.system = {n, n * n, search.rank, search.rank_augmented};
  out.vanishes = search.primitive.has_value();
  if (!out.vanishes) return out;

  // dp(x) = [x, p] = -ad_p x, so ad_v = i_kappa gamma = ad*_kappa for v = -p.
  Vector v = -search.primitive->value();
  const Vector kappa = modular_vector(b.g());
  if (!(b.g().ad(v) == b.ad_star_dual(kappa))) throw std::logic_error("c1 witness: ad_v != ad*_kappa");
  if (!double_condition_holds(build_double(b), kappa, v))
    throw std::logic_error("c1 witness: [kappa + v, g] != 0 in the double");
  out.v = std::move(v);
  return out;
}

AtiyahReport full_report(const LieBialgebra& b, ReportOptions options) {
  auto c1 = c1_vanishes(b);
  AtiyahReport report{
      .vanishing = std::nullopt,
      .witness_S = std::nullopt,
      .c1_vanishing = c1.vanishes,
      .witness_v = c1.v,
      .kappa = modular_vector(b.g()),
      .c1_representative = c1_representative(b),
      .center_obstruction = center_obstruction(b),
      .atiyah_system = std::nullopt,
      .c1_system = c1.system,
  };

  // The double formulation must agree with the cochain formulation.
  auto dbl = build_double(b);
  if (solve_double_condition(dbl, report.kappa).consistent() != c1.vanishes)
    throw std::logic_error("c1 verdict disagrees with the double-bracket formulation");

  if (!options.c1_only) {
    auto verdict = atiyah_vanishes(b);
    report.vanishing = verdict.vanishes;
    report.witness_S = verdict.witness;
    report.atiyah_system = verdict.system;
    if (verdict.witness && !curvature(b, *verdict.witness).is_zero())
      throw std::logic_error("Atiyah witness S does not annihilate the curvature");
    if (report.center_obstruction && verdict.vanishes)
      throw std::logic_error("center obstruction present but the Atiyah class vanishes");
    if (verdict.vanishes && !c1.vanishes) throw std::logic_error("Atiyah class vanishes but c1 does not");
  }
  return report;
}

}  // namespace liebi
