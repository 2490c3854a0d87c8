#include "liebi/bialgebra.hpp"

namespace liebi {

struct BialgebraFactory {
  static LieBialgebra make(AlgebraPtr g, AlgebraPtr g_dual, Cochain gamma) {
    return LieBialgebra(std::move(g), std::move(g_dual), std::move(gamma));
  }
};

Cochain cobracket_from_dual(const AlgebraPtr& g, const LieAlgebra& g_dual) {
  const std::size_t n = g->dim();
  if (g_dual.dim() != n) throw std::invalid_argument("g and g* have different dimensions");
  std::vector<Vector> values(n, Vector(n * n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) values[i][j * n + k] = g_dual.c(j, k, i);
  return Cochain(ad2(g), 1, std::move(values));
}

namespace {

std::vector<std::string> gamma_violations(const Cochain& gamma) {
  std::vector<std::string> out;
  const std::size_t n = gamma.algebra_dim();
  const auto& names = gamma.module().algebra().basis_names();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        if (!is_zero(gamma.at(i)[j * n + k] + gamma.at(i)[k * n + j]))
          out.push_back("gamma(" + names[i] + ") is not antisymmetric in slots (" + std::to_string(j) + "," +
                        std::to_string(k) + ")");
  auto dg = coboundary(gamma);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero(dg.at(i, j)))
        out.push_back("cocycle condition fails: (d gamma)(" + names[i] + "," + names[j] + ") != 0 at (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
  return out;
}

}  // namespace

BialgebraValidation validate_bialgebra(AlgebraPtr g, AlgebraPtr g_dual) {
  if (!g || !g_dual) throw std::invalid_argument("validate_bialgebra: null algebra");
  if (g->dim() != g_dual->dim())
    throw std::invalid_argument("validate_bialgebra: dim g = " + std::to_string(g->dim()) +
                                " but dim g* = " + std::to_string(g_dual->dim()));
  auto gamma = cobracket_from_dual(g, *g_dual);
  BialgebraValidation out;
  out.violations = gamma_violations(gamma);
  if (out.violations.empty()) out.bialgebra = BialgebraFactory::make(std::move(g), std::move(g_dual), std::move(gamma));
  return out;
}

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::string s = "not a Lie bialgebra";
  if (!v.empty()) s += ": " + v.front();
  if (v.size() > 1) s += " (and " + std::to_string(v.size() - 1) + " more)";
  return s;
}

}  // namespace

InvalidBialgebra::InvalidBialgebra(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_{std::move(violations)} {}

LieBialgebra make_bialgebra(AlgebraPtr g, AlgebraPtr g_dual) {
  auto v = validate_bialgebra(std::move(g), std::move(g_dual));
  if (!v.ok()) throw InvalidBialgebra(std::move(v.violations));
  return std::move(*v.bialgebra);
}

Vector RMatrix::flatten() const {
  Vector v(r.rows() * r.cols());
  for (std::size_t j = 0; j < r.rows(); ++j)
    for (std::size_t k = 0; k < r.cols(); ++k) v[j * r.cols() + k] = r(j, k);
  return v;
}

Vector RMatrix::contract_first(const Vector& xi) const { return r.transpose() * xi; }

BialgebraValidation coboundary_bialgebra(AlgebraPtr g, const RMatrix& r, std::vector<std::string> dual_names) {
  const std::size_t n = g->dim();
  if (r.r.rows() != n || r.r.cols() != n) throw std::invalid_argument("r-matrix must be n x n");
  auto gamma = coboundary(Cochain(ad2(g), 0, {r.flatten()}));

  BialgebraValidation out;
  StructureConstants d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d(j, k, i) = gamma.at(i)[j * n + k];
  auto report = validate_lie(d);
  for (const auto& v : report.violations)
    out.violations.push_back("induced dual bracket: " + v.describe());
  if (!out.violations.empty()) return out;

  if (dual_names.empty()) dual_names = LieAlgebra::default_names(n, "xi");
  auto g_dual = std::make_shared<const LieAlgebra>(std::move(dual_names), std::move(d));
  // gamma = dr is a cocycle automatically; validate anyway so the invariants
  // of LieBialgebra are established in exactly one place.
  return validate_bialgebra(std::move(g), std::move(g_dual));
}

LieBialgebra swap(const LieBialgebra& b) {
  auto v = validate_bialgebra(b.g_dual_ptr(), b.g_ptr());
  if (!v.ok()) throw std::logic_error("dual of a Lie bialgebra failed validation: " + v.violations.front());
  return std::move(*v.bialgebra);
}

LieBialgebra change_basis(const LieBialgebra& b, const Matrix& basis) {
  auto g = std::make_shared<const LieAlgebra>(change_basis(b.g(), basis));
  auto g_dual = std::make_shared<const LieAlgebra>(change_basis(b.g_dual(), inverse(basis).transpose()));
  return make_bialgebra(std::move(g), std::move(g_dual));
}

Vector Double::embed_g(const Vector& x) const {
  Vector v(2 * n);
  for (std::size_t i = 0; i < n; ++i) v[i] = x.at(i);
  return v;
}

Vector Double::embed_g_dual(const Vector& xi) const {
  Vector v(2 * n);
  for (std::size_t i = 0; i < n; ++i) v[n + i] = xi.at(i);
  return v;
}

StructureConstants double_constants(const LieAlgebra& g, const LieAlgebra& g_dual) {
  const std::size_t n = g.dim();
  if (g_dual.dim() != n) throw std::invalid_argument("double: dimension mismatch");
  StructureConstants c(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        c(i, j, k) = g.c(i, j, k);
        c(n + i, n + j, n + k) = g_dual.c(i, j, k);
      }
  // [x_i, xi^a] = -ad*_{x_i} xi^a + ad*_{xi^a} x_i
  //   xi^b component: -c(i, b, a);   x_k component: d(a, k, i)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        c(i, n + a, n + b) = -g.c(i, b, a);
        c(n + a, i, n + b) = g.c(i, b, a);
      }
      for (std::size_t k = 0; k < n; ++k) {
        c(i, n + a, k) = g_dual.c(a, k, i);
        c(n + a, i, k) = -g_dual.c(a, k, i);
      }
    }
  return c;
}

Double build_double(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  auto c = double_constants(b.g(), b.g_dual());
  auto report = validate_lie(c);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw NotMatchedPair("not a matched pair: " + v.describe(), {v.index[0], v.index[1], v.index[2]});
  }
  auto names = b.g().basis_names();
  names.insert(names.end(), b.g_dual().basis_names().begin(), b.g_dual().basis_names().end());

  Double d;
  d.n = n;
  d.algebra = std::make_shared<const LieAlgebra>(std::move(names), std::move(c));
  d.pairing = Matrix(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    d.pairing(i, n + i) = 1;
    d.pairing(n + i, i) = 1;
  }

  const auto& L = *d.algebra;
  for (std::size_t a = 0; a < 2 * n; ++a)
    for (std::size_t p = 0; p < 2 * n; ++p)
      for (std::size_t q = 0; q < 2 * n; ++q) {
        // <[a, p], q> + <p, [a, q]>; the pairing is a permutation matrix
        const std::size_t q_partner = q < n ? q + n : q - n;
        const std::size_t p_partner = p < n ? p + n : p - n;
        if (!is_zero(L.c(a, p, q_partner) + L.c(a, q, p_partner)))
          throw NotMatchedPair("pairing is not invariant on basis triple (" + std::to_string(a) + "," +
                                   std::to_string(p) + "," + std::to_string(q) + ")",
                               {a, p, q});
      }
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j)
      if ((i < n) == (j < n) && !is_zero(d.pairing(i, j)))
        throw std::logic_error("double pairing is not isotropic on g or g*");
  return d;
}

}  // namespace liebi
