#include "liebi/cochain.hpp"

namespace liebi {

std::size_t Cochain::slot_count(std::size_t n, int degree) {
  switch (degree) {
    case 0: return 1;
    case 1: return n;
    case 2: return n * (n - (n > 0 ? 1 : 0)) / 2;
    default: throw std::invalid_argument("cochain degree must be 0, 1 or 2");
  }
}

std::size_t Cochain::pair_slot(std::size_t i, std::size_t j, std::size_t n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Cochain::Cochain(Representation module, int degree, std::vector<Vector> values)
    : module_{std::move(module)}, degree_{degree}, values_{std::move(values)} {
  const std::size_t expected = slot_count(module_.algebra().dim(), degree_);
  if (values_.size() != expected)
    throw std::invalid_argument("degree-" + std::to_string(degree_) + " cochain needs " + std::to_string(expected) +
                                " slots, got " + std::to_string(values_.size()));
  for (const auto& v : values_)
    if (v.size() != module_.space_dim()) throw std::invalid_argument("cochain value has wrong length");
}

Cochain Cochain::zero(Representation module, int degree) {
  const std::size_t slots = slot_count(module.algebra().dim(), degree);
  const std::size_t m = module.space_dim();
  return Cochain(std::move(module), degree, std::vector<Vector>(slots, Vector(m)));
}

Cochain Cochain::from_flat(Representation module, int degree, const Vector& flat) {
  const std::size_t slots = slot_count(module.algebra().dim(), degree);
  const std::size_t m = module.space_dim();
  if (flat.size() != slots * m) throw std::invalid_argument("flat cochain has wrong length");
  std::vector<Vector> values(slots);
  for (std::size_t s = 0; s < slots; ++s)
    values[s].assign(flat.begin() + static_cast<std::ptrdiff_t>(s * m),
                     flat.begin() + static_cast<std::ptrdiff_t>((s + 1) * m));
  return Cochain(std::move(module), degree, std::move(values));
}

const Vector& Cochain::value() const {
  if (degree_ != 0) throw std::logic_error("value() on a cochain of positive degree");
  return values_[0];
}

const Vector& Cochain::at(std::size_t i) const {
  if (degree_ != 1) throw std::logic_error("at(i) needs a degree-1 cochain");
  return values_.at(i);
}

Vector Cochain::at(std::size_t i, std::size_t j) const {
  if (degree_ != 2) throw std::logic_error("at(i, j) needs a degree-2 cochain");
  const std::size_t n = algebra_dim();
  if (i == j) return Vector(module_.space_dim());
  if (i < j) return values_.at(pair_slot(i, j, n));
  return -values_.at(pair_slot(j, i, n));
}

Vector Cochain::flatten() const {
  Vector flat;
  flat.reserve(values_.size() * module_.space_dim());
  for (const auto& v : values_) flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

bool Cochain::is_zero() const {
  for (const auto& v : values_)
    if (!liebi::is_zero(v)) return false;
  return true;
}

namespace {

void require_compatible(const Cochain& a, const Cochain& b) {
  if (a.degree() != b.degree() || a.module().space_dim() != b.module().space_dim() ||
      !same_algebra(a.module(), b.module()))
    throw std::invalid_argument("cochains live in different spaces");
}

}  // namespace

Cochain operator+(const Cochain& a, const Cochain& b) {
  require_compatible(a, b);
  std::vector<Vector> v;
  for (std::size_t s = 0; s < a.values().size(); ++s) v.push_back(a.values()[s] + b.values()[s]);
  return Cochain(a.module(), a.degree(), std::move(v));
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  require_compatible(a, b);
  std::vector<Vector> v;
  for (std::size_t s = 0; s < a.values().size(); ++s) v.push_back(a.values()[s] - b.values()[s]);
  return Cochain(a.module(), a.degree(), std::move(v));
}

Cochain operator-(const Cochain& a) {
  std::vector<Vector> v;
  for (const auto& x : a.values()) v.push_back(-x);
  return Cochain(a.module(), a.degree(), std::move(v));
}

Cochain coboundary(const Cochain& f) {
  const auto& mod = f.module();
  const auto& g = mod.algebra();
  const std::size_t n = g.dim();
  if (f.degree() == 0) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(mod.rho(i) * f.value());
    return Cochain(mod, 1, std::move(out));
  }
  if (f.degree() == 1) {
    const std::size_t m = mod.space_dim();
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vector v = mod.rho(i) * f.at(j) - mod.rho(j) * f.at(i);
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& c = g.c(i, j, k);
          if (is_zero(c)) continue;
          for (std::size_t a = 0; a < m; ++a)
            if (!is_zero(f.at(k)[a])) v[a] -= c * f.at(k)[a];
        }
        out.push_back(std::move(v));
      }
    return Cochain(mod, 2, std::move(out));
  }
  throw std::invalid_argument("coboundary is implemented for degrees 0 and 1 only");
}

SparseMatrix coboundary_matrix(const Representation& module, int degree) {
  const auto& g = module.algebra();
  const std::size_t n = g.dim();
  const std::size_t m = module.space_dim();
  std::vector<Triplet> t;
  if (degree == 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < m; ++a)
        for (const auto& e : module.rho(i).row(a)) t.push_back({i * m + a, e.col, e.value});
    return SparseMatrix::from_triplets(n * m, m, std::move(t));
  }
  if (degree == 1) {
    const std::size_t pairs = Cochain::slot_count(n, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t row0 = Cochain::pair_slot(i, j, n) * m;
        for (std::size_t a = 0; a < m; ++a) {
          for (const auto& e : module.rho(i).row(a)) t.push_back({row0 + a, j * m + e.col, e.value});
          for (const auto& e : module.rho(j).row(a)) t.push_back({row0 + a, i * m + e.col, -e.value});
        }
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(g.c(i, j, k)))
            for (std::size_t a = 0; a < m; ++a) t.push_back({row0 + a, k * m + a, -g.c(i, j, k)});
      }
    return SparseMatrix::from_triplets(pairs * m, n * m, std::move(t));
  }
  throw std::invalid_argument("coboundary is implemented for degrees 0 and 1 only");
}

bool is_cocycle(const Cochain& f) { return coboundary(f).is_zero(); }

Cochain push_forward(const ModuleMap& f, const Cochain& c) {
  if (f.source.space_dim() != c.module().space_dim() || !same_algebra(f.source, c.module()))
    throw std::invalid_argument("push_forward: cochain does not live in the map's source");
  std::vector<Vector> values;
  for (const auto& v : c.values()) values.push_back(f.matrix * v);
  return Cochain(f.target, c.degree(), std::move(values));
}

PrimitiveSearch solve_primitive(const Cochain& f) {
  if (f.degree() != 1) throw std::invalid_argument("find_primitive expects a degree-1 cochain");
  if (!is_cocycle(f)) throw std::invalid_argument("find_primitive: input is not a cocycle");
  auto sol = solve(coboundary_matrix(f.module(), 0), f.flatten());
  PrimitiveSearch out;
  out.rank = sol.rank;
  out.rank_augmented = sol.rank_augmented;
  if (sol.particular) out.primitive = Cochain(f.module(), 0, {std::move(*sol.particular)});
  return out;
}

std::optional<Cochain> find_primitive(const Cochain& f) { return solve_primitive(f).primitive; }

H1Dimensions h1_dimensions(const Representation& module) {
  H1Dimensions d;
  d.cochains = module.algebra().dim() * module.space_dim();
  d.rank_d0 = rank(coboundary_matrix(module, 0));
  d.rank_d1 = rank(coboundary_matrix(module, 1));
  d.cocycles = d.cochains - d.rank_d1;
  d.h1 = d.cocycles - d.rank_d0;
  return d;
}

}  // namespace liebi
