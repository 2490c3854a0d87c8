#include "liebi/representation.hpp"

namespace liebi {

Representation::Representation(AlgebraPtr algebra, std::size_t space_dim, std::vector<SparseMatrix> rho)
    : algebra_{std::move(algebra)}, dim_{space_dim}, rho_{std::move(rho)} {
  if (!algebra_) throw std::invalid_argument("representation without an algebra");
  if (rho_.size() != algebra_->dim())
    throw std::invalid_argument("representation needs one matrix per basis vector (" +
                                std::to_string(algebra_->dim()) + "), got " + std::to_string(rho_.size()));
  for (const auto& m : rho_)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("representation matrix has wrong shape");
}

SparseMatrix Representation::act(const Vector& x) const {
  if (x.size() != rho_.size()) throw std::invalid_argument("act: vector dimension mismatch");
  SparseMatrix out(dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) out = out + x[i] * rho_[i];
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> Representation::homomorphism_defect() const {
  const std::size_t n = rho_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(act(algebra_->bracket(i, j)) == commutator(rho_[i], rho_[j]))) return std::pair{i, j};
  return std::nullopt;
}

bool same_algebra(const Representation& a, const Representation& b) {
  return a.algebra_ptr() == b.algebra_ptr() || a.algebra() == b.algebra();
}

Representation trivial_rep(AlgebraPtr g, std::size_t space_dim) {
  std::vector<SparseMatrix> rho(g->dim(), SparseMatrix(space_dim, space_dim));
  return Representation(std::move(g), space_dim, std::move(rho));
}

Representation adjoint(AlgebraPtr g) {
  const std::size_t n = g->dim();
  std::vector<SparseMatrix> rho;
  for (std::size_t i = 0; i < n; ++i) rho.push_back(SparseMatrix::from_dense(g->ad(i)));
  return Representation(std::move(g), n, std::move(rho));
}

Representation coadjoint(AlgebraPtr g) {
  const std::size_t n = g->dim();
  std::vector<SparseMatrix> rho;
  for (std::size_t i = 0; i < n; ++i) rho.push_back(SparseMatrix::from_dense(-g->ad_star(i)));
  return Representation(std::move(g), n, std::move(rho));
}

Representation dual_rep(const Representation& v) {
  std::vector<SparseMatrix> rho;
  for (const auto& m : v.rho()) rho.push_back(Rational{-1} * m.transpose());
  return Representation(v.algebra_ptr(), v.space_dim(), std::move(rho));
}

Representation tensor_rep(const Representation& v, const Representation& w) {
  if (!same_algebra(v, w)) throw std::invalid_argument("tensor_rep: modules over different algebras");
  const std::size_t dv = v.space_dim();
  const std::size_t dw = w.space_dim();
  std::vector<SparseMatrix> rho;
  for (std::size_t i = 0; i < v.rho().size(); ++i) {
    std::vector<Triplet> t;
    // (rho_V (x) id): v_a (x) w_b -> sum_r rho_V(r, a) v_r (x) w_b
    for (std::size_t r = 0; r < dv; ++r)
      for (const auto& e : v.rho(i).row(r))
        for (std::size_t b = 0; b < dw; ++b) t.push_back({r * dw + b, e.col * dw + b, e.value});
    // (id (x) rho_W)
    for (std::size_t a = 0; a < dv; ++a)
      for (std::size_t r = 0; r < dw; ++r)
        for (const auto& e : w.rho(i).row(r)) t.push_back({a * dw + r, a * dw + e.col, e.value});
    rho.push_back(SparseMatrix::from_triplets(dv * dw, dv * dw, std::move(t)));
  }
  return Representation(v.algebra_ptr(), dv * dw, std::move(rho));
}

std::size_t end_index(std::size_t row, std::size_t col, std::size_t dim) { return col * dim + row; }

Vector flatten_end(const Matrix& t) {
  if (t.rows() != t.cols()) throw std::invalid_argument("flatten_end: matrix not square");
  const std::size_t d = t.rows();
  Vector v(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) v[end_index(r, c, d)] = t(r, c);
  return v;
}

Matrix unflatten_end(const Vector& v, std::size_t dim) {
  if (v.size() != dim * dim) throw std::invalid_argument("unflatten_end: length mismatch");
  Matrix t(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) t(r, c) = v[end_index(r, c, dim)];
  return t;
}

Representation end_rep(const Representation& v) {
  const std::size_t d = v.space_dim();
  std::vector<SparseMatrix> rho;
  for (const auto& m : v.rho()) {
    std::vector<Triplet> t;
    // (rho T)(r, c) = sum_k rho(r, k) T(k, c)
    for (std::size_t r = 0; r < d; ++r)
      for (const auto& e : m.row(r))
        for (std::size_t c = 0; c < d; ++c) t.push_back({end_index(r, c, d), end_index(e.col, c, d), e.value});
    // -(T rho)(r, c) = -sum_k T(r, k) rho(k, c)
    for (std::size_t k = 0; k < d; ++k)
      for (const auto& e : m.row(k))
        for (std::size_t r = 0; r < d; ++r) t.push_back({end_index(r, e.col, d), end_index(r, k, d), -e.value});
    rho.push_back(SparseMatrix::from_triplets(d * d, d * d, std::move(t)));
  }
  return Representation(v.algebra_ptr(), d * d, std::move(rho));
}

Representation ad2(AlgebraPtr g) {
  auto ad = adjoint(std::move(g));
  return tensor_rep(ad, ad);
}

Representation g_tensor_end_gdual(AlgebraPtr g) {
  auto ad = adjoint(g);
  return tensor_rep(ad, end_rep(coadjoint(g)));
}

Representation change_module_basis(const Representation& v, const Matrix& p) {
  auto p_sparse = SparseMatrix::from_dense(p);
  auto p_inv = SparseMatrix::from_dense(inverse(p));
  std::vector<SparseMatrix> rho;
  for (const auto& m : v.rho()) rho.push_back(p_inv * m * p_sparse);
  return Representation(v.algebra_ptr(), v.space_dim(), std::move(rho));
}

MorphismCheck is_module_morphism(const ModuleMap& f) {
  if (!same_algebra(f.source, f.target)) throw std::invalid_argument("module map between different algebras");
  if (f.matrix.rows() != f.target.space_dim() || f.matrix.cols() != f.source.space_dim())
    throw std::invalid_argument("module map matrix has wrong shape");
  for (std::size_t i = 0; i < f.source.rho().size(); ++i)
    if (!(f.matrix * f.source.rho(i) == f.target.rho(i) * f.matrix)) return {false, i};
  return {};
}

}  // namespace liebi
