#include "triding/trimat.hpp"

#include <stdexcept>

#include "triding/homalg.hpp"

namespace triding {

Vec TriMatRing::unit_a() const {
  Vec v(t->dim(), 0);
  for (std::size_t i = 0; i < a->dim(); ++i) v[i] = a->one()[i];
  return v;
}

Vec TriMatRing::unit_b() const {
  Vec v(t->dim(), 0);
  for (std::size_t i = 0; i < b->dim(); ++i) v[b_offset() + i] = b->one()[i];
  return v;
}

RingPtr build_ring(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& u) {
  if (!(a->field() == b->field()))
    throw ModuleMismatch("A and B are over different fields");
  if (!same_algebra(u.left_algebra(), b) || !same_algebra(u.right_algebra(), a))
    throw ModuleMismatch("U must be a (B, A)-bimodule");
  if (auto v = u.validate()) throw std::invalid_argument("invalid bimodule: " + *v);

  const std::size_t da = a->dim(), du = u.dim(), db = b->dim(), n = da + du + db;
  const std::size_t uo = da, bo = da + du;
  Vec c(n * n * n, 0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& {
    return c[(i * n + j) * n + k];
  };
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) at(i, j, k) = a->structure(i, j, k);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k) at(bo + i, bo + j, bo + k) = b->structure(i, j, k);
  for (std::size_t k = 0; k < du; ++k) {
    for (std::size_t i = 0; i < da; ++i) {
      const Matrix& r = u.right_action(i);
      for (std::size_t l = 0; l < du; ++l) at(uo + k, i, uo + l) = r(l, k);
    }
    for (std::size_t i = 0; i < db; ++i) {
      const Matrix& l = u.left_action(i);
      for (std::size_t m = 0; m < du; ++m) at(bo + i, uo + k, uo + m) = l(m, k);
    }
  }
  Vec one(n, 0);
  for (std::size_t i = 0; i < da; ++i) one[i] = a->one()[i];
  for (std::size_t i = 0; i < db; ++i) one[bo + i] = b->one()[i];
  auto t = make_algebra(Algebra(a->field(), n, std::move(c), std::move(one)));
  if (auto v = t->validate()) throw std::logic_error("assembled triangular algebra invalid: " + *v);
  return std::make_shared<const TriMatRing>(TriMatRing{a, b, u, std::move(t)});
}

namespace {

void require_on(const Module& m, const AlgebraPtr& alg, Side side, const char* what) {
  if (m.side() != side || !same_algebra(m.algebra(), alg))
    throw ModuleMismatch(std::string(what) + " is over the wrong algebra or side");
}

// Matrix of an element of Hom(U, X) per basis vector of a source, in hom coordinates.
Matrix hom_coordinates(const HomModule& hom, const std::vector<Matrix>& maps) {
  const auto& f = hom.space.field();
  Matrix out(f, hom.space.dim(), maps.size());
  for (std::size_t j = 0; j < maps.size(); ++j) {
    auto c = hom.space.coordinates(maps[j].entries());
    for (std::size_t r = 0; r < c.size(); ++r) out(r, j) = c[r];
  }
  return out;
}

}  // namespace

LeftTriple make_left_triple(const RingPtr& ring, Module m1, Module m2, Matrix phi) {
  require_on(m1, ring->a, Side::left, "M1");
  require_on(m2, ring->b, Side::left, "M2");
  TensorProduct tensor = tensor_over(ring->u, m1);
  if (phi.rows() != m2.dim() || phi.cols() != tensor.module.dim())
    throw ModuleMismatch("phi has shape " + std::to_string(phi.rows()) + "x" +
                         std::to_string(phi.cols()) + ", expected " + std::to_string(m2.dim()) +
                         "x" + std::to_string(tensor.module.dim()));
  return {ring, std::move(m1), std::move(m2), std::move(tensor), std::move(phi)};
}

RightTriple make_right_triple(const RingPtr& ring, Module w1, Module w2, Matrix phi) {
  require_on(w1, ring->a, Side::right, "W1");
  require_on(w2, ring->b, Side::right, "W2");
  TensorProduct tensor = tensor_over_right(w2, ring->u);
  if (phi.rows() != w1.dim() || phi.cols() != tensor.module.dim())
    throw ModuleMismatch("phi has shape " + std::to_string(phi.rows()) + "x" +
                         std::to_string(phi.cols()) + ", expected " + std::to_string(w1.dim()) +
                         "x" + std::to_string(tensor.module.dim()));
  return {ring, std::move(w1), std::move(w2), std::move(tensor), std::move(phi)};
}

std::optional<std::string> validate(const LeftTriple& m) {
  if (auto v = m.m1.validate()) return "M1: " + *v;
  if (auto v = m.m2.validate()) return "M2: " + *v;
  if (auto i = check_morphism(m.phi_morphism()))
    return "phi is not B-linear at basis element " + std::to_string(*i);
  return std::nullopt;
}

std::optional<std::string> validate(const RightTriple& w) {
  if (auto v = w.w1.validate()) return "W1: " + *v;
  if (auto v = w.w2.validate()) return "W2: " + *v;
  if (auto i = check_morphism(w.phi_morphism()))
    return "phi is not A-linear at basis element " + std::to_string(*i);
  return std::nullopt;
}

LeftTriple zero_left_triple(const RingPtr& ring) {
  const auto& f = ring->t->field();
  return make_left_triple(ring, Module::zero(ring->a, Side::left), Module::zero(ring->b, Side::left),
                          Matrix(f, 0, 0));
}

RightTriple zero_right_triple(const RingPtr& ring) {
  const auto& f = ring->t->field();
  return make_right_triple(ring, Module::zero(ring->a, Side::right),
                           Module::zero(ring->b, Side::right), Matrix(f, 0, 0));
}

Module triple_to_module(const LeftTriple& m) {
  const auto& ring = *m.ring;
  const auto& f = ring.t->field();
  const std::size_t d1 = m.m1.dim(), d2 = m.m2.dim(), n = d1 + d2, du = ring.u.dim();
  const Matrix amb = m.phi * m.tensor.surjection;
  std::vector<Matrix> act;
  act.reserve(ring.t->dim());
  for (std::size_t i = 0; i < ring.a->dim(); ++i) {
    Matrix x(f, n, n);
    x.set_block(0, 0, m.m1.action(i));
    act.push_back(std::move(x));
  }
  for (std::size_t k = 0; k < du; ++k) {
    Matrix x(f, n, n);
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t r = 0; r < d2; ++r) x(d1 + r, j) = amb(r, k * d1 + j);
    act.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < ring.b->dim(); ++i) {
    Matrix x(f, n, n);
    x.set_block(d1, d1, m.m2.action(i));
    act.push_back(std::move(x));
  }
  return Module(ring.t, Side::left, std::move(act));
}

Module triple_to_module(const RightTriple& w) {
  const auto& ring = *w.ring;
  const auto& f = ring.t->field();
  const std::size_t d1 = w.w1.dim(), d2 = w.w2.dim(), n = d1 + d2, du = ring.u.dim();
  const Matrix amb = w.phi * w.tensor.surjection;
  std::vector<Matrix> act;
  act.reserve(ring.t->dim());
  for (std::size_t i = 0; i < ring.a->dim(); ++i) {
    Matrix x(f, n, n);
    x.set_block(0, 0, w.w1.action(i));
    act.push_back(std::move(x));
  }
  for (std::size_t k = 0; k < du; ++k) {
    Matrix x(f, n, n);
    for (std::size_t j = 0; j < d2; ++j)
      for (std::size_t r = 0; r < d1; ++r) x(r, d1 + j) = amb(r, j * du + k);
    act.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < ring.b->dim(); ++i) {
    Matrix x(f, n, n);
    x.set_block(d1, d1, w.w2.action(i));
    act.push_back(std::move(x));
  }
  return Module(ring.t, Side::right, std::move(act));
}

namespace {

struct Split {
  Subspace s1;
  Subspace s2;
  Module m1;
  Module m2;
};

Split split(const RingPtr& ring, const Module& x, Side side) {
  if (x.side() != side || !same_algebra(x.algebra(), ring->t))
    throw ModuleMismatch("module is not over the triangular algebra on the expected side");
  Subspace s1 = Subspace::column_span(x.act(ring->unit_a()));
  Subspace s2 = Subspace::column_span(x.act(ring->unit_b()));
  std::vector<Matrix> a1, a2;
  for (std::size_t i = 0; i < ring->a->dim(); ++i) a1.push_back(restrict_operator(s1, x.action(i)));
  for (std::size_t i = 0; i < ring->b->dim(); ++i)
    a2.push_back(restrict_operator(s2, x.action(ring->b_offset() + i)));
  Module m1(ring->a, side, std::move(a1));
  Module m2(ring->b, side, std::move(a2));
  return {std::move(s1), std::move(s2), std::move(m1), std::move(m2)};
}

}  // namespace

LeftTriple module_to_left_triple(const RingPtr& ring, const Module& x) {
  Split s = split(ring, x, Side::left);
  TensorProduct tensor = tensor_over(ring->u, s.m1);
  const std::size_t d1 = s.m1.dim(), d2 = s.m2.dim(), du = ring->u.dim();
  Matrix amb(x.field(), d2, du * d1);
  for (std::size_t k = 0; k < du; ++k)
    for (std::size_t j = 0; j < d1; ++j) {
      auto c = s.s2.coordinates(x.action(ring->u_offset() + k).apply(s.s1.basis().row(j)));
      for (std::size_t r = 0; r < d2; ++r) amb(r, k * d1 + j) = c[r];
    }
  Matrix phi = amb * tensor.section;
  return {ring, std::move(s.m1), std::move(s.m2), std::move(tensor), std::move(phi)};
}

RightTriple module_to_right_triple(const RingPtr& ring, const Module& x) {
  Split s = split(ring, x, Side::right);
  TensorProduct tensor = tensor_over_right(s.m2, ring->u);
  const std::size_t d1 = s.m1.dim(), d2 = s.m2.dim(), du = ring->u.dim();
  Matrix amb(x.field(), d1, d2 * du);
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t k = 0; k < du; ++k) {
      auto c = s.s1.coordinates(x.action(ring->u_offset() + k).apply(s.s2.basis().row(j)));
      for (std::size_t r = 0; r < d1; ++r) amb(r, j * du + k) = c[r];
    }
  Matrix phi = amb * tensor.section;
  return {ring, std::move(s.m1), std::move(s.m2), std::move(tensor), std::move(phi)};
}

TildeMap phi_tilde(const LeftTriple& m) {
  HomModule hom = hom_over_left(m.ring->u, m.m2);
  const std::size_t d1 = m.m1.dim(), d2 = m.m2.dim(), du = m.ring->u.dim();
  const Matrix amb = m.phi * m.tensor.surjection;
  std::vector<Matrix> maps;
  for (std::size_t j = 0; j < d1; ++j) {
    Matrix g(m.m1.field(), d2, du);
    for (std::size_t k = 0; k < du; ++k)
      for (std::size_t r = 0; r < d2; ++r) g(r, k) = amb(r, k * d1 + j);
    maps.push_back(std::move(g));
  }
  Matrix mat = hom_coordinates(hom, maps);
  Morphism map{m.m1, hom.module, std::move(mat)};
  return {std::move(hom), std::move(map)};
}

TildeMap phi_tilde(const RightTriple& w) {
  HomModule hom = hom_over(w.ring->u, w.w1);
  const std::size_t d1 = w.w1.dim(), d2 = w.w2.dim(), du = w.ring->u.dim();
  const Matrix amb = w.phi * w.tensor.surjection;
  std::vector<Matrix> maps;
  for (std::size_t j = 0; j < d2; ++j) {
    Matrix g(w.w1.field(), d1, du);
    for (std::size_t k = 0; k < du; ++k)
      for (std::size_t r = 0; r < d1; ++r) g(r, k) = amb(r, j * du + k);
    maps.push_back(std::move(g));
  }
  Matrix mat = hom_coordinates(hom, maps);
  Morphism map{w.w2, hom.module, std::move(mat)};
  return {std::move(hom), std::move(map)};
}

RightTriple dual_triple(const LeftTriple& m) {
  Module w1 = dual_module(m.m1);
  Module w2 = dual_module(m.m2);
  TensorProduct tensor = tensor_over_right(w2, m.ring->u);
  const std::size_t d1 = m.m1.dim(), d2 = m.m2.dim(), du = m.ring->u.dim();
  const Matrix amb = m.phi * m.tensor.surjection;
  Matrix dual_amb(m.m1.field(), d1, d2 * du);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t i = 0; i < d2; ++i)
      for (std::size_t k = 0; k < du; ++k) dual_amb(j, i * du + k) = amb(i, k * d1 + j);
  Matrix phi = dual_amb * tensor.section;
  return {m.ring, std::move(w1), std::move(w2), std::move(tensor), std::move(phi)};
}

LeftTriple dual_triple(const RightTriple& w) {
  Module m1 = dual_module(w.w1);
  Module m2 = dual_module(w.w2);
  TensorProduct tensor = tensor_over(w.ring->u, m1);
  const std::size_t d1 = w.w1.dim(), d2 = w.w2.dim(), du = w.ring->u.dim();
  const Matrix amb = w.phi * w.tensor.surjection;
  Matrix dual_amb(w.w1.field(), d2, du * d1);
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t k = 0; k < du; ++k)
      for (std::size_t i = 0; i < d1; ++i) dual_amb(j, k * d1 + i) = amb(i, j * du + k);
  Matrix phi = dual_amb * tensor.section;
  return {w.ring, std::move(m1), std::move(m2), std::move(tensor), std::move(phi)};
}

LeftTriple functor_p(const RingPtr& ring, const Module& x1, const Module& x2) {
  require_on(x1, ring->a, Side::left, "X1");
  require_on(x2, ring->b, Side::left, "X2");
  TensorProduct tensor = tensor_over(ring->u, x1);
  const auto& f = x1.field();
  const std::size_t dt = tensor.module.dim();
  Module m2 = direct_sum({tensor.module, x2}).module;
  Matrix phi(f, dt + x2.dim(), dt);
  phi.set_block(0, 0, Matrix::identity(f, dt));
  return {ring, x1, std::move(m2), std::move(tensor), std::move(phi)};
}

LeftTriple functor_h(const RingPtr& ring, const Module& x1, const Module& x2) {
  require_on(x1, ring->a, Side::left, "X1");
  require_on(x2, ring->b, Side::left, "X2");
  HomModule hom = hom_over_left(ring->u, x2);
  Module m1 = direct_sum({x1, hom.module}).module;
  TensorProduct tensor = tensor_over(ring->u, m1);
  const std::size_t d1 = m1.dim(), dx = x1.dim(), du = ring->u.dim();
  Matrix amb(x1.field(), x2.dim(), du * d1);
  for (std::size_t l = 0; l < hom.space.dim(); ++l) {
    Matrix g = hom.element(l);
    for (std::size_t k = 0; k < du; ++k)
      for (std::size_t r = 0; r < x2.dim(); ++r) amb(r, k * d1 + dx + l) = g(r, k);
  }
  Matrix phi = amb * tensor.section;
  return {ring, std::move(m1), x2, std::move(tensor), std::move(phi)};
}

std::pair<Module, Module> functor_q(const LeftTriple& m) { return {m.m1, m.m2}; }

namespace {

std::optional<std::string> check_components(const Module& s1, const Module& s2, const Module& d1,
                                            const Module& d2, const TripleMorphism& f) {
  if (f.f1.rows() != d1.dim() || f.f1.cols() != s1.dim()) return "f1 has the wrong shape";
  if (f.f2.rows() != d2.dim() || f.f2.cols() != s2.dim()) return "f2 has the wrong shape";
  if (auto i = check_morphism({s1, d1, f.f1}))
    return "f1 is not linear at basis element " + std::to_string(*i);
  if (auto i = check_morphism({s2, d2, f.f2}))
    return "f2 is not linear at basis element " + std::to_string(*i);
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_triple_morphism(const LeftTriple& src, const LeftTriple& dst,
                                                 const TripleMorphism& f) {
  if (auto v = check_components(src.m1, src.m2, dst.m1, dst.m2, f)) return v;
  Morphism t = tensor_map(src.ring->u, {src.m1, dst.m1, f.f1}, src.tensor, dst.tensor);
  if (dst.phi * t.matrix != f.f2 * src.phi) return "naturality square does not commute";
  return std::nullopt;
}

std::optional<std::string> check_triple_morphism(const RightTriple& src, const RightTriple& dst,
                                                 const TripleMorphism& f) {
  if (auto v = check_components(src.w1, src.w2, dst.w1, dst.w2, f)) return v;
  const auto& fld = f.f2.field();
  Matrix t = dst.tensor.surjection * kron(f.f2, Matrix::identity(fld, src.ring->u.dim())) *
             src.tensor.section;
  if (dst.phi * t != f.f1 * src.phi) return "naturality square does not commute";
  return std::nullopt;
}

Matrix triple_morphism_matrix(const TripleMorphism& f) { return block_diagonal({f.f1, f.f2}); }

TripleMorphism p_counit_projection(const LeftTriple& qpx) {
  const auto& f = qpx.m1.field();
  const std::size_t dt = qpx.tensor.module.dim(), dx2 = qpx.m2.dim() - dt;
  Matrix proj(f, dx2, qpx.m2.dim());
  proj.set_block(0, dt, Matrix::identity(f, dx2));
  return {Matrix::identity(f, qpx.m1.dim()), std::move(proj)};
}

TripleMorphism p_counit(const LeftTriple& m) {
  const auto& f = m.m1.field();
  return {Matrix::identity(f, m.m1.dim()), hstack(m.phi, Matrix::identity(f, m.m2.dim()))};
}

TripleMorphism h_unit(const LeftTriple& m) {
  const auto& f = m.m1.field();
  TildeMap tilde = phi_tilde(m);
  return {vstack(Matrix::identity(f, m.m1.dim()), tilde.map.matrix),
          Matrix::identity(f, m.m2.dim())};
}

AdjunctionReport adjunction_check(const Module& x1, const Module& x2, const LeftTriple& m) {
  Module pm = triple_to_module(functor_p(m.ring, x1, x2));
  Module hm = triple_to_module(functor_h(m.ring, x1, x2));
  Module mm = triple_to_module(m);
  return {hom_space(pm, mm).dim(), hom_space(x1, m.m1).dim() + hom_space(x2, m.m2).dim(),
          hom_space(mm, hm).dim(), hom_space(m.m1, x1).dim() + hom_space(m.m2, x2).dim()};
}

StructureTest is_projective_triple(const LeftTriple& m) {
  Morphism phi = m.phi_morphism();
  bool p1 = is_projective(m.m1);
  bool pc = is_projective(cokernel_module(phi).module);
  bool mono = rank(m.phi) == m.tensor.module.dim();
  return {p1 && pc && mono,
          {{"m1_projective", p1}, {"coker_phi_projective", pc}, {"phi_mono", mono}}};
}

StructureTest is_flat_triple(const LeftTriple& m) {
  StructureTest s = is_projective_triple(m);
  s.conjuncts = {{"m1_flat", s.conjuncts[0].second},
                 {"coker_phi_flat", s.conjuncts[1].second},
                 {"phi_mono", s.conjuncts[2].second}};
  return s;
}

StructureTest is_injective_triple(const RightTriple& w) {
  TildeMap tilde = phi_tilde(w);
  bool i1 = is_injective(w.w1);
  bool ik = is_injective(kernel_module(tilde.map).module);
  bool epi = rank(tilde.map.matrix) == tilde.hom.module.dim();
  return {i1 && ik && epi,
          {{"w1_injective", i1}, {"ker_phi_tilde_injective", ik}, {"phi_tilde_epi", epi}}};
}

StructureTest is_fp_injective_triple(const RightTriple& w) {
  StructureTest s = is_injective_triple(w);
  s.conjuncts = {{"w1_fp_injective", s.conjuncts[0].second},
                 {"ker_phi_tilde_fp_injective", s.conjuncts[1].second},
                 {"phi_tilde_epi", s.conjuncts[2].second}};
  return s;
}

}  // namespace triding
