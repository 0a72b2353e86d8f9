#include "triding/random.hpp"

namespace triding {

Vec random_vector(Rng& rng, const PrimeField& f, std::size_t n) {
  Vec v(n);
  for (auto& c : v) c = static_cast<Scalar>(rng() % f.prime());
  return v;
}

Vec random_element(Rng& rng, const Subspace& s) {
  const auto& f = s.field();
  Vec v(s.ambient_dim(), 0);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Scalar c = static_cast<Scalar>(rng() % f.prime());
    if (c == 0) continue;
    auto row = s.basis().row(i);
    for (std::size_t e = 0; e < v.size(); ++e) v[e] = f.add(v[e], f.mul(c, row[e]));
  }
  return v;
}

namespace {

Module random_piece(Rng& rng, const AlgebraPtr& alg, Side side) {
  const std::size_t max_rank = alg->dim() <= 2 ? 2 : 1;
  Module free = Module::free(alg, side, 1 + rng() % max_rank);
  std::vector<Vec> gens(rng() % 3);
  for (auto& g : gens) g = random_vector(rng, alg->field(), free.dim());
  Subspace sub = generated_submodule(free, gens);
  if (rng() % 3 == 0) return submodule(free, sub).module;
  return quotient_module(free, sub).module;
}

}  // namespace

Module random_module(Rng& rng, const AlgebraPtr& alg, Side side, std::size_t max_dim) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto kind = rng() % 8;
    if (kind == 0) return Module::zero(alg, side);
    Module m = kind <= 2 ? dual_module(random_piece(rng, alg, other_side(side)))
                         : random_piece(rng, alg, side);
    if (m.dim() <= max_dim) return m;
  }
  return Module::zero(alg, side);
}

LeftTriple random_left_triple(Rng& rng, const RingPtr& ring, std::size_t max_dim) {
  Module m1 = random_module(rng, ring->a, Side::left, max_dim);
  Module m2 = random_module(rng, ring->b, Side::left, max_dim);
  TensorProduct t = tensor_over(ring->u, m1);
  Vec flat = random_element(rng, hom_space(t.module, m2));
  Matrix phi = unflatten(flat, m2.dim(), t.module.dim(), m1.field());
  return make_left_triple(ring, std::move(m1), std::move(m2), std::move(phi));
}

RightTriple random_right_triple(Rng& rng, const RingPtr& ring, std::size_t max_dim) {
  Module w1 = random_module(rng, ring->a, Side::right, max_dim);
  Module w2 = random_module(rng, ring->b, Side::right, max_dim);
  TensorProduct t = tensor_over_right(w2, ring->u);
  Vec flat = random_element(rng, hom_space(t.module, w1));
  Matrix phi = unflatten(flat, w1.dim(), t.module.dim(), w1.field());
  return make_right_triple(ring, std::move(w1), std::move(w2), std::move(phi));
}

}  // namespace triding
