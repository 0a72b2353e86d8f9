#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "triding/homalg.hpp"
#include "triding/random.hpp"

using namespace triding;
using namespace fixtures;

TEST_CASE("build_ring") {
  auto tr = tr_ring();
  CHECK(tr->t->dim() == 6);
  CHECK_FALSE(tr->t->validate());
  CHECK(tr->unit_a() == Vec{1, 0, 0, 0, 0, 0});
  CHECK(tr->unit_b() == Vec{0, 0, 0, 0, 1, 0});

  // a = b = u = k gives T2(k) after relabelling a -> e22, u -> e12, b -> e11.
  auto t2 = t2_ring()->t;
  auto up = upper_triangular();
  const std::size_t relabel[3] = {1, 2, 0};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(t2->structure(i, j, k) == up->structure(relabel[i], relabel[j], relabel[k]));

  // U = 0 gives the product algebra.
  auto r = dual_numbers();
  auto prod = build_ring(r, upper_triangular(), Bimodule::zero(upper_triangular(), r));
  CHECK(prod->t->dim() == 5);
  CHECK_FALSE(prod->t->validate());
  auto t = prod->t;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) CHECK(t->structure(i, j, k) == 0);
}

TEST_CASE("build_ring rejects mismatched inputs") {
  auto r = dual_numbers();
  auto t2 = upper_triangular();
  CHECK_THROWS_AS(build_ring(r, t2, Bimodule::regular(r)), ModuleMismatch);
  CHECK_THROWS_AS(build_ring(r, dual_numbers(PrimeField(3)), Bimodule::regular(r)), ModuleMismatch);
  Bimodule bad(r, r, {mat({{1, 0}, {0, 1}}), mat({{0, 0}, {1, 0}})},
               {mat({{1, 0}, {0, 1}}), mat({{0, 1}, {0, 0}})});
  CHECK_THROWS_AS(build_ring(r, r, bad), std::invalid_argument);
}

TEST_CASE("triple validation") {
  auto tr = tr_ring();
  CHECK_FALSE(validate(tr_s_s_id(tr)));
  CHECK_FALSE(validate(zero_left_triple(tr)));
  CHECK_FALSE(validate(zero_right_triple(tr)));
  Module reg = Module::regular(tr->a, Side::left);
  // R (x) R = R -> R via the second basis vector is not R-linear.
  auto bad = make_left_triple(tr, reg, reg, mat({{0, 1}, {0, 0}}));
  CHECK(validate(bad));
  CHECK_THROWS_AS(make_left_triple(tr, reg, reg, mat({{1}})), ModuleMismatch);
}

TEST_CASE("triple to module and back") {
  auto tr = tr_ring();
  Module reg = Module::regular(tr->a, Side::left);
  CHECK(triple_to_module(zero_left_triple(tr)).dim() == 0);

  // (A, U (x) A, id) is the projective t-module t e_A.
  auto col = make_left_triple(tr, reg, tensor_over(tr->u, reg).module, mat({{1, 0}, {0, 1}}));
  Module x = triple_to_module(col);
  CHECK_FALSE(x.validate());
  CHECK(is_projective(x));
  Module treg = Module::regular(tr->t, Side::left);
  Subspace te_a =
      Subspace::column_span(Module::regular(tr->t, Side::right).act(tr->unit_a()));
  CHECK(is_isomorphic(x, submodule(treg, te_a).module).verdict == IsoVerdict::yes);

  // The regular t-module splits as (A, U (+) B).
  auto back = module_to_left_triple(tr, treg);
  CHECK(back.m1.dim() == 2);
  CHECK(back.m2.dim() == 4);
  CHECK_FALSE(validate(back));
  CHECK(rank(back.phi) == 2);
  CHECK(is_isomorphic(triple_to_module(back), treg).verdict == IsoVerdict::yes);
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(23);
  for (auto ring : {tr_ring(), t2_ring()}) {
    for (int t = 0; t < 60; ++t) {
      LeftTriple m = random_left_triple(rng, ring, 3);
      REQUIRE_FALSE(validate(m));
      Module x = triple_to_module(m);
      REQUIRE_FALSE(x.validate());
      CHECK(is_isomorphic(triple_to_module(module_to_left_triple(ring, x)), x).verdict ==
            IsoVerdict::yes);
      RightTriple w = random_right_triple(rng, ring, 3);
      REQUIRE_FALSE(validate(w));
      Module y = triple_to_module(w);
      REQUIRE_FALSE(y.validate());
      CHECK(is_isomorphic(triple_to_module(module_to_right_triple(ring, y)), y).verdict ==
            IsoVerdict::yes);
    }
  }
}

TEST_CASE("dual triples assemble to dual modules") {
  std::mt19937_64 rng(29);
  for (auto ring : {tr_ring(), t2_ring()}) {
    for (int t = 0; t < 60; ++t) {
      LeftTriple m = random_left_triple(rng, ring, 3);
      RightTriple dm = dual_triple(m);
      REQUIRE_FALSE(validate(dm));
      CHECK(is_isomorphic(triple_to_module(dm), dual_module(triple_to_module(m))).verdict ==
            IsoVerdict::yes);
      LeftTriple ddm = dual_triple(dm);
      CHECK(ddm.m1 == m.m1);
      CHECK(ddm.m2 == m.m2);
      CHECK(ddm.phi == m.phi);
      RightTriple w = random_right_triple(rng, ring, 3);
      LeftTriple dw = dual_triple(w);
      REQUIRE_FALSE(validate(dw));
      CHECK(is_isomorphic(triple_to_module(dw), dual_module(triple_to_module(w))).verdict ==
            IsoVerdict::yes);
    }
  }
}

TEST_CASE("exact sequences of triples") {
  std::mt19937_64 rng(31);
  auto tr = tr_ring();
  for (int t = 0; t < 40; ++t) {
    LeftTriple m = random_left_triple(rng, tr, 3);
    LeftTriple n = random_left_triple(rng, tr, 3);
    Module x = triple_to_module(m);
    Module y = triple_to_module(n);
    Subspace h = hom_space(x, y);
    if (h.dim() == 0) continue;
    Matrix f = unflatten(h.vector(rng() % h.dim()), y.dim(), x.dim(), x.field());
    // A t-linear map between assembled triples is block diagonal and natural.
    const std::size_t a1 = m.m1.dim(), b1 = n.m1.dim();
    TripleMorphism tf{f.block(0, 0, b1, a1), f.block(b1, a1, n.m2.dim(), m.m2.dim())};
    CHECK(triple_morphism_matrix(tf) == f);
    CHECK_FALSE(check_triple_morphism(m, n, tf));
    // Kernel and cokernel dimensions agree componentwise.
    Morphism g{x, y, f};
    std::size_t k1 = m.m1.dim() - rank(tf.f1), k2 = m.m2.dim() - rank(tf.f2);
    CHECK(kernel_module(g).module.dim() == k1 + k2);
    CHECK(cokernel_module(g).module.dim() == y.dim() - rank(tf.f1) - rank(tf.f2));
  }
}

TEST_CASE("naturality rejects a non-commuting square") {
  auto tr = tr_ring();
  LeftTriple m = tr_s_s_id(tr);
  LeftTriple z = tr_x_0(tr, simple_dual(tr->a));
  // (S, S) -> (S, 0) with f1 = id: phi^z = 0 so the square commutes.
  CHECK_FALSE(check_triple_morphism(m, z, {mat({{1}}), Matrix(m.m1.field(), 0, 1)}));
  // (S, 0) -> (S, S) with f1 = id: phi^m (1 (x) f1) = id but f2 phi^z = 0.
  CHECK(check_triple_morphism(z, m, {mat({{1}}), Matrix(m.m1.field(), 1, 0)}));
}

TEST_CASE("phi tilde") {
  auto tr = tr_ring();
  auto r = tr->a;
  Module rr = Module::regular(r, Side::right);
  // W = (R, R, multiplication): phi~ is evaluation at 1, an isomorphism.
  auto w = make_right_triple(tr, rr, rr, mat({{1, 0}, {0, 1}}));
  REQUIRE_FALSE(validate(w));
  TildeMap tl = phi_tilde(w);
  CHECK(tl.hom.module.dim() == 2);
  CHECK(is_invertible(tl.map.matrix));
  CHECK_FALSE(check_morphism(tl.map));
  // phi = 0 gives phi~ = 0.
  auto w0 = make_right_triple(tr, rr, rr, Matrix(rr.field(), 2, 2));
  CHECK(phi_tilde(w0).map.matrix.is_zero());
  // W1 = 0: phi~ lands in the zero module.
  auto wz = make_right_triple(tr, Module::zero(r, Side::right), rr, Matrix(rr.field(), 0, 2));
  CHECK(phi_tilde(wz).hom.module.dim() == 0);

  std::mt19937_64 rng(37);
  for (int t = 0; t < 40; ++t) {
    auto m = random_left_triple(rng, tr, 3);
    CHECK_FALSE(check_morphism(phi_tilde(m).map));
    auto rw = random_right_triple(rng, tr, 3);
    CHECK_FALSE(check_morphism(phi_tilde(rw).map));
  }
}

TEST_CASE("functors p, q, h") {
  auto tr = tr_ring();
  Module s = simple_dual(tr->a);
  Module zb = Module::zero(tr->b, Side::left);
  auto ps = functor_p(tr, s, zb);
  CHECK_FALSE(validate(ps));
  CHECK(ps.m2.dim() == 1);
  CHECK(ps.phi == mat({{1}}));
  CHECK(is_isomorphic(triple_to_module(ps), triple_to_module(tr_s_s_id(tr))).verdict ==
        IsoVerdict::yes);

  Module reg = Module::regular(tr->b, Side::left);
  auto pq = functor_q(functor_p(tr, s, reg));
  CHECK(pq.first == s);
  CHECK(pq.second.dim() == 1 + 2);

  auto h = functor_h(tr, Module::zero(tr->a, Side::left), s);
  CHECK_FALSE(validate(h));
  CHECK(h.m1.dim() == 1);
  CHECK(h.m2 == s);
  CHECK(phi_tilde(h).map.matrix.is_identity());
}

TEST_CASE("units and counits are triple morphisms") {
  std::mt19937_64 rng(41);
  for (auto ring : {tr_ring(), t2_ring()}) {
    for (int t = 0; t < 40; ++t) {
      auto m = random_left_triple(rng, ring, 3);
      auto pq = functor_p(ring, m.m1, m.m2);
      CHECK_FALSE(check_triple_morphism(pq, m, p_counit(m)));
      auto hq = functor_h(ring, m.m1, m.m2);
      CHECK_FALSE(check_triple_morphism(m, hq, h_unit(m)));
      auto x1 = random_module(rng, ring->a, Side::left, 3);
      auto x2 = random_module(rng, ring->b, Side::left, 3);
      CHECK_FALSE(check_morphism({functor_p(ring, x1, x2).m2, x2,
                                  p_counit_projection(functor_p(ring, x1, x2)).f2}));
    }
  }
}

TEST_CASE("adjunction dimension identities") {
  auto tr = tr_ring();
  Module s = simple_dual(tr->a);
  auto za = Module::zero(tr->a, Side::left), zb = Module::zero(tr->b, Side::left);
  auto r0 = adjunction_check(za, zb, tr_s_s_id(tr));
  CHECK(r0.hom_p_x_m == 0);
  CHECK(r0.hom_m_h_x == 0);
  auto r1 = adjunction_check(s, zb, tr_s_s_id(tr));
  CHECK(r1.hom_p_x_m == 1);
  CHECK(r1.hom_x_qm == 1);
  CHECK(r1.holds());
  std::mt19937_64 rng(43);
  for (auto ring : {tr_ring(), t2_ring()}) {
    for (int t = 0; t < 60; ++t) {
      auto m = random_left_triple(rng, ring, 3);
      auto x1 = random_module(rng, ring->a, Side::left, 3);
      auto x2 = random_module(rng, ring->b, Side::left, 3);
      CHECK(adjunction_check(x1, x2, m).holds());
    }
    auto m = random_left_triple(rng, ring, 3);
    auto rep = adjunction_check(Module::regular(ring->a, Side::left),
                                Module::regular(ring->b, Side::left), m);
    CHECK(rep.hom_p_x_m == m.m1.dim() + m.m2.dim());
  }
}

TEST_CASE("projective triples") {
  auto tr = tr_ring();
  Module reg = Module::regular(tr->a, Side::left);
  auto col = make_left_triple(tr, reg, tensor_over(tr->u, reg).module, mat({{1, 0}, {0, 1}}));
  CHECK(is_projective_triple(col).verdict);
  auto sx = is_projective_triple(tr_x_0(tr, simple_dual(tr->a)));
  CHECK_FALSE(sx.verdict);
  CHECK_FALSE(sx.conjuncts[2].second);
  CHECK(is_projective_triple(tr_0_x(tr, Module::regular(tr->b, Side::left))).verdict);
  CHECK(is_flat_triple(col).verdict);
}

TEST_CASE("injective triples") {
  auto tr = tr_ring();
  Module rr = Module::regular(tr->a, Side::right);
  auto w = make_right_triple(tr, rr, Module::zero(tr->b, Side::right), Matrix(rr.field(), 2, 0));
  auto res = is_injective_triple(w);
  CHECK_FALSE(res.verdict);
  CHECK(res.conjuncts[0].second);
  CHECK_FALSE(res.conjuncts[2].second);
  CHECK(is_injective_triple(zero_right_triple(tr)).verdict);
  Module reg = Module::regular(tr->a, Side::left);
  auto col = make_left_triple(tr, reg, tensor_over(tr->u, reg).module, mat({{1, 0}, {0, 1}}));
  CHECK(is_injective_triple(dual_triple(col)).verdict);
  CHECK(is_fp_injective_triple(dual_triple(col)).verdict);
}

TEST_CASE("structure tests agree with the assembled module") {
  std::mt19937_64 rng(47);
  for (auto ring : {tr_ring(), t2_ring()}) {
    for (int t = 0; t < 80; ++t) {
      auto m = random_left_triple(rng, ring, 3);
      CHECK(is_projective_triple(m).verdict == is_projective(triple_to_module(m)));
      auto w = random_right_triple(rng, ring, 3);
      CHECK(is_injective_triple(w).verdict == is_injective(triple_to_module(w)));
    }
  }
}
