#ifndef TRIDING_TEST_FIXTURES_HPP
#define TRIDING_TEST_FIXTURES_HPP

#include "triding/algebra.hpp"
#include "triding/module.hpp"
#include "triding/trimat.hpp"

namespace fixtures {

using namespace triding;

inline const PrimeField F2(2);

/// GF(2)[x]/(x^2), basis {1, x}.
inline AlgebraPtr dual_numbers(PrimeField f = F2) {
  return make_algebra(algebra_from_products(f, 2, {1, 0}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}));
}

/// Upper triangular 2x2 matrices, basis {e11, e22, e12}.
inline AlgebraPtr upper_triangular(PrimeField f = F2) {
  return make_algebra(algebra_from_products(
      f, 3, {1, 1, 0}, {{0, 0, 0}, {1, 1, 1}, {0, 2, 2}, {2, 1, 2}}));
}

inline AlgebraPtr ground_field(PrimeField f = F2) {
  return make_algebra(algebra_from_products(f, 1, {1}, {{0, 0, 0}}));
}

inline Matrix mat(const std::vector<std::vector<std::int64_t>>& rows, PrimeField f = F2) {
  return Matrix::from_rows(f, rows);
}

/// Simple module of k[x]/(x^2): x acts by zero.
inline Module simple_dual(const AlgebraPtr& r, Side side = Side::left) {
  return Module(r, side, {mat({{1}}, r->field()), mat({{0}}, r->field())});
}

/// Non-projective simple of the upper triangular algebra: e22 acts by 1.
inline Module t2_simple_np(const AlgebraPtr& t2) {
  return Module(t2, Side::left, {mat({{0}}), mat({{1}}), mat({{0}})});
}

/// Projective simple of the upper triangular algebra: e11 acts by 1.
inline Module t2_simple_p(const AlgebraPtr& t2) {
  return Module(t2, Side::left, {mat({{1}}), mat({{0}}), mat({{0}})});
}

/// T(R) = [[R, 0], [R, R]] for R = k[x]/(x^2).
inline RingPtr tr_ring(PrimeField f = F2) {
  auto r = dual_numbers(f);
  return build_ring(r, r, Bimodule::regular(r));
}

/// [[k, 0], [k, k]]: the lower triangular presentation of T2(k).
inline RingPtr t2_ring(PrimeField f = F2) {
  auto k = ground_field(f);
  return build_ring(k, k, Bimodule::regular(k));
}

/// (S, S, id) over T(R).
inline LeftTriple tr_s_s_id(const RingPtr& ring) {
  Module s = simple_dual(ring->a);
  return make_left_triple(ring, s, s, mat({{1}}));
}

/// (X, 0, 0) over T(R).
inline LeftTriple tr_x_0(const RingPtr& ring, const Module& x) {
  return make_left_triple(ring, x, Module::zero(ring->b, Side::left),
                          Matrix(ring->t->field(), 0, tensor_over(ring->u, x).module.dim()));
}

/// (0, X, 0) over T(R).
inline LeftTriple tr_0_x(const RingPtr& ring, const Module& x) {
  return make_left_triple(ring, Module::zero(ring->a, Side::left), x, Matrix(ring->t->field(), x.dim(), 0));
}

}  // namespace fixtures

#endif
