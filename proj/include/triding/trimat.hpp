#ifndef TRIDING_TRIMAT_HPP
#define TRIDING_TRIMAT_HPP

// Formal triangular matrix algebras [[A, 0], [U, B]] and their triple modules.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triding/module.hpp"

namespace triding {

/// T = [[A, 0], [U, B]]. The basis of t lists A, then U, then B.
struct TriMatRing {
  AlgebraPtr a;
  AlgebraPtr b;
  Bimodule u;
  AlgebraPtr t;

  std::size_t u_offset() const { return a->dim(); }
  std::size_t b_offset() const { return a->dim() + u.dim(); }
  Vec unit_a() const;  // (1_A, 0, 0)
  Vec unit_b() const;  // (0, 0, 1_B)
};

using RingPtr = std::shared_ptr<const TriMatRing>;

/// Throws ModuleMismatch when the bimodule is not over (b, a) or fields differ,
/// std::invalid_argument when u fails validation.
RingPtr build_ring(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& u);

/// (M1, M2, phi) with phi : U (x)_A M1 -> M2 given in the basis of `tensor`.
struct LeftTriple {
  RingPtr ring;
  Module m1;
  Module m2;
  TensorProduct tensor;
  Matrix phi;

  Morphism phi_morphism() const { return {tensor.module, m2, phi}; }
};

/// (W1, W2, phi) with phi : W2 (x)_B U -> W1 given in the basis of `tensor`.
struct RightTriple {
  RingPtr ring;
  Module w1;
  Module w2;
  TensorProduct tensor;
  Matrix phi;

  Morphism phi_morphism() const { return {tensor.module, w1, phi}; }
};

/// Computes the tensor module; throws ModuleMismatch on algebra/side/shape errors.
/// Linearity of phi is not checked here, see validate.
LeftTriple make_left_triple(const RingPtr& ring, Module m1, Module m2, Matrix phi);
RightTriple make_right_triple(const RingPtr& ring, Module w1, Module w2, Matrix phi);

std::optional<std::string> validate(const LeftTriple& m);
std::optional<std::string> validate(const RightTriple& w);

LeftTriple zero_left_triple(const RingPtr& ring);
RightTriple zero_right_triple(const RingPtr& ring);

/// The t-module M1 (+) M2, M1 coordinates first.
Module triple_to_module(const LeftTriple& m);
Module triple_to_module(const RightTriple& w);
/// Splits a t-module along e_A and e_B.
LeftTriple module_to_left_triple(const RingPtr& ring, const Module& x);
RightTriple module_to_right_triple(const RingPtr& ring, const Module& x);

/// x |-> (u |-> phi(u (x) x)), M1 -> Hom_B(U, M2).
struct TildeMap {
  HomModule hom;
  Morphism map;
};
TildeMap phi_tilde(const LeftTriple& m);
/// y |-> (u |-> phi(y (x) u)), W2 -> Hom_A(U, W1).
TildeMap phi_tilde(const RightTriple& w);

/// Field duals: D(M1, M2, phi) = (DM1, DM2, phi') with phi'(f (x) u)(x) = f(phi(u (x) x)).
RightTriple dual_triple(const LeftTriple& m);
LeftTriple dual_triple(const RightTriple& w);

/// p(X1, X2) = (X1, (U (x) X1) (+) X2) with phi the first-summand injection.
LeftTriple functor_p(const RingPtr& ring, const Module& x1, const Module& x2);
/// h(X1, X2) = (X1 (+) Hom_B(U, X2), X2) with phi the evaluation map.
LeftTriple functor_h(const RingPtr& ring, const Module& x1, const Module& x2);
std::pair<Module, Module> functor_q(const LeftTriple& m);

struct TripleMorphism {
  Matrix f1;  // first components
  Matrix f2;  // second components
};

/// Index-free description of the first failure; nullopt for a valid morphism.
std::optional<std::string> check_triple_morphism(const LeftTriple& src, const LeftTriple& dst,
                                                 const TripleMorphism& f);
std::optional<std::string> check_triple_morphism(const RightTriple& src, const RightTriple& dst,
                                                 const TripleMorphism& f);
/// diag(f1, f2) between the assembled modules.
Matrix triple_morphism_matrix(const TripleMorphism& f);

/// q(p(x)) -> x: identity on X1, projection onto X2.
TripleMorphism p_counit_projection(const LeftTriple& qpx);
/// p(q(m)) -> m: identity on M1, [phi, 1] on the second component.
TripleMorphism p_counit(const LeftTriple& m);
/// m -> h(q(m)): (1, phi~) on the first component, identity on M2.
TripleMorphism h_unit(const LeftTriple& m);

struct AdjunctionReport {
  std::size_t hom_p_x_m;   // dim Hom_T(p(x), m)
  std::size_t hom_x_qm;    // dim Hom_A(x1, m1) + dim Hom_B(x2, m2)
  std::size_t hom_m_h_x;   // dim Hom_T(m, h(x))
  std::size_t hom_qm_x;    // dim Hom_A(m1, x1) + dim Hom_B(m2, x2)
  bool holds() const { return hom_p_x_m == hom_x_qm && hom_m_h_x == hom_qm_x; }
};
AdjunctionReport adjunction_check(const Module& x1, const Module& x2, const LeftTriple& m);

struct StructureTest {
  bool verdict;
  std::vector<std::pair<std::string, bool>> conjuncts;
};

/// M1 projective, coker phi projective, phi mono.
StructureTest is_projective_triple(const LeftTriple& m);
/// Flat = projective for finite-dimensional modules.
StructureTest is_flat_triple(const LeftTriple& m);
/// W1 injective, ker phi~ injective, phi~ epi.
StructureTest is_injective_triple(const RightTriple& w);
/// FP-injective = injective for finite-dimensional modules.
StructureTest is_fp_injective_triple(const RightTriple& w);

}  // namespace triding

#endif
