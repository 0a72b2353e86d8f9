#ifndef TRIDING_MODULE_HPP
#define TRIDING_MODULE_HPP

// Finite-dimensional modules, morphisms, bimodules and the functors
// U (x)_A - and Hom(U, -).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triding/algebra.hpp"
#include "triding/linfield.hpp"

namespace triding {

enum class Side { left, right };

inline Side other_side(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

class ModuleMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A module given by one action matrix per algebra basis element. Vectors are
/// columns; for a right module x.a is computed as action(a) * x, so right
/// modules compose their action matrices in reverse order.
class Module {
 public:
  Module(AlgebraPtr alg, Side side, std::vector<Matrix> action);

  static Module zero(AlgebraPtr alg, Side side);
  static Module regular(AlgebraPtr alg, Side side);
  /// Lambda^rank with the regular action on each summand.
  static Module free(AlgebraPtr alg, Side side, std::size_t rank);

  const AlgebraPtr& algebra() const { return alg_; }
  const PrimeField& field() const { return alg_->field(); }
  Side side() const { return side_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const { return action_; }
  /// Action matrix of an arbitrary algebra element given in coordinates.
  Matrix act(std::span<const Scalar> element) const;

  std::optional<std::string> validate() const;

  bool operator==(const Module& other) const;

 private:
  AlgebraPtr alg_;
  Side side_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

/// A right module over A is the same data as a left module over A^op.
Module as_left(const Module& m);
/// Inverse of as_left: reinterpret a left module over alg^op as a module of `side` over alg.
Module from_left(const Module& left, const AlgebraPtr& alg, Side side);

struct Morphism {
  Module source;
  Module target;
  Matrix matrix;  // target.dim x source.dim
};

Morphism identity_morphism(const Module& m);
Morphism zero_morphism(const Module& source, const Module& target);
Morphism compose(const Morphism& g, const Morphism& f);

void require_compatible(const Module& a, const Module& b);

/// First basis index where the intertwining identity fails; nullopt when f is a
/// morphism. Throws ModuleMismatch for modules over different algebras or sides.
std::optional<std::size_t> check_morphism(const Morphism& f);

struct Submodule {
  Module module;
  Morphism inclusion;
};

struct Quotient {
  Module module;
  Morphism projection;
  Matrix section;
};

Subspace generated_submodule(const Module& m, const std::vector<Vec>& generators);
bool is_submodule(const Module& m, const Subspace& sub);
Submodule submodule(const Module& m, const Subspace& sub);
Quotient quotient_module(const Module& m, const Subspace& sub);

Submodule kernel_module(const Morphism& f);
Submodule image_module(const Morphism& f);
Quotient cokernel_module(const Morphism& f);

struct DirectSum {
  Module module;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

DirectSum direct_sum(const std::vector<Module>& summands, const AlgebraPtr& alg, Side side);
DirectSum direct_sum(const std::vector<Module>& summands);

/// All intertwining matrices X (n.dim x m.dim), flattened row-major.
Subspace hom_space(const Module& m, const Module& n);
Matrix unflatten(std::span<const Scalar> v, std::size_t rows, std::size_t cols,
                 const PrimeField& field);

/// Field dual Hom_k(M, k): transposed actions on the dual basis, opposite side.
Module dual_module(const Module& m);
/// Transpose of f, a morphism D(target) -> D(source).
Morphism dual_morphism(const Morphism& f);

/// Action restricted to an invariant subspace, in the subspace's canonical coordinates.
Matrix restrict_operator(const Subspace& sub, const Matrix& op);

/// (B, A)-bimodule U: left B-action and right A-action that commute.
class Bimodule {
 public:
  Bimodule(AlgebraPtr left_alg, AlgebraPtr right_alg, std::vector<Matrix> left_action,
           std::vector<Matrix> right_action);

  static Bimodule regular(const AlgebraPtr& alg);
  static Bimodule zero(const AlgebraPtr& left_alg, const AlgebraPtr& right_alg);

  const AlgebraPtr& left_algebra() const { return left_alg_; }
  const AlgebraPtr& right_algebra() const { return right_alg_; }
  std::size_t dim() const { return dim_; }
  const Matrix& left_action(std::size_t b) const { return left_action_[b]; }
  const Matrix& right_action(std::size_t a) const { return right_action_[a]; }

  Module left_module() const;   // _B U
  Module right_module() const;  // U_A

  std::optional<std::string> validate() const;

 private:
  AlgebraPtr left_alg_;
  AlgebraPtr right_alg_;
  std::size_t dim_;
  std::vector<Matrix> left_action_;
  std::vector<Matrix> right_action_;
};

/// A tensor product with its canonical surjection from the k-linear tensor
/// product. Ambient index is first_factor_index * second_dim + second_factor_index.
struct TensorProduct {
  Module module;
  Matrix surjection;
  Matrix section;
};

/// U (x)_A M for a left A-module M; a left B-module.
TensorProduct tensor_over(const Bimodule& u, const Module& m);
/// W (x)_B U for a right B-module W; a right A-module.
TensorProduct tensor_over_right(const Module& w, const Bimodule& u);
/// 1 (x) f : U (x)_A M -> U (x)_A N.
Morphism tensor_map(const Bimodule& u, const Morphism& f, const TensorProduct& src,
                    const TensorProduct& dst);

/// Hom space realised as a module. Element i is the matrix of its i-th basis map.
struct HomModule {
  Module module;
  Subspace space;
  std::size_t rows;
  std::size_t cols;
  Matrix element(std::size_t i) const;
};

/// Hom_A(U, W) for a right A-module W; a right B-module via (f.b)(u) = f(b.u).
HomModule hom_over(const Bimodule& u, const Module& w);
/// Hom_B(U, M) for a left B-module M; a left A-module via (a.f)(u) = f(u.a).
HomModule hom_over_left(const Bimodule& u, const Module& m);

enum class IsoVerdict { yes, no, inconclusive };
const char* to_string(IsoVerdict v);

struct IsoBudget {
  std::uint64_t enumeration = 4096;
  std::size_t random_trials = 256;
  std::uint64_t seed = 0x5eed;
};

struct IsoResult {
  IsoVerdict verdict;
  std::optional<Matrix> witness;
};

IsoResult is_isomorphic(const Module& m, const Module& n, const IsoBudget& budget = {});

}  // namespace triding

#endif
