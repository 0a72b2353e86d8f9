#ifndef TRIDING_ALGEBRA_HPP
#define TRIDING_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "triding/linfield.hpp"

namespace triding {

/// Finite-dimensional associative unital algebra given by structure constants
/// e_i * e_j = sum_k c[i][j][k] e_k.
class Algebra {
 public:
  Algebra(PrimeField field, std::size_t dim, Vec structure, Vec one);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  Scalar structure(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  const Vec& structure_tensor() const { return structure_; }
  const Vec& one() const { return one_; }

  Vec multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  Vec basis_vector(std::size_t i) const;

  /// Matrix of y -> e_i * y.
  Matrix left_multiplication(std::size_t i) const;
  /// Matrix of y -> y * e_i.
  Matrix right_multiplication(std::size_t i) const;

  /// First violated axiom, or nullopt when the algebra is associative and unital.
  std::optional<std::string> validate() const;

  Algebra opposite() const;

  bool operator==(const Algebra& other) const = default;

 private:
  PrimeField field_;
  std::size_t dim_;
  Vec structure_;
  Vec one_;
};

/// Sparse structure-constant entry: e_i * e_j += coeff * e_k.
struct Product {
  std::size_t i, j, k;
  std::int64_t coeff = 1;
};

Algebra algebra_from_products(PrimeField field, std::size_t dim,
                              const std::vector<std::int64_t>& one,
                              const std::vector<Product>& products);

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr make_algebra(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// opposite_of(opposite_of(a)) compares equal to a.
AlgebraPtr opposite_of(const AlgebraPtr& a);

/// Stable text key for an algebra value, used for memoisation.
std::string algebra_key(const Algebra& a);

}  // namespace triding

#endif
