#include "triding/algebra.hpp"

#include <sstream>

namespace triding {

Algebra::Algebra(PrimeField field, std::size_t dim, Vec structure, Vec one)
    : field_(field), dim_(dim), structure_(std::move(structure)), one_(std::move(one)) {
  if (dim_ == 0) throw DimensionError("algebra dimension must be positive");
  if (structure_.size() != dim_ * dim_ * dim_)
    throw DimensionError("structure tensor must have dim^3 entries");
  if (one_.size() != dim_) throw DimensionError("identity vector has wrong length");
  for (auto& c : structure_) c %= field_.prime();
  for (auto& c : one_) c %= field_.prime();
}

Vec Algebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Scalar s = field_.mul(x[i], y[j]);
      for (std::size_t k = 0; k < dim_; ++k) {
        Scalar c = structure(i, j, k);
        if (c != 0) out[k] = field_.add(out[k], field_.mul(s, c));
      }
    }
  }
  return out;
}

Vec Algebra::basis_vector(std::size_t i) const {
  Vec v(dim_, 0);
  v[i] = 1;
  return v;
}

Matrix Algebra::left_multiplication(std::size_t i) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = structure(i, j, k);
  return m;
}

Matrix Algebra::right_multiplication(std::size_t i) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = structure(j, i, k);
  return m;
}

std::optional<std::string> Algebra::validate() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    auto ei = basis_vector(i);
    if (multiply(one_, ei) != ei) return "identity axiom fails: one * e" + std::to_string(i) + " != e" + std::to_string(i);
    if (multiply(ei, one_) != ei) return "identity axiom fails: e" + std::to_string(i) + " * one != e" + std::to_string(i);
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    auto ei = basis_vector(i);
    for (std::size_t j = 0; j < dim_; ++j) {
      auto ej = basis_vector(j);
      auto eij = multiply(ei, ej);
      for (std::size_t l = 0; l < dim_; ++l) {
        auto el = basis_vector(l);
        if (multiply(eij, el) != multiply(ei, multiply(ej, el))) {
          std::ostringstream os;
          os << "associativity fails at basis triple (" << i << ", " << j << ", " << l << ")";
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

Algebra Algebra::opposite() const {
  Vec s(structure_.size());
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) s[(i * dim_ + j) * dim_ + k] = structure(j, i, k);
  return Algebra(field_, dim_, std::move(s), one_);
}

Algebra algebra_from_products(PrimeField field, std::size_t dim,
                              const std::vector<std::int64_t>& one,
                              const std::vector<Product>& products) {
  Vec structure(dim * dim * dim, 0);
  for (const auto& p : products) {
    if (p.i >= dim || p.j >= dim || p.k >= dim) throw DimensionError("product index out of range");
    auto& slot = structure[(p.i * dim + p.j) * dim + p.k];
    slot = field.add(slot, field.reduce(p.coeff));
  }
  if (one.size() != dim) throw DimensionError("identity vector has wrong length");
  Vec o(dim);
  for (std::size_t i = 0; i < dim; ++i) o[i] = field.reduce(one[i]);
  return Algebra(field, dim, std::move(structure), std::move(o));
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

AlgebraPtr opposite_of(const AlgebraPtr& a) { return make_algebra(a->opposite()); }

std::string algebra_key(const Algebra& a) {
  std::string key = std::to_string(a.field().prime()) + ":" + std::to_string(a.dim()) + ":";
  for (auto c : a.structure_tensor()) key += std::to_string(c) + ",";
  key += ":";
  for (auto c : a.one()) key += std::to_string(c) + ",";
  return key;
}

}  // namespace triding
