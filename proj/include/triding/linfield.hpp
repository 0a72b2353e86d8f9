#ifndef TRIDING_LINFIELD_HPP
#define TRIDING_LINFIELD_HPP

// Exact dense linear algebra over prime fields GF(p).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace triding {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The prime field GF(p), 2 <= p < 2^31. Primality is checked on construction.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint32_t prime() const { return p_; }

  Scalar reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar inv(Scalar a) const;

  bool operator==(const PrimeField& other) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix over a prime field. Zero-row and zero-column
/// matrices are legal.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  Matrix(PrimeField field, std::size_t rows, std::size_t cols, Vec entries);

  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix from_rows(PrimeField field,
                          const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols_if_empty = 0);
  static Matrix column(PrimeField field, std::span<const Scalar> v);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec col(std::size_t c) const;
  const Vec& entries() const { return data_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Scalar s) const;
  Vec apply(std::span<const Scalar> v) const;

  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const Matrix& other) const = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  Vec data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
Matrix kron(const Matrix& a, const Matrix& b);

/// Row reduced echelon form with first-nonzero pivoting; zero rows dropped.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
bool is_invertible(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Some x with a*x = b, free variables set to zero; nullopt if unsolvable.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Subspace of GF(p)^n stored by its canonical RREF basis (rows), so equal
/// subspaces have identical representations.
class Subspace {
 public:
  static Subspace zero(PrimeField field, std::size_t ambient);
  static Subspace full(PrimeField field, std::size_t ambient);
  static Subspace row_span(const Matrix& rows);
  static Subspace column_span(const Matrix& cols);

  const PrimeField& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  /// Basis vectors as columns (ambient x dim).
  Matrix basis_columns() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t i) const;

  bool contains(std::span<const Scalar> v) const;
  /// Coordinates of v with respect to the basis; v must lie in the subspace.
  Vec coordinates(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);

/// Linear quotient V -> V/sub. Representatives are the coordinates at the
/// non-pivot columns of the subspace basis.
struct QuotientMaps {
  Matrix projection;  // (n - k) x n, kernel exactly sub
  Matrix section;     // n x (n - k), projection * section = identity
};

QuotientMaps quotient_basis(std::size_t ambient_dim, const Subspace& sub);

}  // namespace triding

#endif
