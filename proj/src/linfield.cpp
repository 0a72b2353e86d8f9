#include "triding/linfield.hpp"

#include <algorithm>

namespace triding {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  p_ = static_cast<std::uint32_t>(p);
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols, Vec entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw DimensionError("matrix entry count mismatch");
  for (auto& e : data_) {
    if (e >= field_.prime()) e %= field_.prime();
  }
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

Matrix Matrix::column(PrimeField field, std::span<const Scalar> v) {
  return Matrix(field, v.size(), 1, Vec(v.begin(), v.end()));
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product dimension mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  const std::uint64_t p = field_.prime();
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      const Scalar* brow = rhs.data_.data() + k * rhs.cols_;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (brow[c] != 0) acc[c] = (acc[c] + a * brow[c]) % p;
      }
    }
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) = static_cast<Scalar>(acc[c]);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out(*this);
  for (auto& e : out.data_) e = field_.mul(e, s);
  return out;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
  Vec out(rows_);
  const std::uint64_t p = field_.prime();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * v[c]) % p;
    }
    out[r] = static_cast<Scalar>(acc);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    std::copy_n(data_.begin() + idx[i] * cols_, cols_, out.data_.begin() + i * cols_);
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < idx.size(); ++i) out(r, i) = (*this)(r, idx[i]);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar e) { return e == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DimensionError("block_diagonal of nothing has no field");
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix out(blocks.front().field(), r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const auto& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar s = a(i, j);
      if (s == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(s, b(k, l));
    }
  return out;
}

namespace {

// In-place Gauss-Jordan on the first `pivot_cols` columns. Returns pivot columns.
std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t pivot_cols) {
  const auto& f = m.field();
  const std::uint64_t p = f.prime();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      auto a = m.row(sel);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(r);
    Scalar iv = f.inv(prow[c]);
    if (iv != 1) {
      for (std::size_t k = c; k < m.cols(); ++k) prow[k] = f.mul(prow[k], iv);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      auto row = m.row(i);
      Scalar factor = row[c];
      if (factor == 0) continue;
      std::uint64_t neg = p - factor;
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (prow[k] != 0) row[k] = static_cast<Scalar>((row[k] + neg * prow[k]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon row_reduce(const Matrix& m) {
  Matrix work(m);
  auto pivots = gauss_jordan(work, work.cols());
  std::vector<std::size_t> keep(pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return {work.select_rows(keep), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  // Reduce along the shorter side.
  if (m.rows() < m.cols()) {
    Matrix work = m.transpose();
    return gauss_jordan(work, work.cols()).size();
  }
  Matrix work(m);
  return gauss_jordan(work, work.cols()).size();
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  const auto& f = m.field();
  Matrix work(m);
  Scalar det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && work(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      auto a = work.row(sel);
      auto b = work.row(c);
      std::swap_ranges(a.begin(), a.end(), b.begin());
      det = f.neg(det);
    }
    det = f.mul(det, work(c, c));
    Scalar iv = f.inv(work(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      Scalar factor = f.mul(work(i, c), iv);
      if (factor == 0) continue;
      for (std::size_t k = c; k < n; ++k) work(i, k) = f.sub(work(i, k), f.mul(factor, work(c, k)));
    }
  }
  return det;
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto sol = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!sol || !((m * *sol).is_identity())) return std::nullopt;
  return sol;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: a and b row counts differ");
  Matrix aug = hstack(a, b);
  auto pivots = gauss_jordan(aug, aug.cols());
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = aug(i, a.cols() + c);
  }
  return x;
}

Subspace Subspace::zero(PrimeField field, std::size_t ambient) {
  return Subspace(Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(PrimeField field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(piv));
}

Subspace Subspace::row_span(const Matrix& rows) {
  auto e = row_reduce(rows);
  return Subspace(std::move(e.rref), std::move(e.pivots));
}

Subspace Subspace::column_span(const Matrix& cols) { return row_span(cols.transpose()); }

Vec Subspace::vector(std::size_t i) const {
  auto r = basis_.row(i);
  return Vec(r.begin(), r.end());
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw DimensionError("subspace membership: wrong ambient");
  const auto& f = field();
  Vec w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = w[pivots_[i]];
    if (c == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = f.sub(w[k], f.mul(c, row[k]));
  }
  return std::all_of(w.begin(), w.end(), [](Scalar e) { return e == 0; });
}

Vec Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw DimensionError("vector does not lie in the subspace");
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  const auto& f = m.field();
  auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix basis(f, m.cols() - e.pivots.size(), m.cols());
  std::size_t r = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(r, free) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(r, e.pivots[i]) = f.neg(e.rref(i, free));
    ++r;
  }
  return Subspace::row_span(basis);
}

Subspace image(const Matrix& m) { return Subspace::column_span(m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  return Subspace::row_span(vstack(a.basis(), b.basis()));
}

QuotientMaps quotient_basis(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim() != ambient_dim) throw DimensionError("quotient: ambient mismatch");
  const auto& f = sub.field();
  std::vector<std::size_t> pivot_row(ambient_dim, ambient_dim);
  for (std::size_t i = 0; i < sub.dim(); ++i) pivot_row[sub.pivots()[i]] = i;
  std::vector<std::size_t> reps;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (pivot_row[c] == ambient_dim) reps.push_back(c);

  Matrix proj(f, reps.size(), ambient_dim);
  Matrix sec(f, ambient_dim, reps.size());
  for (std::size_t q = 0; q < reps.size(); ++q) {
    proj(q, reps[q]) = 1;
    sec(reps[q], q) = 1;
  }
  // A pivot coordinate e_c reduces to e_c - row(c), whose representative part is -row(c).
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (pivot_row[c] == ambient_dim) continue;
    auto row = sub.basis().row(pivot_row[c]);
    for (std::size_t q = 0; q < reps.size(); ++q) proj(q, c) = f.neg(row[reps[q]]);
  }
  return {std::move(proj), std::move(sec)};
}

}  // namespace triding
