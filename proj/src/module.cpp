#include "triding/module.hpp"

#include <algorithm>
#include <random>

namespace triding {

Module::Module(AlgebraPtr alg, Side side, std::vector<Matrix> action)
    : alg_(std::move(alg)), side_(side), action_(std::move(action)) {
  if (!alg_) throw ModuleMismatch("module needs an algebra");
  if (action_.size() != alg_->dim())
    throw DimensionError("module needs one action matrix per algebra basis element");
  dim_ = action_.front().rows();
  for (const auto& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw DimensionError("action matrices must be square of equal size");
    if (!(a.field() == alg_->field())) throw ModuleMismatch("action matrix over a different field");
  }
}

Module Module::zero(AlgebraPtr alg, Side side) {
  std::vector<Matrix> act(alg->dim(), Matrix(alg->field(), 0, 0));
  return Module(std::move(alg), side, std::move(act));
}

Module Module::regular(AlgebraPtr alg, Side side) {
  std::vector<Matrix> act;
  act.reserve(alg->dim());
  for (std::size_t i = 0; i < alg->dim(); ++i)
    act.push_back(side == Side::left ? alg->left_multiplication(i) : alg->right_multiplication(i));
  return Module(std::move(alg), side, std::move(act));
}

Module Module::free(AlgebraPtr alg, Side side, std::size_t rank) {
  if (rank == 0) return zero(std::move(alg), side);
  std::vector<Matrix> act;
  act.reserve(alg->dim());
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    Matrix one = side == Side::left ? alg->left_multiplication(i) : alg->right_multiplication(i);
    act.push_back(kron(Matrix::identity(alg->field(), rank), one));
  }
  return Module(std::move(alg), side, std::move(act));
}

Matrix Module::act(std::span<const Scalar> element) const {
  const auto& f = field();
  Matrix out(f, dim_, dim_);
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (element[i] == 0) continue;
    out = out + action_[i].scaled(element[i]);
  }
  return out;
}

std::optional<std::string> Module::validate() const {
  const auto& A = *alg_;
  if (!act(A.one()).is_identity()) return std::string("the identity element does not act as the identity");
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vec prod(A.dim());
      for (std::size_t k = 0; k < A.dim(); ++k) prod[k] = A.structure(i, j, k);
      Matrix lhs = side_ == Side::left ? action_[i] * action_[j] : action_[j] * action_[i];
      if (lhs != act(prod)) {
        return "action does not respect e" + std::to_string(i) + " * e" + std::to_string(j);
      }
    }
  }
  return std::nullopt;
}

bool Module::operator==(const Module& other) const {
  return side_ == other.side_ && same_algebra(alg_, other.alg_) && action_ == other.action_;
}

Module as_left(const Module& m) {
  if (m.side() == Side::left) return m;
  return Module(opposite_of(m.algebra()), Side::left, m.actions());
}

Module from_left(const Module& left, const AlgebraPtr& alg, Side side) {
  if (side == Side::left) return left;
  return Module(alg, Side::right, left.actions());
}

Morphism identity_morphism(const Module& m) {
  return {m, m, Matrix::identity(m.field(), m.dim())};
}

Morphism zero_morphism(const Module& source, const Module& target) {
  return {source, target, Matrix(source.field(), target.dim(), source.dim())};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  return {f.source, g.target, g.matrix * f.matrix};
}

void require_compatible(const Module& a, const Module& b) {
  if (a.side() != b.side()) throw ModuleMismatch("modules on different sides");
  if (!same_algebra(a.algebra(), b.algebra())) throw ModuleMismatch("modules over different algebras");
}

std::optional<std::size_t> check_morphism(const Morphism& f) {
  require_compatible(f.source, f.target);
  if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim())
    throw DimensionError("morphism matrix has the wrong shape");
  for (std::size_t i = 0; i < f.source.algebra()->dim(); ++i) {
    if (f.target.action(i) * f.matrix != f.matrix * f.source.action(i)) return i;
  }
  return std::nullopt;
}

Subspace generated_submodule(const Module& m, const std::vector<Vec>& generators) {
  Matrix span(m.field(), generators.size() * m.algebra()->dim(), m.dim());
  std::size_t r = 0;
  for (const auto& g : generators) {
    for (const auto& a : m.actions()) {
      auto v = a.apply(g);
      std::copy(v.begin(), v.end(), span.row(r).begin());
      ++r;
    }
  }
  return Subspace::row_span(span);
}

bool is_submodule(const Module& m, const Subspace& sub) {
  for (const auto& a : m.actions())
    for (std::size_t i = 0; i < sub.dim(); ++i)
      if (!sub.contains(a.apply(sub.basis().row(i)))) return false;
  return true;
}

Matrix restrict_operator(const Subspace& sub, const Matrix& op) {
  Matrix out(sub.field(), sub.dim(), sub.dim());
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    auto coords = sub.coordinates(op.apply(sub.basis().row(i)));
    for (std::size_t r = 0; r < sub.dim(); ++r) out(r, i) = coords[r];
  }
  return out;
}

Submodule submodule(const Module& m, const Subspace& sub) {
  std::vector<Matrix> act;
  act.reserve(m.actions().size());
  for (const auto& a : m.actions()) act.push_back(restrict_operator(sub, a));
  Module s(m.algebra(), m.side(), std::move(act));
  Morphism inc{s, m, sub.basis_columns()};
  return {std::move(s), std::move(inc)};
}

Quotient quotient_module(const Module& m, const Subspace& sub) {
  auto q = quotient_basis(m.dim(), sub);
  std::vector<Matrix> act;
  act.reserve(m.actions().size());
  for (const auto& a : m.actions()) act.push_back(q.projection * a * q.section);
  Module quo(m.algebra(), m.side(), std::move(act));
  Morphism proj{m, quo, q.projection};
  return {std::move(quo), std::move(proj), std::move(q.section)};
}

Submodule kernel_module(const Morphism& f) { return submodule(f.source, kernel(f.matrix)); }

Submodule image_module(const Morphism& f) { return submodule(f.target, image(f.matrix)); }

Quotient cokernel_module(const Morphism& f) { return quotient_module(f.target, image(f.matrix)); }

DirectSum direct_sum(const std::vector<Module>& summands, const AlgebraPtr& alg, Side side) {
  for (const auto& s : summands) {
    if (s.side() != side || !same_algebra(s.algebra(), alg))
      throw ModuleMismatch("direct sum of modules over different algebras or sides");
  }
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& s : summands) blocks.push_back(s.action(i));
    act.push_back(blocks.empty() ? Matrix(alg->field(), 0, 0) : block_diagonal(blocks));
  }
  Module total(alg, side, std::move(act));
  DirectSum out{total, {}, {}};
  std::size_t offset = 0;
  for (const auto& s : summands) {
    Matrix inj(alg->field(), total.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) inj(offset + i, i) = 1;
    Matrix proj = inj.transpose();
    out.injections.push_back({s, total, std::move(inj)});
    out.projections.push_back({total, s, std::move(proj)});
    offset += s.dim();
  }
  return out;
}

DirectSum direct_sum(const std::vector<Module>& summands) {
  if (summands.empty()) throw ModuleMismatch("empty direct sum needs an explicit algebra");
  return direct_sum(summands, summands.front().algebra(), summands.front().side());
}

Matrix unflatten(std::span<const Scalar> v, std::size_t rows, std::size_t cols,
                 const PrimeField& field) {
  return Matrix(field, rows, cols, Vec(v.begin(), v.end()));
}

Subspace hom_space(const Module& m, const Module& n) {
  require_compatible(m, n);
  const auto& f = m.field();
  const std::size_t rows = n.dim(), cols = m.dim(), total = rows * cols;
  if (total == 0) return Subspace::zero(f, 0);
  // Cut the solution space down one algebra basis element at a time.
  Matrix basis = Matrix::identity(f, total);  // columns span current candidates
  for (std::size_t i = 0; i < m.algebra()->dim() && basis.cols() > 0; ++i) {
    const Matrix& an = n.action(i);
    const Matrix& am = m.action(i);
    Matrix image(f, total, basis.cols());
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      Matrix x = unflatten(basis.col(c), rows, cols, f);
      Matrix d = an * x - x * am;
      for (std::size_t k = 0; k < total; ++k) image(k, c) = d.entries()[k];
    }
    if (image.is_zero()) continue;
    Subspace coeffs = kernel(image);
    basis = basis * coeffs.basis_columns();
  }
  return Subspace::column_span(basis);
}

Module dual_module(const Module& m) {
  std::vector<Matrix> act;
  act.reserve(m.actions().size());
  for (const auto& a : m.actions()) act.push_back(a.transpose());
  return Module(m.algebra(), other_side(m.side()), std::move(act));
}

Morphism dual_morphism(const Morphism& f) {
  return {dual_module(f.target), dual_module(f.source), f.matrix.transpose()};
}

Bimodule::Bimodule(AlgebraPtr left_alg, AlgebraPtr right_alg, std::vector<Matrix> left_action,
                   std::vector<Matrix> right_action)
    : left_alg_(std::move(left_alg)),
      right_alg_(std::move(right_alg)),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)) {
  if (!(left_alg_->field() == right_alg_->field())) throw ModuleMismatch("bimodule algebras over different fields");
  if (left_action_.size() != left_alg_->dim() || right_action_.size() != right_alg_->dim())
    throw DimensionError("bimodule needs one matrix per basis element on each side");
  dim_ = left_action_.front().rows();
  for (const auto* list : {&left_action_, &right_action_})
    for (const auto& a : *list)
      if (a.rows() != dim_ || a.cols() != dim_) throw DimensionError("bimodule action matrices must be square of equal size");
}

Bimodule Bimodule::regular(const AlgebraPtr& alg) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    l.push_back(alg->left_multiplication(i));
    r.push_back(alg->right_multiplication(i));
  }
  return Bimodule(alg, alg, std::move(l), std::move(r));
}

Bimodule Bimodule::zero(const AlgebraPtr& left_alg, const AlgebraPtr& right_alg) {
  return Bimodule(left_alg, right_alg,
                  std::vector<Matrix>(left_alg->dim(), Matrix(left_alg->field(), 0, 0)),
                  std::vector<Matrix>(right_alg->dim(), Matrix(right_alg->field(), 0, 0)));
}

Module Bimodule::left_module() const { return Module(left_alg_, Side::left, left_action_); }

Module Bimodule::right_module() const { return Module(right_alg_, Side::right, right_action_); }

std::optional<std::string> Bimodule::validate() const {
  if (auto v = left_module().validate()) return "left action: " + *v;
  if (auto v = right_module().validate()) return "right action: " + *v;
  for (std::size_t b = 0; b < left_action_.size(); ++b)
    for (std::size_t a = 0; a < right_action_.size(); ++a)
      if (left_action_[b] * right_action_[a] != right_action_[a] * left_action_[b])
        return "actions do not commute for (b" + std::to_string(b) + ", a" + std::to_string(a) + ")";
  return std::nullopt;
}

namespace {

// Quotient of X (x)_k Y by the relations (x.l) (x) y - x (x) (l.y).
TensorProduct balanced_tensor(const Module& x_right, const Module& y_left,
                              const std::vector<Matrix>& outer_action, const AlgebraPtr& outer_alg,
                              Side outer_side, bool outer_on_first) {
  const auto& f = x_right.field();
  const std::size_t dx = x_right.dim(), dy = y_left.dim(), total = dx * dy;
  const auto ix = Matrix::identity(f, dx);
  const auto iy = Matrix::identity(f, dy);
  Matrix relations(f, total, 0);
  for (std::size_t i = 0; i < x_right.actions().size(); ++i) {
    Matrix r = kron(x_right.action(i), iy) - kron(ix, y_left.action(i));
    if (!r.is_zero()) relations = hstack(relations, r);
  }
  auto q = quotient_basis(total, Subspace::column_span(relations));
  std::vector<Matrix> act;
  act.reserve(outer_action.size());
  for (const auto& o : outer_action) {
    Matrix amb = outer_on_first ? kron(o, iy) : kron(ix, o);
    act.push_back(q.projection * amb * q.section);
  }
  return {Module(outer_alg, outer_side, std::move(act)), std::move(q.projection), std::move(q.section)};
}

}  // namespace

TensorProduct tensor_over(const Bimodule& u, const Module& m) {
  if (m.side() != Side::left || !same_algebra(m.algebra(), u.right_algebra()))
    throw ModuleMismatch("U (x)_A M needs a left module over the right algebra of U");
  std::vector<Matrix> outer;
  for (std::size_t b = 0; b < u.left_algebra()->dim(); ++b) outer.push_back(u.left_action(b));
  return balanced_tensor(u.right_module(), m, outer, u.left_algebra(), Side::left, true);
}

TensorProduct tensor_over_right(const Module& w, const Bimodule& u) {
  if (w.side() != Side::right || !same_algebra(w.algebra(), u.left_algebra()))
    throw ModuleMismatch("W (x)_B U needs a right module over the left algebra of U");
  std::vector<Matrix> outer;
  for (std::size_t a = 0; a < u.right_algebra()->dim(); ++a) outer.push_back(u.right_action(a));
  return balanced_tensor(w, u.left_module(), outer, u.right_algebra(), Side::right, false);
}

Morphism tensor_map(const Bimodule& u, const Morphism& f, const TensorProduct& src,
                    const TensorProduct& dst) {
  Matrix amb = kron(Matrix::identity(f.matrix.field(), u.dim()), f.matrix);
  return {src.module, dst.module, dst.surjection * amb * src.section};
}

Matrix HomModule::element(std::size_t i) const {
  return unflatten(space.basis().row(i), rows, cols, space.field());
}

namespace {

HomModule hom_with_action(const Module& u_side, const Module& target,
                          const std::vector<Matrix>& precompose, const AlgebraPtr& alg, Side side) {
  Subspace space = hom_space(u_side, target);
  const std::size_t rows = target.dim(), cols = u_side.dim();
  const auto& f = target.field();
  std::vector<Matrix> act;
  act.reserve(precompose.size());
  for (const auto& p : precompose) {
    Matrix a(f, space.dim(), space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i) {
      Matrix g = unflatten(space.basis().row(i), rows, cols, f) * p;
      auto coords = space.coordinates(g.entries());
      for (std::size_t r = 0; r < space.dim(); ++r) a(r, i) = coords[r];
    }
    act.push_back(std::move(a));
  }
  return {Module(alg, side, std::move(act)), std::move(space), rows, cols};
}

}  // namespace

HomModule hom_over(const Bimodule& u, const Module& w) {
  if (w.side() != Side::right || !same_algebra(w.algebra(), u.right_algebra()))
    throw ModuleMismatch("Hom_A(U, W) needs a right module over the right algebra of U");
  std::vector<Matrix> pre;
  for (std::size_t b = 0; b < u.left_algebra()->dim(); ++b) pre.push_back(u.left_action(b));
  return hom_with_action(u.right_module(), w, pre, u.left_algebra(), Side::right);
}

HomModule hom_over_left(const Bimodule& u, const Module& m) {
  if (m.side() != Side::left || !same_algebra(m.algebra(), u.left_algebra()))
    throw ModuleMismatch("Hom_B(U, M) needs a left module over the left algebra of U");
  std::vector<Matrix> pre;
  for (std::size_t a = 0; a < u.right_algebra()->dim(); ++a) pre.push_back(u.right_action(a));
  return hom_with_action(u.left_module(), m, pre, u.right_algebra(), Side::left);
}

const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::yes: return "yes";
    case IsoVerdict::no: return "no";
    case IsoVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

IsoResult is_isomorphic(const Module& m, const Module& n, const IsoBudget& budget) {
  require_compatible(m, n);
  if (m.dim() != n.dim()) return {IsoVerdict::no, std::nullopt};
  const auto& f = m.field();
  if (m.actions() == n.actions()) return {IsoVerdict::yes, Matrix::identity(f, m.dim())};
  // Similar matrices have equal rank.
  for (std::size_t i = 0; i < m.actions().size(); ++i)
    if (rank(m.action(i)) != rank(n.action(i))) return {IsoVerdict::no, std::nullopt};

  Subspace hom = hom_space(m, n);
  const std::size_t k = hom.dim();
  if (k == 0) return {IsoVerdict::no, std::nullopt};
  auto candidate = [&](const Vec& coeffs) {
    Vec flat(hom.ambient_dim(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (coeffs[i] == 0) continue;
      auto row = hom.basis().row(i);
      for (std::size_t e = 0; e < flat.size(); ++e) flat[e] = f.add(flat[e], f.mul(coeffs[i], row[e]));
    }
    return unflatten(flat, n.dim(), m.dim(), f);
  };

  std::mt19937_64 rng(budget.seed);
  const std::size_t quick = std::min<std::size_t>(budget.random_trials, 32);
  Vec coeffs(k);
  for (std::size_t t = 0; t < quick; ++t) {
    for (auto& c : coeffs) c = static_cast<Scalar>(rng() % f.prime());
    Matrix x = candidate(coeffs);
    if (is_invertible(x)) return {IsoVerdict::yes, std::move(x)};
  }

  // Exhaustive enumeration when p^k fits the budget.
  std::uint64_t count = 1;
  bool enumerable = true;
  for (std::size_t i = 0; i < k; ++i) {
    count *= f.prime();
    if (count > budget.enumeration) {
      enumerable = false;
      break;
    }
  }
  if (enumerable) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t v = t;
      for (std::size_t i = 0; i < k; ++i) {
        coeffs[i] = static_cast<Scalar>(v % f.prime());
        v /= f.prime();
      }
      Matrix x = candidate(coeffs);
      if (is_invertible(x)) return {IsoVerdict::yes, std::move(x)};
    }
    return {IsoVerdict::no, std::nullopt};
  }
  for (std::size_t t = quick; t < budget.random_trials; ++t) {
    for (auto& c : coeffs) c = static_cast<Scalar>(rng() % f.prime());
    Matrix x = candidate(coeffs);
    if (is_invertible(x)) return {IsoVerdict::yes, std::move(x)};
  }
  return {IsoVerdict::inconclusive, std::nullopt};
}

}  // namespace triding
