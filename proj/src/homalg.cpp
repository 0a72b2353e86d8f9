#include "triding/homalg.hpp"

#include <algorithm>
#include <random>

namespace triding {

std::size_t HomDim::value() const {
  if (kind_ != Kind::finite) throw std::logic_error("HomDim::value on a non-finite dimension");
  return value_;
}

std::size_t HomDim::cutoff() const {
  if (kind_ != Kind::exceeds_cutoff) throw std::logic_error("HomDim::cutoff on a known dimension");
  return value_;
}

std::string HomDim::to_string() const {
  switch (kind_) {
    case Kind::neg_infinity: return "-inf";
    case Kind::finite: return std::to_string(value_);
    case Kind::exceeds_cutoff:
      return ">" + std::to_string(value_) + (periodic_ ? " (periodic)" : "");
  }
  return "?";
}

HomDim max(const HomDim& a, const HomDim& b) {
  if (a.is_neg_infinity()) return b;
  if (b.is_neg_infinity()) return a;
  if (a.exceeds_cutoff()) return a;
  if (b.exceeds_cutoff()) return b;
  return HomDim::finite(std::max(a.value(), b.value()));
}

HomDim plus_one(const HomDim& d) {
  if (d.is_finite()) return HomDim::finite(d.value() + 1);
  return d;
}

std::optional<bool> known_leq(const HomDim& a, const HomDim& b) {
  if (!a.is_known() || !b.is_known()) return std::nullopt;
  if (a.is_neg_infinity()) return true;
  if (b.is_neg_infinity()) return false;
  return a.value() <= b.value();
}

const char* to_string(CoverStrategy s) {
  switch (s) {
    case CoverStrategy::basis: return "basis";
    case CoverStrategy::irredundant: return "irredundant";
    case CoverStrategy::compact: return "compact";
    case CoverStrategy::doubled: return "doubled";
  }
  return "?";
}

namespace {

bool generates(const Module& m, const std::vector<Vec>& gens) {
  return generated_submodule(m, gens).dim() == m.dim();
}

std::vector<Vec> irredundant_generators(const Module& m) {
  std::vector<Vec> gens;
  Subspace reached = Subspace::zero(m.field(), m.dim());
  for (std::size_t i = 0; i < m.dim() && reached.dim() < m.dim(); ++i) {
    Vec e(m.dim(), 0);
    e[i] = 1;
    if (reached.contains(e)) continue;
    gens.push_back(e);
    reached = generated_submodule(m, gens);
  }
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<Vec> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (generates(m, rest)) {
      gens = std::move(rest);
    } else {
      ++i;
    }
  }
  return gens;
}

std::vector<Vec> compact_generators(const Module& m) {
  auto gens = irredundant_generators(m);
  if (gens.size() <= 1) return gens;
  constexpr std::size_t kTries = 48;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (m.dim() * 1315423911ULL));
  const auto p = m.field().prime();
  for (std::size_t g = 1; g < gens.size(); ++g) {
    for (std::size_t t = 0; t < kTries; ++t) {
      std::vector<Vec> trial(g, Vec(m.dim()));
      for (auto& v : trial)
        for (auto& c : v) c = static_cast<Scalar>(rng() % p);
      if (generates(m, trial)) return trial;
    }
  }
  return gens;
}

std::vector<Vec> choose_generators(const Module& m, CoverStrategy strategy) {
  std::vector<Vec> gens;
  switch (strategy) {
    case CoverStrategy::basis:
    case CoverStrategy::doubled: {
      const std::size_t copies = strategy == CoverStrategy::doubled ? 2 : 1;
      for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < m.dim(); ++i) {
          Vec e(m.dim(), 0);
          e[i] = 1;
          gens.push_back(std::move(e));
        }
      return gens;
    }
    case CoverStrategy::irredundant: return irredundant_generators(m);
    case CoverStrategy::compact: return compact_generators(m);
  }
  return gens;
}

// Cover of a module that is already a left module.
FreeCover left_cover(const Module& m, CoverStrategy strategy) {
  auto gens = choose_generators(m, strategy);
  const auto& alg = m.algebra();
  const std::size_t a = alg->dim();
  Module free = Module::free(alg, Side::left, gens.size());
  Matrix map(m.field(), m.dim(), gens.size() * a);
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < a; ++i) {
      auto v = m.action(i).apply(gens[j]);
      for (std::size_t r = 0; r < m.dim(); ++r) map(r, j * a + i) = v[r];
    }
  return {gens.size(), Morphism{std::move(free), m, std::move(map)}, std::move(gens)};
}

Morphism morphism_from_left(const Morphism& f, const AlgebraPtr& alg, Side side) {
  return {from_left(f.source, alg, side), from_left(f.target, alg, side), f.matrix};
}

Resolution resolve_left(const Module& m, std::size_t length, CoverStrategy strategy) {
  Resolution res{m, {}};
  Module current = m;
  std::optional<Morphism> inclusion;
  for (std::size_t s = 0; s < length; ++s) {
    FreeCover cover = left_cover(current, strategy);
    Submodule ker = kernel_module(cover.map);
    Morphism diff = inclusion ? compose(*inclusion, cover.map) : cover.map;
    res.steps.push_back({cover.rank, std::move(diff), ker.module});
    current = ker.module;
    inclusion = ker.inclusion;
  }
  return res;
}

// Matrix of precomposition with F_i -> F_{i-1} on Hom(-, n) = n^rank.
Matrix cochain_map(const ResolutionStep& step, std::size_t prev_rank, const Module& n) {
  const auto& alg = n.algebra();
  const std::size_t a = alg->dim(), dn = n.dim();
  const auto& f = n.field();
  Matrix out(f, step.rank * dn, prev_rank * dn);
  const auto& d = step.differential.matrix;
  for (std::size_t j = 0; j < step.rank; ++j) {
    Vec gen(step.rank * a, 0);
    for (std::size_t l = 0; l < a; ++l) gen[j * a + l] = alg->one()[l];
    Vec image = d.apply(gen);
    for (std::size_t k = 0; k < prev_rank; ++k) {
      std::span<const Scalar> lambda(image.data() + k * a, a);
      out.set_block(j * dn, k * dn, n.act(lambda));
    }
  }
  return out;
}

}  // namespace

FreeCover free_cover(const Module& m, CoverStrategy strategy) {
  if (m.side() == Side::left) return left_cover(m, strategy);
  FreeCover c = left_cover(as_left(m), strategy);
  c.map = morphism_from_left(c.map, m.algebra(), m.side());
  return c;
}

Module syzygy(const Module& m, CoverStrategy strategy) {
  return kernel_module(free_cover(m, strategy).map).module;
}

Resolution resolve(const Module& m, std::size_t length, CoverStrategy strategy) {
  Resolution r = resolve_left(as_left(m), length, strategy);
  if (m.side() == Side::left) return r;
  r.target = m;
  for (auto& s : r.steps) {
    s.differential = morphism_from_left(s.differential, m.algebra(), m.side());
    s.kernel = from_left(s.kernel, m.algebra(), m.side());
  }
  return r;
}

std::optional<std::string> check_resolution(const Resolution& r) {
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& d = r.steps[i].differential.matrix;
    const std::size_t codomain = d.rows();
    if (i == 0 && rank(d) != codomain) return std::string("F_0 -> target is not surjective");
    if (i + 1 < r.steps.size()) {
      const auto& next = r.steps[i + 1].differential.matrix;
      if (!(d * next).is_zero()) return "composite d" + std::to_string(i) + " d" + std::to_string(i + 1) + " is non-zero";
      if (rank(d) + rank(next) != d.cols()) return "not exact at F_" + std::to_string(i);
    }
    if (r.steps[i].kernel.dim() + rank(d) != d.cols())
      return "recorded kernel at step " + std::to_string(i) + " has the wrong dimension";
  }
  return std::nullopt;
}

bool is_projective(const Module& m0) {
  if (m0.dim() == 0) return true;
  Module m = as_left(m0);
  FreeCover cover = left_cover(m, CoverStrategy::compact);
  // Projective iff the cover splits: some h : m -> F with cover * h = id.
  Subspace homs = hom_space(m, cover.map.source);
  if (homs.dim() == 0) return false;
  const std::size_t dm = m.dim();
  const auto& f = m.field();
  Matrix system(f, dm * dm, homs.dim());
  for (std::size_t j = 0; j < homs.dim(); ++j) {
    Matrix h = unflatten(homs.basis().row(j), cover.map.source.dim(), dm, f);
    Matrix ph = cover.map.matrix * h;
    for (std::size_t k = 0; k < dm * dm; ++k) system(k, j) = ph.entries()[k];
  }
  Matrix rhs(f, dm * dm, 1, Matrix::identity(f, dm).entries());
  return solve(system, rhs).has_value();
}

bool is_injective(const Module& m) { return is_projective(dual_module(m)); }

HomDim pd(const Module& m0, std::size_t cutoff, CoverStrategy strategy) {
  if (m0.dim() == 0) return HomDim::neg_infinity();
  Module current = as_left(m0);
  std::vector<Module> seen;
  for (std::size_t n = 0; n <= cutoff; ++n) {
    if (is_projective(current)) return HomDim::finite(n);
    for (const auto& earlier : seen) {
      if (earlier.dim() == current.dim() &&
          is_isomorphic(earlier, current).verdict == IsoVerdict::yes) {
        return HomDim::exceeds(cutoff, true);
      }
    }
    seen.push_back(current);
    if (n < cutoff) current = kernel_module(left_cover(current, strategy).map).module;
  }
  return HomDim::exceeds(cutoff);
}

HomDim id(const Module& m, std::size_t cutoff) { return pd(dual_module(m), cutoff); }

HomDim fd(const Module& m, std::size_t cutoff) { return pd(m, cutoff); }

HomDim fp_id(const Module& m, std::size_t cutoff) { return id(m, cutoff); }

std::vector<std::size_t> ext_dims(const Module& m0, const Module& n0, std::size_t max_degree) {
  require_compatible(m0, n0);
  const Module m = as_left(m0);
  const Module n = as_left(n0);
  if (m.dim() == 0 || n.dim() == 0) return std::vector<std::size_t>(max_degree + 1, 0);
  Resolution r = resolve_left(m, max_degree + 2, CoverStrategy::compact);
  // maps[i] : Hom(F_{i-1}, n) -> Hom(F_i, n) for i >= 1.
  std::vector<std::size_t> ranks(max_degree + 2, 0);
  for (std::size_t i = 1; i <= max_degree + 1; ++i)
    ranks[i] = rank(cochain_map(r.steps[i], r.steps[i - 1].rank, n));
  std::vector<std::size_t> out(max_degree + 1);
  for (std::size_t i = 0; i <= max_degree; ++i) {
    const std::size_t cochains = r.steps[i].rank * n.dim();
    const std::size_t cocycles = cochains - ranks[i + 1];
    out[i] = cocycles - (i == 0 ? 0 : ranks[i]);
  }
  return out;
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i) {
  return ext_dims(m, n, i)[i];
}

HomDim iwanaga_gorenstein_bound(const AlgebraPtr& alg, std::size_t cutoff) {
  HomDim left = id(Module::regular(alg, Side::left), cutoff);
  if (!left.is_finite()) return HomDim::exceeds(cutoff, left.exceeds_cutoff() && left.periodic());
  HomDim right = id(Module::regular(alg, Side::right), cutoff);
  if (!right.is_finite()) return HomDim::exceeds(cutoff, right.exceeds_cutoff() && right.periodic());
  if (left != right) return HomDim::exceeds(cutoff);
  return left;
}

}  // namespace triding
