#include "triding/dinghom.hpp"

#include <stdexcept>

namespace triding {

const char* const kDingBanner =
    "finite-dimensional algebra: flat = projective and FP-injective = injective, so Ding "
    "projective/injective coincide with Gorenstein projective/injective, fd is computed as pd "
    "and FP-id as id";

const char* to_string(HypStatus s) {
  switch (s) {
    case HypStatus::verified: return "verified";
    case HypStatus::auto_satisfied: return "auto";
    case HypStatus::assumed: return "assumed";
    case HypStatus::failed: return "failed";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Json to_json(const std::vector<Hypothesis>& ledger) {
  Json out = Json::array();
  for (const auto& h : ledger)
    out.push_back({{"hypothesis", h.name}, {"status", to_string(h.status)}, {"evidence", h.evidence}});
  return out;
}

Json to_json(const HomDim& d) { return d.to_string(); }

Json to_json(const DingReport& r) {
  Json out;
  if (r.verdict)
    out["verdict"] = *r.verdict;
  else
    out["verdict"] = "gated";
  if (!r.reason.empty()) out["reason"] = r.reason;
  out["hypothesis_ledger"] = to_json(r.ledger);
  out["evidence"] = r.evidence;
  return out;
}

bool ledger_satisfied(const std::vector<Hypothesis>& ledger) {
  for (const auto& h : ledger)
    if (h.status != HypStatus::verified && h.status != HypStatus::auto_satisfied) return false;
  return true;
}

bool is_tr_shaped(const TriMatRing& ring) {
  if (!same_algebra(ring.a, ring.b) || ring.u.dim() != ring.a->dim()) return false;
  for (std::size_t i = 0; i < ring.a->dim(); ++i) {
    if (ring.u.left_action(i) != ring.a->left_multiplication(i)) return false;
    if (ring.u.right_action(i) != ring.a->right_multiplication(i)) return false;
  }
  return true;
}

namespace {

Json ext_json(const std::vector<std::size_t>& e) {
  Json out = Json::array();
  for (std::size_t i = 1; i < e.size(); ++i) out.push_back(e[i]);
  return out;
}

std::string unmet(const std::vector<Hypothesis>& ledger) {
  std::string out;
  for (const auto& h : ledger)
    if (h.status != HypStatus::verified && h.status != HypStatus::auto_satisfied)
      out += (out.empty() ? "" : "; ") + h.name + " (" + to_string(h.status) + ")";
  return "hypotheses not certified: " + out;
}

Hypothesis automatic(const std::string& name, const std::string& why) {
  return {name, HypStatus::auto_satisfied, why};
}

void append(std::vector<Hypothesis>& to, const std::vector<Hypothesis>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

Json bool_or_gated(const DingReport& r) {
  if (r.verdict) return *r.verdict;
  return "gated";
}

}  // namespace

Engine::Engine(std::size_t cutoff, CoverStrategy strategy) : cutoff_(cutoff), strategy_(strategy) {
  if (cutoff == 0) throw std::invalid_argument("cutoff must be at least 1");
}

HomDim Engine::gate(const AlgebraPtr& alg) {
  std::string key = algebra_key(*alg);
  auto it = gates_.find(key);
  if (it != gates_.end()) return it->second;
  HomDim d = iwanaga_gorenstein_bound(alg, cutoff_);
  gates_.emplace(std::move(key), d);
  return d;
}

DingReport Engine::ding_projective(const Module& m) {
  DingReport r;
  HomDim d = gate(m.algebra());
  r.evidence["gate"] = to_json(d);
  if (!d.is_finite()) {
    r.reason = "algebra is not Iwanaga-Gorenstein within cutoff " + std::to_string(cutoff_);
    return r;
  }
  const std::size_t top = std::max<std::size_t>(d.value(), 1);
  auto e = ext_dims(m, Module::regular(m.algebra(), m.side()), top);
  bool zero = true;
  for (std::size_t i = 1; i <= top; ++i) zero = zero && e[i] == 0;
  r.verdict = zero;
  r.evidence["ext_against_regular"] = ext_json(e);
  return r;
}

DingReport Engine::ding_injective(const Module& w) {
  DingReport r = ding_projective(dual_module(w));
  r.evidence["via"] = "dual module";
  return r;
}

DingReport Engine::ding_injective_direct(const Module& w) {
  DingReport r;
  HomDim d = gate(w.algebra());
  r.evidence["gate"] = to_json(d);
  if (!d.is_finite()) {
    r.reason = "algebra is not Iwanaga-Gorenstein within cutoff " + std::to_string(cutoff_);
    return r;
  }
  const std::size_t top = std::max<std::size_t>(d.value(), 1);
  Module cogen = dual_module(Module::regular(w.algebra(), other_side(w.side())));
  auto e = ext_dims(cogen, w, top);
  bool zero = true;
  for (std::size_t i = 1; i <= top; ++i) zero = zero && e[i] == 0;
  r.verdict = zero;
  r.evidence["ext_from_cogenerator"] = ext_json(e);
  return r;
}

Hypothesis Engine::finite_dim_hypothesis(const std::string& name, const HomDim& d) {
  HypStatus s = d.is_known() ? HypStatus::verified
                             : (d.periodic() ? HypStatus::failed : HypStatus::assumed);
  return {name, s, {{"value", to_json(d)}}};
}

Hypothesis Engine::gate_hypothesis(const std::string& name, const AlgebraPtr& alg) {
  HomDim d = gate(alg);
  return {name, d.is_finite() ? HypStatus::verified : HypStatus::assumed,
          {{"certificate", "common self-injective dimension of the regular modules"},
           {"value", to_json(d)}}};
}

Hypothesis Engine::u_projective_hypothesis(const RingPtr& ring, const std::string& name) {
  bool p = is_projective(ring->u.left_module());
  return {name, p ? HypStatus::verified : HypStatus::failed, {{"projective", p}}};
}

Hypothesis Engine::u_right_finite_hypothesis(const RingPtr& ring) {
  Module ua = ring->u.right_module();
  HomDim p = pd(ua, cutoff_, strategy_);
  HomDim i = id(ua, cutoff_);
  Json ev{{"pd", to_json(p)}, {"fp_id", to_json(i)}};
  HypStatus s = HypStatus::assumed;
  if (p.is_known()) {
    ev["certified_by"] = "pd";
    s = HypStatus::verified;
  } else if (i.is_known()) {
    ev["certified_by"] = "fp_id";
    s = HypStatus::verified;
  } else if (p.periodic() && i.periodic()) {
    s = HypStatus::failed;
  }
  return {"U_A has finite projective or FP-injective dimension", s, ev};
}

std::vector<Hypothesis> Engine::ledger_3_4(const RingPtr& ring) {
  return {finite_dim_hypothesis("U_A has finite flat dimension",
                                fd(ring->u.right_module(), cutoff_)),
          finite_dim_hypothesis("_BU has finite flat dimension", fd(ring->u.left_module(), cutoff_)),
          gate_hypothesis("A is Iwanaga-Gorenstein (finite Ding test)", ring->a),
          gate_hypothesis("B is Iwanaga-Gorenstein (finite Ding test)", ring->b)};
}

std::vector<Hypothesis> Engine::ledger_4_4(const RingPtr& ring) {
  return {automatic("T is right coherent", "finite-dimensional algebra"),
          finite_dim_hypothesis("_BU has finite flat dimension", fd(ring->u.left_module(), cutoff_)),
          automatic("U_A is finitely presented", "finite-dimensional module"),
          u_right_finite_hypothesis(ring),
          gate_hypothesis("A is Iwanaga-Gorenstein (finite Ding test)", ring->a),
          gate_hypothesis("B is Iwanaga-Gorenstein (finite Ding test)", ring->b)};
}

DingReport Engine::classify(const LeftTriple& m) {
  if (auto v = validate(m)) throw std::invalid_argument("invalid left triple: " + *v);
  DingReport r;
  r.ledger = ledger_3_4(m.ring);
  if (!ledger_satisfied(r.ledger)) {
    r.reason = unmet(r.ledger);
    return r;
  }
  DingReport d1 = ding_projective(m.m1);
  DingReport dc = ding_projective(cokernel_module(m.phi_morphism()).module);
  const bool mono = rank(m.phi) == m.tensor.module.dim();
  r.evidence["m1_ding_projective"] = bool_or_gated(d1);
  r.evidence["coker_phi_ding_projective"] = bool_or_gated(dc);
  r.evidence["phi_mono"] = mono;
  r.evidence["phi_rank"] = rank(m.phi);
  r.evidence["tensor_dim"] = m.tensor.module.dim();
  if (!d1.verdict || !dc.verdict) {
    r.reason = "component test gated";
    return r;
  }
  r.verdict = *d1.verdict && *dc.verdict && mono;
  if (*r.verdict) {
    DingReport dt = ding_projective(m.tensor.module);
    DingReport d2 = ding_projective(m.m2);
    if (dt.verdict && d2.verdict)
      r.evidence["tail"] = {{"u_tensor_m1_ding_projective", *dt.verdict},
                            {"m2_ding_projective", *d2.verdict},
                            {"equivalent", *dt.verdict == *d2.verdict}};
  }
  return r;
}

DingReport Engine::classify(const RightTriple& w) {
  if (auto v = validate(w)) throw std::invalid_argument("invalid right triple: " + *v);
  DingReport r;
  r.ledger = ledger_4_4(w.ring);
  if (!ledger_satisfied(r.ledger)) {
    r.reason = unmet(r.ledger);
    return r;
  }
  TildeMap tilde = phi_tilde(w);
  DingReport d1 = ding_injective(w.w1);
  DingReport dk = ding_injective(kernel_module(tilde.map).module);
  const bool epi = rank(tilde.map.matrix) == tilde.hom.module.dim();
  r.evidence["w1_ding_injective"] = bool_or_gated(d1);
  r.evidence["ker_phi_tilde_ding_injective"] = bool_or_gated(dk);
  r.evidence["phi_tilde_epi"] = epi;
  r.evidence["phi_tilde_rank"] = rank(tilde.map.matrix);
  r.evidence["hom_dim"] = tilde.hom.module.dim();
  if (!d1.verdict || !dk.verdict) {
    r.reason = "component test gated";
    return r;
  }
  r.verdict = *d1.verdict && *dk.verdict && epi;
  if (*r.verdict) {
    DingReport dh = ding_injective(tilde.hom.module);
    DingReport d2 = ding_injective(w.w2);
    if (dh.verdict && d2.verdict)
      r.evidence["tail"] = {{"hom_u_w1_ding_injective", *dh.verdict},
                            {"w2_ding_injective", *d2.verdict},
                            {"equivalent", *dh.verdict == *d2.verdict}};
  }
  return r;
}

HomDim Engine::dpd(const Module& m) {
  if (m.dim() == 0) return HomDim::neg_infinity();
  Module cur = m;
  for (std::size_t n = 0; n <= cutoff_; ++n) {
    DingReport r = ding_projective(cur);
    if (!r.verdict) return HomDim::exceeds(cutoff_);
    if (*r.verdict) return HomDim::finite(n);
    if (n < cutoff_) cur = syzygy(cur, strategy_);
  }
  return HomDim::exceeds(cutoff_);
}

HomDim Engine::did(const Module& w) { return dpd(dual_module(w)); }

TripleDim Engine::dpd(const LeftTriple& m) {
  Module x = triple_to_module(m);
  TripleDim out{dpd(x), HomDim::neg_infinity()};
  if (x.dim() == 0) return out;
  out.componentwise = HomDim::exceeds(cutoff_);
  Module cur = x;
  for (std::size_t n = 0; n <= cutoff_; ++n) {
    DingReport r = classify(module_to_left_triple(m.ring, cur));
    if (!r.verdict) break;
    if (*r.verdict) {
      out.componentwise = HomDim::finite(n);
      break;
    }
    if (n < cutoff_) cur = syzygy(cur, strategy_);
  }
  return out;
}

TripleDim Engine::did(const RightTriple& w) {
  Module x = triple_to_module(w);
  TripleDim out{did(x), HomDim::neg_infinity()};
  if (x.dim() == 0) return out;
  out.componentwise = HomDim::exceeds(cutoff_);
  Module cur = x;
  for (std::size_t n = 0; n <= cutoff_; ++n) {
    DingReport r = classify(module_to_right_triple(w.ring, cur));
    if (!r.verdict) break;
    if (*r.verdict) {
      out.componentwise = HomDim::finite(n);
      break;
    }
    if (n < cutoff_) cur = dual_module(syzygy(dual_module(cur), strategy_));
  }
  return out;
}

namespace {

template <typename T, typename F>
GlobalDimEstimate estimate(const std::vector<T>& family, F&& dim) {
  GlobalDimEstimate g;
  for (const auto& x : family) {
    HomDim d = dim(x);
    if (!d.is_known()) {
      ++g.excluded;
      continue;
    }
    ++g.members;
    g.lower_bound = max(g.lower_bound, d);
  }
  return g;
}

}  // namespace

GlobalDimEstimate Engine::estimate_dpd(const std::vector<Module>& family) {
  return estimate(family, [&](const Module& m) { return dpd(m); });
}
GlobalDimEstimate Engine::estimate_dpd(const std::vector<LeftTriple>& family) {
  return estimate(family, [&](const LeftTriple& m) { return dpd(triple_to_module(m)); });
}
GlobalDimEstimate Engine::estimate_did(const std::vector<Module>& family) {
  return estimate(family, [&](const Module& m) { return did(m); });
}
GlobalDimEstimate Engine::estimate_did(const std::vector<RightTriple>& family) {
  return estimate(family, [&](const RightTriple& w) { return did(triple_to_module(w)); });
}

namespace {

VerifyReport compare_structure(DingReport lhs, DingReport rhs, const char* direct_key,
                               const char* triple_key, const char* tail_key) {
  VerifyReport v;
  v.ledger = rhs.ledger;
  v.evidence[direct_key] = to_json(lhs);
  v.evidence[triple_key] = to_json(rhs);
  if (!lhs.verdict || !rhs.verdict) {
    v.reason = !lhs.verdict ? "direct test gated: " + lhs.reason : "triple test gated: " + rhs.reason;
    return v;
  }
  const bool agree = *lhs.verdict == *rhs.verdict;
  v.evidence["agree"] = agree;
  v.verdict = agree ? Verdict::pass : Verdict::fail;
  if (!agree) v.reason = "direct and triple-level verdicts differ";
  if (agree && *rhs.verdict && rhs.evidence.contains("tail") &&
      !rhs.evidence["tail"]["equivalent"].get<bool>()) {
    v.verdict = Verdict::fail;
    v.reason = std::string("tail equivalence fails: ") + tail_key;
  }
  return v;
}

}  // namespace

VerifyReport Engine::verify_thm_3_4(const LeftTriple& m) {
  DingReport rhs = classify(m);
  DingReport lhs = ding_projective(triple_to_module(m));
  VerifyReport v = compare_structure(std::move(lhs), std::move(rhs), "ding_projective_over_t",
                                     "triple_conditions", "U (x) M1 versus M2");
  v.evidence["banner"] = kDingBanner;
  return v;
}

VerifyReport Engine::verify_thm_4_4(const RightTriple& w) {
  DingReport rhs = classify(w);
  DingReport lhs = ding_injective(triple_to_module(w));
  VerifyReport v = compare_structure(std::move(lhs), std::move(rhs), "ding_injective_over_t",
                                     "triple_conditions", "Hom(U, W1) versus W2");
  v.evidence["banner"] = kDingBanner;
  return v;
}

VerifyReport Engine::verify_cor_3_5(const LeftTriple& m) {
  VerifyReport v;
  if (!is_tr_shaped(*m.ring)) {
    v.reason = "precondition failed: ring is not of the form [[R, 0], [R, R]]";
    return v;
  }
  if (auto e = validate(m)) throw std::invalid_argument("invalid left triple: " + *e);
  DingReport c1 = ding_projective(triple_to_module(m));
  DingReport p1 = ding_projective(m.m1);
  DingReport p2 = ding_projective(m.m2);
  DingReport pc = ding_projective(cokernel_module(m.phi_morphism()).module);
  const bool mono = rank(m.phi) == m.tensor.module.dim();
  v.ledger = {gate_hypothesis("R is Iwanaga-Gorenstein (finite Ding test)", m.ring->a)};
  if (!c1.verdict || !p1.verdict || !p2.verdict || !pc.verdict) {
    v.reason = "a Ding test is gated";
    return v;
  }
  const bool s1 = *c1.verdict;
  const bool s2 = *p1.verdict && *pc.verdict && mono;
  const bool s3 = *p2.verdict && *pc.verdict && mono;
  v.evidence = {{"condition_1", s1}, {"condition_2", s2}, {"condition_3", s3},
                {"phi_mono", mono}, {"banner", kDingBanner}};
  v.verdict = s1 == s2 && s2 == s3 ? Verdict::pass : Verdict::fail;
  if (v.verdict == Verdict::fail) v.reason = "the three conditions disagree";
  return v;
}

VerifyReport Engine::verify_cor_4_5(const RightTriple& w) {
  VerifyReport v;
  if (!is_tr_shaped(*w.ring)) {
    v.reason = "precondition failed: ring is not of the form [[R, 0], [R, R]]";
    return v;
  }
  if (auto e = validate(w)) throw std::invalid_argument("invalid right triple: " + *e);
  TildeMap tilde = phi_tilde(w);
  DingReport c1 = ding_injective(triple_to_module(w));
  DingReport i1 = ding_injective(w.w1);
  DingReport i2 = ding_injective(w.w2);
  DingReport ik = ding_injective(kernel_module(tilde.map).module);
  const bool epi = rank(tilde.map.matrix) == tilde.hom.module.dim();
  v.ledger = {automatic("R is right coherent", "finite-dimensional algebra"),
              gate_hypothesis("R is Iwanaga-Gorenstein (finite Ding test)", w.ring->a)};
  if (!c1.verdict || !i1.verdict || !i2.verdict || !ik.verdict) {
    v.reason = "a Ding test is gated";
    return v;
  }
  const bool s1 = *c1.verdict;
  const bool s2 = *i1.verdict && *ik.verdict && epi;
  const bool s3 = *i2.verdict && *ik.verdict && epi;
  v.evidence = {{"condition_1", s1}, {"condition_2", s2}, {"condition_3", s3},
                {"phi_tilde_epi", epi}, {"banner", kDingBanner}};
  v.verdict = s1 == s2 && s2 == s3 ? Verdict::pass : Verdict::fail;
  if (v.verdict == Verdict::fail) v.reason = "the three conditions disagree";
  return v;
}

namespace {

VerifyReport sandwich(std::vector<Hypothesis> ledger, const HomDim& d1, const HomDim& d2,
                      const TripleDim& dm, const char* k1, const char* k2, const char* km) {
  VerifyReport v;
  v.ledger = std::move(ledger);
  const HomDim lower = max(d1, d2);
  const HomDim upper = max(plus_one(d1), d2);
  v.evidence = {{k1, to_json(d1)},
                {k2, to_json(d2)},
                {km, to_json(dm.direct)},
                {std::string(km) + "_componentwise", to_json(dm.componentwise)},
                {"lower", to_json(lower)},
                {"upper", to_json(upper)},
                {"banner", kDingBanner}};
  if (!dm.agree() && dm.direct.is_known() && dm.componentwise.is_known()) {
    v.verdict = Verdict::fail;
    v.reason = "direct and componentwise dimensions differ";
    return v;
  }
  auto lo = known_leq(lower, dm.direct);
  auto hi = known_leq(dm.direct, upper);
  if (!lo || !hi) {
    v.reason = "a dimension exceeds the cutoff";
    return v;
  }
  v.verdict = *lo && *hi ? Verdict::pass : Verdict::fail;
  if (!*lo) v.reason = "lower bound violated";
  if (!*hi) v.reason = "upper bound violated";
  return v;
}

}  // namespace

VerifyReport Engine::verify_bounds_3_8(const LeftTriple& m) {
  if (auto e = validate(m)) throw std::invalid_argument("invalid left triple: " + *e);
  std::vector<Hypothesis> ledger = {
      gate_hypothesis("lDPD(B) is finite", m.ring->b),
      finite_dim_hypothesis("U_A has finite flat dimension", fd(m.ring->u.right_module(), cutoff_)),
      u_projective_hypothesis(m.ring, "_BU is projective"),
      gate_hypothesis("A is Iwanaga-Gorenstein (finite Ding test)", m.ring->a),
      gate_hypothesis("T is Iwanaga-Gorenstein (finite Ding test)", m.ring->t)};
  if (!ledger_satisfied(ledger)) {
    VerifyReport v;
    v.reason = unmet(ledger);
    v.ledger = std::move(ledger);
    return v;
  }
  return sandwich(std::move(ledger), dpd(m.m1), dpd(m.m2), dpd(m), "dpd_m1", "dpd_m2", "dpd_m");
}

VerifyReport Engine::verify_bounds_4_8(const RightTriple& w) {
  if (auto e = validate(w)) throw std::invalid_argument("invalid right triple: " + *e);
  std::vector<Hypothesis> ledger = {
      automatic("T is right coherent", "finite-dimensional algebra"),
      gate_hypothesis("rDID(B) is finite", w.ring->b),
      u_projective_hypothesis(w.ring, "_BU is flat"),
      automatic("U_A is finitely presented", "finite-dimensional module"),
      u_right_finite_hypothesis(w.ring),
      gate_hypothesis("A is Iwanaga-Gorenstein (finite Ding test)", w.ring->a),
      gate_hypothesis("T is Iwanaga-Gorenstein (finite Ding test)", w.ring->t)};
  if (!ledger_satisfied(ledger)) {
    VerifyReport v;
    v.reason = unmet(ledger);
    v.ledger = std::move(ledger);
    return v;
  }
  return sandwich(std::move(ledger), did(w.w1), did(w.w2), did(w), "did_w1", "did_w2", "did_w");
}

namespace {

Json estimate_json(const GlobalDimEstimate& g) {
  return {{"estimate", to_json(g.lower_bound)}, {"members", g.members}, {"excluded", g.excluded}};
}

std::string interval(const HomDim& lo, const char* what, const HomDim& hi) {
  return lo.to_string() + " <= " + what + " <= " + hi.to_string();
}

// Shared tail of the global dimension verifiers. `certified` holds the exact
// global dimensions of A, B and T, which equal the Iwanaga-Gorenstein values.
void global_bounds(VerifyReport& v, const GlobalDimEstimate& ea, const GlobalDimEstimate& eb,
                   const GlobalDimEstimate& et, const HomDim& ga, const HomDim& gb,
                   const HomDim& gt, const char* what) {
  const HomDim one = HomDim::finite(1);
  const HomDim lower = max(max(ea.lower_bound, eb.lower_bound), one);
  const HomDim upper = max(plus_one(ea.lower_bound), eb.lower_bound);
  const HomDim c_lower = max(max(ga, gb), one);
  const HomDim c_upper = max(plus_one(ga), gb);
  v.evidence["family_a"] = estimate_json(ea);
  v.evidence["family_b"] = estimate_json(eb);
  v.evidence["family_t"] = estimate_json(et);
  v.evidence["lower"] = to_json(lower);
  v.evidence["upper"] = to_json(upper);
  v.evidence["estimate_interval"] = interval(lower, what, upper);
  v.evidence["pinched"] = lower == upper;
  v.evidence["family_realizes_lower"] = et.lower_bound == lower;
  v.evidence["certified"] = {{"a", to_json(ga)},
                             {"b", to_json(gb)},
                             {"t", to_json(gt)},
                             {"interval", interval(c_lower, what, c_upper)}};
  v.evidence["banner"] = kDingBanner;

  auto within = known_leq(et.lower_bound, upper);
  auto c_lo = known_leq(c_lower, gt);
  auto c_hi = known_leq(gt, c_upper);
  auto fam = known_leq(et.lower_bound, gt);
  if (!within || !c_lo || !c_hi || !fam) {
    v.reason = "a dimension exceeds the cutoff";
    return;
  }
  v.verdict = Verdict::pass;
  if (!*within) {
    v.verdict = Verdict::fail;
    v.reason = "a family member exceeds the upper bound";
  } else if (!*c_lo || !*c_hi) {
    v.verdict = Verdict::fail;
    v.reason = "certified global dimensions violate the bounds";
  } else if (!*fam) {
    v.verdict = Verdict::fail;
    v.reason = "a family member exceeds the certified global dimension of T";
  }
}

}  // namespace

VerifyReport Engine::verify_bounds_3_9(const RingPtr& ring, const std::vector<Module>& family_a,
                                       const std::vector<Module>& family_b,
                                       const std::vector<LeftTriple>& family_t) {
  VerifyReport v;
  if (ring->u.dim() == 0) {
    v.ledger = {{"_BU is nonzero", HypStatus::failed, {{"dim", 0}}}};
    v.reason = "precondition failed: U = 0";
    return v;
  }
  if (family_t.empty()) throw std::invalid_argument("the family of triples is empty");
  v.ledger = {
      {"_BU is nonzero", HypStatus::verified, {{"dim", ring->u.dim()}}},
      u_projective_hypothesis(ring, "_BU is projective"),
      finite_dim_hypothesis("U_A has finite flat dimension", fd(ring->u.right_module(), cutoff_)),
      gate_hypothesis("A is Iwanaga-Gorenstein (finite Ding test)", ring->a),
      gate_hypothesis("B is Iwanaga-Gorenstein (finite Ding test)", ring->b),
      gate_hypothesis("T is Iwanaga-Gorenstein (finite Ding test)", ring->t)};
  if (!ledger_satisfied(v.ledger)) {
    v.reason = unmet(v.ledger);
    return v;
  }
  global_bounds(v, estimate_dpd(family_a), estimate_dpd(family_b), estimate_dpd(family_t),
                gate(ring->a), gate(ring->b), gate(ring->t), "lDPD(T)");
  return v;
}

VerifyReport Engine::verify_bounds_4_9(const RingPtr& ring, const std::vector<Module>& family_a,
                                       const std::vector<Module>& family_b,
                                       const std::vector<RightTriple>& family_t) {
  VerifyReport v;
  if (ring->u.dim() == 0) {
    v.ledger = {{"_BU is nonzero", HypStatus::failed, {{"dim", 0}}}};
    v.reason = "precondition failed: U = 0";
    return v;
  }
  if (family_t.empty()) throw std::invalid_argument("the family of triples is empty");
  v.ledger = {
      automatic("T is right coherent", "finite-dimensional algebra"),
      {"_BU is nonzero", HypStatus::verified, {{"dim", ring->u.dim()}}},
      u_projective_hypothesis(ring, "_BU is flat"),
      automatic("U_A is finitely presented", "finite-dimensional module"),
      u_right_finite_hypothesis(ring),
      gate_hypothesis("A is Iwanaga-Gorenstein (finite Ding test)", ring->a),
      gate_hypothesis("B is Iwanaga-Gorenstein (finite Ding test)", ring->b),
      gate_hypothesis("T is Iwanaga-Gorenstein (finite Ding test)", ring->t)};
  if (!ledger_satisfied(v.ledger)) {
    v.reason = unmet(v.ledger);
    return v;
  }
  global_bounds(v, estimate_did(family_a), estimate_did(family_b), estimate_did(family_t),
                gate(ring->a), gate(ring->b), gate(ring->t), "rDID(T)");
  return v;
}

namespace {

VerifyReport premise_failed(const std::string& what, const DingReport& r) {
  VerifyReport v;
  v.reason = r.verdict ? "premise not met: " + what : "premise gated: " + r.reason;
  v.evidence["premise"] = to_json(r);
  return v;
}

}  // namespace

VerifyReport Engine::verify_lemma_3_1(const Module& x, const Module& g) {
  DingReport dp = ding_projective(x);
  if (!dp.verdict || !*dp.verdict) return premise_failed("x is Ding projective", dp);
  VerifyReport v;
  HomDim pg = pd(g, cutoff_, strategy_);
  v.ledger = {finite_dim_hypothesis("G has finite flat dimension", pg)};
  if (!ledger_satisfied(v.ledger)) {
    v.reason = unmet(v.ledger);
    return v;
  }
  auto e = ext_dims(x, g, cutoff_);
  bool zero = true;
  for (std::size_t i = 1; i < e.size(); ++i) zero = zero && e[i] == 0;
  v.evidence = {{"ext", ext_json(e)}, {"banner", kDingBanner}};
  v.verdict = zero ? Verdict::pass : Verdict::fail;
  if (!zero) v.reason = "a positive Ext group is nonzero";
  return v;
}

VerifyReport Engine::verify_lemma_4_1(const Module& x, const Module& g) {
  DingReport di = ding_injective(x);
  if (!di.verdict || !*di.verdict) return premise_failed("x is Ding injective", di);
  VerifyReport v;
  HomDim ig = id(g, cutoff_);
  v.ledger = {finite_dim_hypothesis("G has finite FP-injective dimension", ig)};
  if (!ledger_satisfied(v.ledger)) {
    v.reason = unmet(v.ledger);
    return v;
  }
  auto e = ext_dims(g, x, cutoff_);
  bool zero = true;
  for (std::size_t i = 1; i < e.size(); ++i) zero = zero && e[i] == 0;
  v.evidence = {{"ext", ext_json(e)}, {"banner", kDingBanner}};
  v.verdict = zero ? Verdict::pass : Verdict::fail;
  if (!zero) v.reason = "a positive Ext group is nonzero";
  return v;
}

VerifyReport Engine::verify_lemma_3_2(const RingPtr& ring, const Module& e, const Module& f) {
  VerifyReport v;
  if (!is_injective(e)) {
    v.reason = "premise not met: E is not injective";
    return v;
  }
  if (!is_projective(f)) {
    v.reason = "premise not met: F is not flat";
    return v;
  }
  v.ledger = {finite_dim_hypothesis("_BU has finite flat dimension", fd(ring->u.left_module(), cutoff_))};
  if (!ledger_satisfied(v.ledger)) {
    v.reason = unmet(v.ledger);
    return v;
  }
  HomDim ih = id(hom_over(ring->u, e).module, cutoff_);
  HomDim ft = fd(tensor_over(ring->u, f).module, cutoff_);
  v.evidence = {{"id_hom_u_e", to_json(ih)}, {"fd_u_tensor_f", to_json(ft)}};
  if (!ih.is_known() || !ft.is_known()) {
    const bool proven = (!ih.is_known() && ih.periodic()) || (!ft.is_known() && ft.periodic());
    v.verdict = proven ? Verdict::fail : Verdict::inconclusive;
    v.reason = proven ? "dimension is provably infinite" : "a dimension exceeds the cutoff";
    return v;
  }
  v.verdict = Verdict::pass;
  return v;
}

VerifyReport Engine::verify_lemma_4_2(const RingPtr& ring, const Module& g) {
  VerifyReport v;
  if (!is_injective(g)) {
    v.reason = "premise not met: G is not FP-injective";
    return v;
  }
  v.ledger = {automatic("A and B are right coherent", "finite-dimensional algebras"),
              automatic("U_A is finitely presented", "finite-dimensional module"),
              finite_dim_hypothesis("_BU has finite flat dimension", fd(ring->u.left_module(), cutoff_))};
  if (!ledger_satisfied(v.ledger)) {
    v.reason = unmet(v.ledger);
    return v;
  }
  HomDim ih = fp_id(hom_over(ring->u, g).module, cutoff_);
  v.evidence = {{"fp_id_hom_u_g", to_json(ih)}};
  if (!ih.is_known()) {
    v.verdict = ih.periodic() ? Verdict::fail : Verdict::inconclusive;
    v.reason = ih.periodic() ? "dimension is provably infinite" : "dimension exceeds the cutoff";
    return v;
  }
  v.verdict = Verdict::pass;
  return v;
}

VerifyReport Engine::verify_lemma_3_7(const RingPtr& ring, const Module& x) {
  DingReport dp = ding_projective(x);
  if (!dp.verdict || !*dp.verdict) return premise_failed("X is Ding projective", dp);
  VerifyReport v;
  v.ledger = {gate_hypothesis("lDPD(B) is finite", ring->b),
              finite_dim_hypothesis("U_A has finite flat dimension", fd(ring->u.right_module(), cutoff_)),
              u_projective_hypothesis(ring, "_BU is projective")};
  if (!ledger_satisfied(v.ledger)) {
    v.reason = unmet(v.ledger);
    return v;
  }
  DingReport c = ding_projective(tensor_over(ring->u, x).module);
  v.evidence = {{"u_tensor_x", to_json(c)}, {"banner", kDingBanner}};
  if (!c.verdict) {
    v.reason = c.reason;
    return v;
  }
  v.verdict = *c.verdict ? Verdict::pass : Verdict::fail;
  return v;
}

VerifyReport Engine::verify_lemma_4_7(const RingPtr& ring, const Module& h) {
  DingReport di = ding_injective(h);
  if (!di.verdict || !*di.verdict) return premise_failed("H is Ding injective", di);
  VerifyReport v;
  v.ledger = {gate_hypothesis("rDID(B) is finite", ring->b),
              u_projective_hypothesis(ring, "_BU is flat"),
              u_right_finite_hypothesis(ring)};
  if (!ledger_satisfied(v.ledger)) {
    v.reason = unmet(v.ledger);
    return v;
  }
  DingReport c = ding_injective(hom_over(ring->u, h).module);
  v.evidence = {{"hom_u_h", to_json(c)}, {"banner", kDingBanner}};
  if (!c.verdict) {
    v.reason = c.reason;
    return v;
  }
  v.verdict = *c.verdict ? Verdict::pass : Verdict::fail;
  return v;
}

}  // namespace triding
