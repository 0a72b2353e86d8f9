#include <chrono>

#include "triding/instance.hpp"
#include "triding/random.hpp"

namespace triding {

namespace {

using Clock = std::chrono::steady_clock;

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json module_json(const Module& m) {
  Json acts = Json::array();
  for (const auto& a : m.actions()) acts.push_back(matrix_json(a));
  return {{"side", to_string(m.side())}, {"dim", m.dim()}, {"action", acts}};
}

class Recorder {
 public:
  Recorder(Records& out, const RunOptions& opt) : out_(out), opt_(opt) {}

  template <typename F>
  void add(const std::string& task, const std::string& instance, F&& body) {
    auto start = Clock::now();
    Json rec = body();
    Json full;
    full["task"] = task;
    full["instance"] = instance;
    full["verdict"] = rec["verdict"];
    full["hypothesis_ledger"] = rec.value("hypothesis_ledger", Json::array());
    full["evidence"] = rec.value("evidence", Json::object());
    if (opt_.timings) {
      double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      full["timings"] = {{"wall_ms", ms}};
    }
    out_.push_back(std::move(full));
  }

 private:
  Records& out_;
  const RunOptions& opt_;
};

Json verify_json(const VerifyReport& v) {
  Json ev = v.evidence;
  if (!v.reason.empty()) ev["reason"] = v.reason;
  return {{"verdict", to_string(v.verdict)}, {"hypothesis_ledger", to_json(v.ledger)},
          {"evidence", ev}};
}

Json module_analysis(Engine& e, const Module& m) {
  return {{"side", to_string(m.side())},
          {"dim", m.dim()},
          {"projective", is_projective(m)},
          {"injective", is_injective(m)},
          {"ding_projective", to_json(e.ding_projective(m))},
          {"ding_injective", to_json(e.ding_injective(m))},
          {"pd", to_json(pd(m, e.cutoff(), e.strategy()))},
          {"id", to_json(id(m, e.cutoff()))},
          {"dpd", to_json(e.dpd(m))},
          {"did", to_json(e.did(m))}};
}

Json conjuncts_json(const StructureTest& s) {
  Json c = Json::object();
  for (const auto& [k, v] : s.conjuncts) c[k] = v;
  return {{"verdict", s.verdict}, {"conjuncts", c}};
}

Json triple_dim_json(const TripleDim& d) {
  return {{"value", to_json(d.direct)}, {"componentwise", to_json(d.componentwise)},
          {"agree", d.agree()}};
}

}  // namespace

Records run_analyze(Engine& engine, const Instance& inst, const RunOptions& opt) {
  Records out;
  Recorder rec(out, opt);
  for (const auto& name : inst.modules.order) {
    rec.add("analyze", name, [&] {
      const Module& m = inst.modules.at(name);
      Json ev = {{"algebra", inst.algebra_name(m.algebra())}};
      ev.update(module_analysis(engine, m));
      ev["banner"] = kDingBanner;
      return Json{{"verdict", "analyzed"}, {"evidence", ev}};
    });
  }
  for (const auto& name : inst.triple_order) {
    rec.add("analyze", name, [&] {
      Json ev;
      if (inst.left_triples.has(name)) {
        const LeftTriple& m = inst.left_triples.at(name);
        Module x = triple_to_module(m);
        DingReport c = engine.classify(m);
        ev = {{"ring", inst.ring_name(m.ring)},
              {"side", "left"},
              {"dims", {m.m1.dim(), m.m2.dim()}},
              {"projective", is_projective(x)},
              {"structure", conjuncts_json(is_projective_triple(m))},
              {"injective", is_injective(x)},
              {"ding_projective", to_json(c)},
              {"ding_projective_over_t", to_json(engine.ding_projective(x))},
              {"ding_injective", to_json(engine.ding_injective(x))},
              {"pd", to_json(pd(x, engine.cutoff(), engine.strategy()))},
              {"id", to_json(id(x, engine.cutoff()))},
              {"dpd", triple_dim_json(engine.dpd(m))},
              {"did", to_json(engine.did(x))}};
      } else {
        const RightTriple& w = inst.right_triples.at(name);
        Module x = triple_to_module(w);
        DingReport c = engine.classify(w);
        ev = {{"ring", inst.ring_name(w.ring)},
              {"side", "right"},
              {"dims", {w.w1.dim(), w.w2.dim()}},
              {"projective", is_projective(x)},
              {"injective", is_injective(x)},
              {"structure", conjuncts_json(is_injective_triple(w))},
              {"ding_projective", to_json(engine.ding_projective(x))},
              {"ding_injective", to_json(c)},
              {"ding_injective_over_t", to_json(engine.ding_injective(x))},
              {"pd", to_json(pd(x, engine.cutoff(), engine.strategy()))},
              {"id", to_json(id(x, engine.cutoff()))},
              {"dpd", to_json(engine.dpd(x))},
              {"did", triple_dim_json(engine.did(w))}};
      }
      ev["banner"] = kDingBanner;
      return Json{{"verdict", "analyzed"}, {"evidence", ev}};
    });
  }
  return out;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"3.4",    "3.8",    "3.9",    "4.4",    "4.8",
                                               "4.9",    "cor3.5", "cor4.5", "lem3.1", "lem3.2",
                                               "lem3.7", "lem4.1", "lem4.2", "lem4.7"};
  return ids;
}

namespace {

struct NamedModule {
  std::string name;
  Module module;
};

// File modules over alg on the given side passing `keep`, then a canonical one.
template <typename Keep>
std::vector<NamedModule> candidates(const Instance& inst, const AlgebraPtr& alg, Side side,
                                    Keep&& keep, NamedModule canonical) {
  std::vector<NamedModule> out;
  for (const auto& n : inst.modules.order) {
    const Module& m = inst.modules.at(n);
    if (m.side() == side && same_algebra(m.algebra(), alg) && keep(m)) out.push_back({n, m});
  }
  out.push_back(std::move(canonical));
  return out;
}

void require_some(const Records& out, const std::string& what) {
  if (out.empty()) throw InstanceError(4, "nothing to verify: the file has no " + what);
}

}  // namespace

Records run_verify(Engine& e, const Instance& inst, const std::string& theorem,
                   const RunOptions& opt) {
  Records out;
  Recorder rec(out, opt);
  const std::string task = "verify:" + theorem;
  auto each_left = [&](auto&& f) {
    for (const auto& n : inst.left_triples.order)
      rec.add(task, n, [&] { return verify_json(f(inst.left_triples.at(n))); });
  };
  auto each_right = [&](auto&& f) {
    for (const auto& n : inst.right_triples.order)
      rec.add(task, n, [&] { return verify_json(f(inst.right_triples.at(n))); });
  };

  if (theorem == "3.4") {
    each_left([&](const LeftTriple& m) { return e.verify_thm_3_4(m); });
    require_some(out, "left triples");
  } else if (theorem == "4.4") {
    each_right([&](const RightTriple& w) { return e.verify_thm_4_4(w); });
    require_some(out, "right triples");
  } else if (theorem == "3.8") {
    each_left([&](const LeftTriple& m) { return e.verify_bounds_3_8(m); });
    require_some(out, "left triples");
  } else if (theorem == "4.8") {
    each_right([&](const RightTriple& w) { return e.verify_bounds_4_8(w); });
    require_some(out, "right triples");
  } else if (theorem == "cor3.5") {
    for (const auto& n : inst.left_triples.order)
      if (is_tr_shaped(*inst.left_triples.at(n).ring))
        rec.add(task, n, [&] { return verify_json(e.verify_cor_3_5(inst.left_triples.at(n))); });
    require_some(out, "left triples over a ring [[R, 0], [R, R]]");
  } else if (theorem == "cor4.5") {
    for (const auto& n : inst.right_triples.order)
      if (is_tr_shaped(*inst.right_triples.at(n).ring))
        rec.add(task, n, [&] { return verify_json(e.verify_cor_4_5(inst.right_triples.at(n))); });
    require_some(out, "right triples over a ring [[R, 0], [R, R]]");
  } else if (theorem == "3.9" || theorem == "4.9") {
    const Side side = theorem == "3.9" ? Side::left : Side::right;
    for (const auto& n : inst.families.order) {
      const Family& fam = inst.families.at(n);
      if (fam.side != side) continue;
      rec.add(task, n, [&] {
        const RingPtr& r = inst.rings.at(fam.ring);
        std::vector<Module> fa, fb;
        for (const auto& x : fam.a) fa.push_back(inst.modules.at(x));
        for (const auto& x : fam.b) fb.push_back(inst.modules.at(x));
        if (side == Side::left) {
          std::vector<LeftTriple> ft;
          for (const auto& x : fam.t) ft.push_back(inst.left_triples.at(x));
          return verify_json(e.verify_bounds_3_9(r, fa, fb, ft));
        }
        std::vector<RightTriple> ft;
        for (const auto& x : fam.t) ft.push_back(inst.right_triples.at(x));
        return verify_json(e.verify_bounds_4_9(r, fa, fb, ft));
      });
    }
    require_some(out, side == Side::left ? "left families" : "right families");
  } else if (theorem == "lem3.1" || theorem == "lem4.1") {
    const bool proj = theorem == "lem3.1";
    const Side side = proj ? Side::left : Side::right;
    for (const auto& xn : inst.modules.order) {
      const Module& x = inst.modules.at(xn);
      if (x.side() != side) continue;
      DingReport d = proj ? e.ding_projective(x) : e.ding_injective(x);
      if (!d.verdict || !*d.verdict) continue;
      for (const auto& gn : inst.modules.order) {
        const Module& g = inst.modules.at(gn);
        if (g.side() != side || !same_algebra(g.algebra(), x.algebra())) continue;
        HomDim dg = proj ? pd(g, e.cutoff(), e.strategy()) : id(g, e.cutoff());
        if (!dg.is_known()) continue;
        rec.add(task, "x=" + xn + " g=" + gn, [&] {
          return verify_json(proj ? e.verify_lemma_3_1(x, g) : e.verify_lemma_4_1(x, g));
        });
      }
    }
    require_some(out, proj ? "Ding projective modules with a finite-pd partner"
                           : "Ding injective modules with a finite-id partner");
  } else if (theorem == "lem3.2" || theorem == "lem4.2" || theorem == "lem3.7" ||
             theorem == "lem4.7") {
    for (const auto& rn : inst.rings.order) {
      const RingPtr& r = inst.rings.at(rn);
      const std::string an = inst.algebra_name(r->a);
      NamedModule reg{"regular(" + an + ")", Module::regular(r->a, Side::left)};
      NamedModule dreg{"D(regular(" + an + "))", dual_module(Module::regular(r->a, Side::left))};
      if (theorem == "lem3.2") {
        auto es = candidates(inst, r->a, Side::right, [](const Module& m) { return is_injective(m); }, dreg);
        auto fs = candidates(inst, r->a, Side::left, [](const Module& m) { return is_projective(m); }, reg);
        for (const auto& eh : es)
          for (const auto& fh : fs)
            rec.add(task, rn + " e=" + eh.name + " f=" + fh.name,
                    [&] { return verify_json(e.verify_lemma_3_2(r, eh.module, fh.module)); });
      } else if (theorem == "lem4.2") {
        auto gs = candidates(inst, r->a, Side::right, [](const Module& m) { return is_injective(m); }, dreg);
        for (const auto& g : gs)
          rec.add(task, rn + " g=" + g.name, [&] { return verify_json(e.verify_lemma_4_2(r, g.module)); });
      } else if (theorem == "lem3.7") {
        auto xs = candidates(inst, r->a, Side::left, [&](const Module& m) {
          auto d = e.ding_projective(m);
          return d.verdict && *d.verdict;
        }, reg);
        for (const auto& x : xs)
          rec.add(task, rn + " x=" + x.name, [&] { return verify_json(e.verify_lemma_3_7(r, x.module)); });
      } else {
        auto hs = candidates(inst, r->a, Side::right, [&](const Module& m) {
          auto d = e.ding_injective(m);
          return d.verdict && *d.verdict;
        }, dreg);
        for (const auto& h : hs)
          rec.add(task, rn + " h=" + h.name, [&] { return verify_json(e.verify_lemma_4_7(r, h.module)); });
      }
    }
    require_some(out, "rings");
  } else {
    throw InstanceError(3, "unknown theorem id '" + theorem + "'");
  }
  return out;
}

Records run_fuzz(Engine& e, const Instance& inst, const std::string& ring, std::uint64_t seed,
                 std::size_t count, std::size_t max_dim, const RunOptions& opt) {
  if (!inst.rings.has(ring)) throw InstanceError(4, "unknown ring '" + ring + "'");
  const RingPtr& r = inst.rings.at(ring);
  Records out;
  Recorder rec(out, opt);
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::string base = "fuzz/" + ring + "/seed=" + std::to_string(seed) + "/" + std::to_string(i);
    LeftTriple m = random_left_triple(rng, r, max_dim);
    RightTriple w = random_right_triple(rng, r, max_dim);
    Json lj = {{"first", module_json(m.m1)}, {"second", module_json(m.m2)}, {"phi", matrix_json(m.phi)}};
    Json rj = {{"first", module_json(w.w1)}, {"second", module_json(w.w2)}, {"phi", matrix_json(w.phi)}};
    auto with_triple = [](Json j, const Json& t) {
      j["evidence"]["triple"] = t;
      return j;
    };
    rec.add("verify:3.4", base + "/left", [&] { return with_triple(verify_json(e.verify_thm_3_4(m)), lj); });
    rec.add("verify:3.8", base + "/left", [&] { return with_triple(verify_json(e.verify_bounds_3_8(m)), lj); });
    rec.add("verify:4.4", base + "/right", [&] { return with_triple(verify_json(e.verify_thm_4_4(w)), rj); });
    rec.add("verify:4.8", base + "/right", [&] { return with_triple(verify_json(e.verify_bounds_4_8(w)), rj); });
  }
  return out;
}

int verify_exit_code(const Records& records) {
  bool any_fail = false, all_inconclusive = !records.empty();
  for (const auto& r : records) {
    const auto v = r.at("verdict").get<std::string>();
    any_fail = any_fail || v == "fail";
    all_inconclusive = all_inconclusive && v == "inconclusive";
  }
  if (any_fail) return 1;
  if (all_inconclusive) return 5;
  return 0;
}

}  // namespace triding
