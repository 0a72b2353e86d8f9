#ifndef TRIDING_DINGHOM_HPP
#define TRIDING_DINGHOM_HPP

// Ding projective and injective tests, Ding dimensions, and the verifiers for
// the structure and dimension results on triangular matrix algebras.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "triding/homalg.hpp"
#include "triding/trimat.hpp"

namespace triding {

using Json = nlohmann::ordered_json;

enum class HypStatus { verified, auto_satisfied, assumed, failed };
const char* to_string(HypStatus s);

struct Hypothesis {
  std::string name;
  HypStatus status;
  Json evidence;
};

Json to_json(const std::vector<Hypothesis>& ledger);
Json to_json(const HomDim& d);

/// Shared text attached to every report.
extern const char* const kDingBanner;

/// verdict is empty when a gate or hypothesis prevents a decision.
struct DingReport {
  std::optional<bool> verdict;
  std::string reason;
  std::vector<Hypothesis> ledger;
  Json evidence = Json::object();
};

Json to_json(const DingReport& r);

enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict v);

struct VerifyReport {
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  std::vector<Hypothesis> ledger;
  Json evidence = Json::object();
};

/// Dimensions of a triple computed over t and componentwise, with agreement flag.
struct TripleDim {
  HomDim direct;
  HomDim componentwise;
  bool agree() const { return direct == componentwise; }
};

struct GlobalDimEstimate {
  std::size_t members = 0;
  std::size_t excluded = 0;
  HomDim lower_bound = HomDim::neg_infinity();  // max over the family
};

class Engine {
 public:
  explicit Engine(std::size_t cutoff = 32, CoverStrategy strategy = CoverStrategy::compact);

  std::size_t cutoff() const { return cutoff_; }
  CoverStrategy strategy() const { return strategy_; }

  /// Cached iwanaga_gorenstein_bound.
  HomDim gate(const AlgebraPtr& alg);

  DingReport ding_projective(const Module& m);
  /// Ding projectivity of the dual module.
  DingReport ding_injective(const Module& w);
  /// Ext^i(D(Lambda), w) = 0 for 1 <= i <= max(d, 1), resolving the injective cogenerator.
  DingReport ding_injective_direct(const Module& w);

  DingReport classify(const LeftTriple& m);
  DingReport classify(const RightTriple& w);

  HomDim dpd(const Module& m);
  HomDim did(const Module& w);
  TripleDim dpd(const LeftTriple& m);
  TripleDim did(const RightTriple& w);

  GlobalDimEstimate estimate_dpd(const std::vector<Module>& family);
  GlobalDimEstimate estimate_dpd(const std::vector<LeftTriple>& family);
  GlobalDimEstimate estimate_did(const std::vector<Module>& family);
  GlobalDimEstimate estimate_did(const std::vector<RightTriple>& family);

  VerifyReport verify_thm_3_4(const LeftTriple& m);
  VerifyReport verify_thm_4_4(const RightTriple& w);
  VerifyReport verify_cor_3_5(const LeftTriple& m);
  VerifyReport verify_cor_4_5(const RightTriple& w);
  VerifyReport verify_bounds_3_8(const LeftTriple& m);
  VerifyReport verify_bounds_4_8(const RightTriple& w);
  VerifyReport verify_bounds_3_9(const RingPtr& ring, const std::vector<Module>& family_a,
                                 const std::vector<Module>& family_b,
                                 const std::vector<LeftTriple>& family_t);
  VerifyReport verify_bounds_4_9(const RingPtr& ring, const std::vector<Module>& family_a,
                                 const std::vector<Module>& family_b,
                                 const std::vector<RightTriple>& family_t);

  /// x Ding projective, g of finite projective dimension: Ext^i(x, g) = 0 for 1 <= i <= cutoff.
  VerifyReport verify_lemma_3_1(const Module& x, const Module& g);
  /// x Ding injective, g of finite injective dimension: Ext^i(g, x) = 0 for 1 <= i <= cutoff.
  VerifyReport verify_lemma_4_1(const Module& x, const Module& g);
  /// e injective right A-module, f flat left A-module.
  VerifyReport verify_lemma_3_2(const RingPtr& ring, const Module& e, const Module& f);
  /// g injective right A-module: Hom_A(U, g) has finite injective dimension.
  VerifyReport verify_lemma_4_2(const RingPtr& ring, const Module& g);
  /// x Ding projective left A-module: U (x)_A x is Ding projective.
  VerifyReport verify_lemma_3_7(const RingPtr& ring, const Module& x);
  /// h Ding injective right A-module: Hom_A(U, h) is Ding injective.
  VerifyReport verify_lemma_4_7(const RingPtr& ring, const Module& h);

 private:
  Hypothesis finite_dim_hypothesis(const std::string& name, const HomDim& d);
  Hypothesis gate_hypothesis(const std::string& name, const AlgebraPtr& alg);
  Hypothesis u_projective_hypothesis(const RingPtr& ring, const std::string& name);
  Hypothesis u_right_finite_hypothesis(const RingPtr& ring);
  std::vector<Hypothesis> ledger_3_4(const RingPtr& ring);
  std::vector<Hypothesis> ledger_4_4(const RingPtr& ring);
  bool ding_projective_bool(const Module& m, bool& gated);
  TripleDim triple_dpd(const LeftTriple& m);

  std::size_t cutoff_;
  CoverStrategy strategy_;
  std::map<std::string, HomDim> gates_;
};

/// True when every hypothesis is verified or automatic.
bool ledger_satisfied(const std::vector<Hypothesis>& ledger);

/// A = B = R and U the regular bimodule of R.
bool is_tr_shaped(const TriMatRing& ring);

}  // namespace triding

#endif
