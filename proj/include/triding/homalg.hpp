#ifndef TRIDING_HOMALG_HPP
#define TRIDING_HOMALG_HPP

// Free covers, syzygies, resolutions, Ext and the classical dimensions.

#include <optional>
#include <string>
#include <vector>

#include "triding/module.hpp"

namespace triding {

/// Homological dimension: -infinity (zero module only), a finite value, or
/// "larger than the cutoff", optionally proven infinite by a periodic syzygy.
class HomDim {
 public:
  enum class Kind { neg_infinity, finite, exceeds_cutoff };

  static HomDim neg_infinity() { return HomDim(Kind::neg_infinity, 0, false); }
  static HomDim finite(std::size_t n) { return HomDim(Kind::finite, n, false); }
  static HomDim exceeds(std::size_t cutoff, bool periodic = false) {
    return HomDim(Kind::exceeds_cutoff, cutoff, periodic);
  }

  Kind kind() const { return kind_; }
  bool is_neg_infinity() const { return kind_ == Kind::neg_infinity; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool exceeds_cutoff() const { return kind_ == Kind::exceeds_cutoff; }
  /// Finite or -infinity: the value is known exactly.
  bool is_known() const { return kind_ != Kind::exceeds_cutoff; }
  std::size_t value() const;
  std::size_t cutoff() const;
  bool periodic() const { return periodic_; }

  std::string to_string() const;

  bool operator==(const HomDim& other) const = default;

 private:
  HomDim(Kind k, std::size_t v, bool p) : kind_(k), value_(v), periodic_(p) {}
  Kind kind_;
  std::size_t value_;
  bool periodic_;
};

/// Max with -infinity as identity; an unknown operand makes the result unknown.
HomDim max(const HomDim& a, const HomDim& b);
/// -infinity + 1 = -infinity.
HomDim plus_one(const HomDim& d);
/// a <= b when both values are known; nullopt otherwise.
std::optional<bool> known_leq(const HomDim& a, const HomDim& b);

enum class CoverStrategy {
  basis,        // generator i -> basis vector i
  irredundant,  // greedy over the basis, then drop redundant generators
  compact,      // randomised search for a short generating tuple, falling back to irredundant
  doubled,      // basis generators listed twice (a deliberately padded cover)
};

const char* to_string(CoverStrategy s);

struct FreeCover {
  std::size_t rank;
  Morphism map;  // Lambda^rank -> m, generator j -> generators[j]
  std::vector<Vec> generators;
};

FreeCover free_cover(const Module& m, CoverStrategy strategy = CoverStrategy::compact);
Module syzygy(const Module& m, CoverStrategy strategy = CoverStrategy::compact);

/// F_i -> F_{i-1} (F_0 -> target), with the kernel of each step as a module.
struct ResolutionStep {
  std::size_t rank;
  Morphism differential;
  Module kernel;
};

struct Resolution {
  Module target;
  std::vector<ResolutionStep> steps;
  std::size_t length() const { return steps.size(); }
};

Resolution resolve(const Module& m, std::size_t length,
                   CoverStrategy strategy = CoverStrategy::compact);
/// nullopt when consecutive composites vanish and every joint is exact.
std::optional<std::string> check_resolution(const Resolution& r);

bool is_projective(const Module& m);
bool is_injective(const Module& m);

HomDim pd(const Module& m, std::size_t cutoff, CoverStrategy strategy = CoverStrategy::compact);
HomDim id(const Module& m, std::size_t cutoff);
/// Flat modules over a finite-dimensional algebra are projective.
HomDim fd(const Module& m, std::size_t cutoff);
/// FP-injective modules over a Noetherian algebra are injective.
HomDim fp_id(const Module& m, std::size_t cutoff);

/// dim Ext^i(m, n) as cohomology of Hom(F_*, n).
std::size_t ext_dim(const Module& m, const Module& n, std::size_t i);
/// dim Ext^i(m, n) for i = 0..max_degree (entry i) from a single resolution.
std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t max_degree);

/// Common self-injective dimension of the two regular modules, or exceeds.
HomDim iwanaga_gorenstein_bound(const AlgebraPtr& alg, std::size_t cutoff);

}  // namespace triding

#endif
