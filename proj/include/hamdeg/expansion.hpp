#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamdeg/conditions.hpp"
#include "hamdeg/digraph.hpp"
#include "hamdeg/rational.hpp"

namespace hamdeg {

struct RobustParams {
  Frac nu;   // expansion margin, 0 < nu <= tau
  Frac tau;  // size-window parameter, tau < 1
  void validate() const;
};

enum class ExpandMode { Exhaustive, Sampled };
const char* expand_mode_name(ExpandMode m);

struct ExpansionViolator {
  std::vector<int> set;        // S with tau*n < |S| < (1-tau)*n
  int neighbourhood_size = 0;  // |RN+_nu(S)| (robust) or |N+(S)| (plain)
};

struct ExpansionVerdict {
  // Exhaustive mode: definitive. Sampled mode: true only means "no violation
  // found in the trials run"; it is never a certificate.
  bool is_expander = false;
  std::optional<ExpansionViolator> violator;
  long long sets_checked = 0;
  ExpandMode mode = ExpandMode::Exhaustive;
  uint64_t seed = 0;       // sampled mode only
  long long trials = 0;    // sampled mode only
};

// Exhaustive subset enumeration is quadratic in 2^n; reject above this.
inline constexpr int kExhaustiveExpansionCap = 20;

// { x : |N-(x) ∩ S| >= nu * n }, threshold compared exactly.
Bits robust_out_neighbourhood(const Digraph& g, const Bits& s, const Frac& nu);

// |RN+_nu(S)| >= |S| + nu*n for every S with tau*n < |S| < (1-tau)*n.
ExpansionVerdict is_robust_outexpander(const Digraph& g, const RobustParams& p,
                                       ExpandMode mode = ExpandMode::Exhaustive,
                                       long long trials = 20000,
                                       uint64_t seed = 1);

// Same window, plain out-neighbourhood |N+(S)| in place of the robust one.
ExpansionVerdict is_outexpander(const Digraph& g, const RobustParams& p,
                                ExpandMode mode = ExpandMode::Exhaustive,
                                long long trials = 20000, uint64_t seed = 1);

enum class DegreeExpansionOutcome {
  HypothesisFalse,  // the degree hypothesis fails, nothing to verify
  Verified,         // both conclusions hold
  SmallNException,  // hypothesis holds but a conclusion fails at this n
};
const char* degree_expansion_outcome_name(DegreeExpansionOutcome o);

struct DegreeExpansionReport {
  DegreeExpansionOutcome outcome;
  ConditionReport hypothesis;  // relaxed degree condition at eta
  int min_semidegree = 0;
  bool semidegree_ok = false;  // delta^0 >= eta*n
  // Present iff the hypothesis holds: exhaustive robust (tau^2, tau) verdict.
  std::optional<ExpansionVerdict> expansion;
};

// Checks the implication "relaxed degree condition at eta ==> delta^0 >= eta*n
// and robust (tau^2, tau)-outexpander" on a concrete digraph. A failed
// conclusion is reported as a small-n exception, not an error: the implication
// is only promised for large n.
DegreeExpansionReport verify_expansion_from_degrees(const Digraph& g,
                                                    const Frac& eta,
                                                    const Frac& tau);

// Breaks every 2-cycle by deleting one of its two edges, each side with
// probability 1/2, independently; single-direction edges are kept. The result
// is always oriented.
Digraph random_orientation(const Digraph& g, uint64_t seed);

}  // namespace hamdeg
