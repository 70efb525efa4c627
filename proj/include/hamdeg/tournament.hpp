#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamdeg/digraph.hpp"
#include "hamdeg/rational.hpp"
#include "hamdeg/solver.hpp"

namespace hamdeg {

struct RemovalStrategy {
  enum class Kind {
    Random,             // seeded uniform sample of distinct edges
    OneVertexOut,       // edges leaving one fixed vertex
    Split,              // deletions alternating between two vertices
    AdversarialGreedy,  // repeatedly delete the edge minimizing a proxy score
  };
  Kind kind = Kind::Random;
  uint64_t seed = 0;
};

const char* removal_kind_name(RemovalStrategy::Kind k);
RemovalStrategy::Kind removal_kind_from_name(const std::string& name);

bool is_regular_tournament(const Digraph& g);

// Exactly r distinct existing edges of t, per the strategy; deterministic
// given (strategy, seed).
std::vector<std::pair<int, int>> select_removal(const Digraph& t, int r,
                                                const RemovalStrategy& strat);

struct MergeResult {
  Digraph graph;                 // one vertex fewer, the merge vertex last
  std::vector<int> old_of_new;   // new id -> old id; the merge vertex -> -1
  int z = 0;                     // new id of the merged vertex
  int x = 0, y = 0;              // original endpoints, edge x -> y
};

// Contracts the edge x -> y into a fresh vertex z with N+(z) = N+(y) - x and
// N-(z) = N-(x) - y. A Hamilton cycle of the result lifts to one of g.
MergeResult merge_endpoints(const Digraph& g, int x, int y);

// Expands z back into x, y along the contracted edge and validates against g.
CycleWitness lift_merged_hamilton(const Digraph& g, const MergeResult& m,
                                  const CycleWitness& merged);

struct ThomassenVerdict {
  int n = 0, r = 0;
  std::vector<std::pair<int, int>> removed;
  SolveStatus direct = SolveStatus::Unknown;
  std::optional<CycleWitness> witness;  // Hamilton cycle of T - A when found
  // Low-semidegree reduction path: contract around the degree-deficient
  // vertex and cross-check against the direct answer.
  bool merge_ran = false;
  SolveStatus merged_status = SolveStatus::Unknown;
  bool lift_valid = false;   // meaningful when merged_status == Yes
  bool consistent = true;    // merged Yes implies direct Yes and a valid lift
};

// Removes r edges from a regular tournament and solves exactly. Requires
// r < (n-1)/2; larger removals fall outside the guarded regime.
ThomassenVerdict thomassen_trial(const Digraph& t, int r,
                                 const RemovalStrategy& strat,
                                 const SolveBudget& budget = {});

struct EdgeDensityReport {
  bool oriented = false;
  bool c_out_of_range = false;        // c >= 1/10000: exploratory territory
  bool min_semidegree_below = false;  // delta^0 < (1/2 - c) n
  bool hypothesis_met = false;
  int set_size = 0;                   // |S| = |T| = ceil((1/2 - c) n)
  long long min_edges_found = 0;
  std::vector<int> argmin_s, argmin_t;
  bool passes = false;  // min_edges_found * 60 >= n^2, exact integers
  long long pairs_checked = 0;
};

// Minimizes e(S -> T) over sampled and greedily descended pairs of vertex
// sets of size ceil((1/2 - c) n) and compares against n^2/60. Falsification
// only: a pass is "no violation found", never a proof.
EdgeDensityReport keevash_sudakov_check(const Digraph& g, const Frac& c,
                                        long long trials, uint64_t seed);

struct TourneyRow {
  int n = 0;
  std::string strategy;
  int r = 0;
  uint64_t seed = 0;
  bool hamiltonian = false;
  long long runtime_ms = 0;
};

// Full grid: for each n (odd), each strategy, each r in 0..(n-3)/2, seeds
// 0..seeds-1. Non-Hamiltonian rows, if any, surface in the output.
std::vector<TourneyRow> tourney_sweep(const std::vector<int>& ns,
                                      const std::vector<RemovalStrategy::Kind>& kinds,
                                      int seeds,
                                      const SolveBudget& budget = {});

std::string tourney_csv(const std::vector<TourneyRow>& rows);

}  // namespace hamdeg
