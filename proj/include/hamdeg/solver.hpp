#pragma once

#include <optional>
#include <vector>

#include "hamdeg/digraph.hpp"

namespace hamdeg {

struct SolveBudget {
  int max_n_dp = 22;                  // exact subset-DP cap (memory-bound)
  long long node_budget = 20'000'000; // backtracking node cap beyond the DP cap
};

enum class SolveStatus { Yes, No, Unknown };
const char* status_name(SolveStatus s);

struct HamiltonResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<CycleWitness> witness;
  long long nodes = 0;
  const char* method = "";
};

// Exact up to max_n_dp vertices; pruned backtracking above that, where
// exhausting the node budget yields Unknown rather than a verdict.
HamiltonResult has_hamilton_cycle(const Digraph& g, const SolveBudget& b = {});

// Directed cycle on exactly t distinct vertices, 2 <= t <= n.
HamiltonResult cycle_of_length(const Digraph& g, int t, const SolveBudget& b = {});

struct LengthStatus {
  int length;
  SolveStatus status;
  std::optional<CycleWitness> witness;
};

struct PancyclicReport {
  bool pancyclic;    // every length 2..n confirmed present
  bool definitive;   // no Unknown entries
  std::vector<LengthStatus> lengths;  // entry i covers length i+2
  std::vector<int> missing;           // lengths confirmed absent
};
PancyclicReport is_pancyclic(const Digraph& g, const SolveBudget& b = {});

struct VertexPancyclicReport {
  bool vertex_pancyclic;
  bool definitive;
  // covered[v][t-2]: does some t-cycle contain v
  std::vector<std::vector<SolveStatus>> covered;
  std::vector<LengthStatus> lengths;  // one sample witness per length
};
VertexPancyclicReport is_vertex_pancyclic(const Digraph& g, const SolveBudget& b = {});

// BFS-exact shortest cycle through x; nullopt if x lies on no cycle.
std::optional<CycleWitness> shortest_cycle_through(const Digraph& g, int x);

struct OneFactorResult {
  bool has_one_factor;
  std::vector<int> successor;      // spanning union of disjoint cycles
  std::vector<int> hall_violator;  // vertex set S with |N+(S)| < |S|
  int violator_neighbourhood = 0;
};
// Exact via bipartite matching between out- and in-copies.
OneFactorResult has_one_factor(const Digraph& g);

// Vertex maximizing d+ + d- (lowest index on ties) if that total reaches n.
std::optional<int> high_total_degree_vertex(const Digraph& g);

// ham is a Hamilton cycle of G - x given in G's vertex labels. Rotates to a
// t-cycle through x: picks i with ham[i] in N+(x) and ham[i+t-2] in N-(x).
// Requires d+(x) + d-(x) >= n, which guarantees such i exists.
CycleWitness rotation_cycle_through(const Digraph& g, int x, int t,
                                    const CycleWitness& ham);

}  // namespace hamdeg
