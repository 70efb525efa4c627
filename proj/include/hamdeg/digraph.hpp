#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamdeg/bitset.hpp"

namespace hamdeg {

// Loop-free digraph: at most one edge per ordered pair, 2-cycles allowed.
// Vertices are dense 0..n-1. Values are immutable after construction.
class Digraph {
 public:
  // Deduplicates edges; rejects loops and out-of-range endpoints.
  static Digraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // Takes ownership of out-adjacency rows; rejects loops.
  static Digraph from_adjacency(std::vector<Bits> out);

  int n() const { return n_; }
  long long edge_count() const { return m_; }
  bool has_edge(int u, int v) const { return out_[u].test(v); }
  const Bits& out(int v) const { return out_[v]; }
  const Bits& in(int v) const { return in_[v]; }
  int out_degree(int v) const { return out_[v].count(); }
  int in_degree(int v) const { return in_[v].count(); }
  // Edges sorted by (u, v).
  std::vector<std::pair<int, int>> edges() const;

 private:
  explicit Digraph(std::vector<Bits> out);
  int n_ = 0;
  long long m_ = 0;
  std::vector<Bits> out_, in_;
};

// Both sequences sorted ascending; accessors are 1-based to match the
// d_1 <= ... <= d_n convention used by every condition.
struct DegreeSequences {
  std::vector<int> out_sorted, in_sorted;
  int n() const { return (int)out_sorted.size(); }
  int out(int i) const { return out_sorted[i - 1]; }
  int in(int i) const { return in_sorted[i - 1]; }
};

DegreeSequences degree_sequences(const Digraph& g);
int min_semi_degree(const Digraph& g);
bool is_strongly_connected(const Digraph& g);
bool is_oriented(const Digraph& g);

// Union of out-/in-neighbourhoods of S (vertices of S not included unless hit).
Bits out_neighbourhood(const Digraph& g, const Bits& s);
Bits in_neighbourhood(const Digraph& g, const Bits& s);

// a_i <= b_i pointwise for equal-length ascending lists.
bool dominates(const std::vector<long long>& smaller, const std::vector<long long>& larger);

Digraph reverse(const Digraph& g);

struct VertexRemoval {
  Digraph graph;
  std::vector<int> old_of_new;  // old_of_new[new index] = original vertex id
};
VertexRemoval remove_vertex(const Digraph& g, int v);
VertexRemoval induced(const Digraph& g, const Bits& s);

struct CycleWitness {
  std::vector<int> vertices;  // distinct, consecutive edges plus closing edge
  int length() const { return (int)vertices.size(); }
};

bool validate_cycle(const Digraph& g, const CycleWitness& w);
// Rotates so the smallest vertex comes first.
CycleWitness normalize_cycle(CycleWitness w);

// Text format: "n m" header then m lines "u v", 0-based.
Digraph parse_digraph(const std::string& text);
std::string format_digraph(const Digraph& g);

}  // namespace hamdeg
