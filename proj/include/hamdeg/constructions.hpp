#pragma once

#include <string>

#include "hamdeg/digraph.hpp"
#include "hamdeg/rational.hpp"

namespace hamdeg {

// Independent set I = {0..k-1}; complete digraph K = {k..n-1}; X = {k..2k-1};
// all edges both ways between I and X. Degree sequences (both directions):
// k^k, (n-1-k)^(n-2k), (n-1)^k. Requires 1 <= k and 2k < n.
Digraph intro_extremal(int n, int k);

// Complete digraph K = {0..n-3}; v = n-2 and w = n-1 send edges to all of K;
// u = 0 sends edges to v and w. Not Hamiltonian: v and w share the single
// in-neighbour u. Requires n >= 5.
Digraph bermond_thomassen(int n);

// Complete digraphs K = {0..k-2} and K' = {k-1..n-4}; u = n-3, v = n-2,
// w = n-1. All edges K'->K, K'->{u,v}, {u,v}->K; w joined both ways to every
// other vertex. Out-sequence (k-1)^(k-1), k, k, (n-1)^(n-k-1); in-sequence
// (n-k-2)^(n-k-2), n-k-1, n-k-1, (n-1)^k. Requires 2 <= k and 2k < n.
Digraph figure1_extremal(int n, int k);

// Complete digraphs on {0..n/2-1} and {n/2..n-1} plus all edges from the
// first clique to the second (which becomes the sink side). n even, >= 4.
Digraph two_cliques_disconnected(int n);

// n odd, >= 5: complete digraphs on ceil(n/2) vertices {0..} and floor(n/2)
// vertices, plus all edges from the larger clique to the smaller.
Digraph two_cliques_odd(int n);

// Doubled undirected graph: K_{h,h} (h = n/2, classes {0..h-1}, {h..n-1})
// minus the perfect matching {i, h+i}, plus a spanning cycle inside the
// first class; every undirected edge becomes a 2-cycle. n even, >= 8.
Digraph chvatal_double_counterexample(int n);

// x = 0; layers V_1..V_{k-2} (in index order) with |V_i| = 3^i * ceil(n*eta),
// eta = 1/(k*3^k); complete digraph K on the remaining vertices, placed
// last. Edges: x->V_1, V_i->V_{i+1}, V_{k-2}->K, and K->every other vertex.
// Shortest cycle through x has length exactly k. Requires k >= 3 and n large
// enough that K is nonempty.
Digraph vertex_pancyclic_counterexample(int k, int n);
Frac vertex_pancyclic_eta(int k);

struct OrientedPosaParams {
  long long t, c, s;
};
// Smallest t with 3 - 1/t > 8*alpha; c = 4t; s = n/(2c) - 2.
OrientedPosaParams oriented_posa_parameters(Frac alpha, long long n);

// Oriented graph on consecutive classes A (n/4), B (n/8), C (n/8-1),
// D (n/4+1), E (n/4) with all edges A->B, B->C, C->D, A->C, B->D, D->A,
// E->A, E->B, C->E, D->E, tournaments inside A, B, C, D (E independent).
// A ends with a c-vertex block A'' wired so the c smallest out-degrees land
// between alpha*n and 3n/8; D mirrors the pattern for in-degrees. Both
// degree sequences dominate (alpha*n)^c, (3n/8)^(n-c); the graph has no
// 1-factor, hence no Hamilton cycle. Requires 0 < alpha < 3/8, 8t | n and
// s >= 1.
Digraph oriented_posa_counterexample(Frac alpha, long long n);

// Circulant: i -> i+1 .. i+(n-1)/2 (mod n). n odd, >= 3.
Digraph regular_tournament(int n);

// One-line vertex-layout description per family name (sidecar text).
std::string layout_doc(const std::string& family);

}  // namespace hamdeg
