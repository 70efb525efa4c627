#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hamdeg/constructions.hpp"
#include "hamdeg/digraph.hpp"
#include "hamdeg/harness.hpp"
#include "hamdeg/solver.hpp"
#include "oracles.hpp"

using namespace hamdeg;

namespace {

Digraph complete_digraph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) e.emplace_back(u, v);
  return Digraph::from_edges(n, e);
}

Digraph directed_cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Digraph::from_edges(n, e);
}

}  // namespace

TEST_CASE("hamilton solver matches the permutation oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + (int)(rng() % 7);
    Digraph g = random_digraph(n, Frac{1 + (int)(rng() % 4), 5}, rng());
    HamiltonResult r = has_hamilton_cycle(g);
    CHECK(r.status == (oracle::hamilton(g) ? SolveStatus::Yes : SolveStatus::No));
    if (r.status == SolveStatus::Yes) {
      REQUIRE(r.witness.has_value());
      CHECK(r.witness->length() == n);
      CHECK(validate_cycle(g, *r.witness));
    }
  }
}

TEST_CASE("DP path and backtracking path agree") {
  std::mt19937_64 rng(7);
  SolveBudget dp_only{30, 1};         // probe exhausts instantly, DP decides
  SolveBudget bt_only{0, 100000000};  // DP cap below n, backtracking decides
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + (int)(rng() % 9);
    Digraph g = random_digraph(n, Frac{1 + (int)(rng() % 4), 6}, rng());
    HamiltonResult a = has_hamilton_cycle(g, dp_only);
    HamiltonResult b = has_hamilton_cycle(g, bt_only);
    REQUIRE(a.status != SolveStatus::Unknown);
    REQUIRE(b.status != SolveStatus::Unknown);
    CHECK(a.status == b.status);
  }
}

TEST_CASE("node budget exhaustion yields Unknown, never a wrong verdict") {
  // a Yes needs at least n search nodes and a No needs the tree exhausted,
  // so a budget of one node on a 30-cycle can only come back Unknown
  SolveBudget tiny{0, 1};
  HamiltonResult r = has_hamilton_cycle(directed_cycle(30), tiny);
  CHECK(r.status == SolveStatus::Unknown);
  CHECK(r.nodes >= 1);
}

TEST_CASE("exact engines refuse beyond 64 vertices") {
  Digraph big = directed_cycle(65);
  CHECK_THROWS_AS(has_hamilton_cycle(big), std::invalid_argument);
  // but the BFS-based shortest cycle is unaffected
  auto w = shortest_cycle_through(big, 7);
  REQUIRE(w.has_value());
  CHECK(w->length() == 65);
}

TEST_CASE("fixed-length cycles match the tuple-scan oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + (int)(rng() % 6);
    Digraph g = random_digraph(n, Frac{1 + (int)(rng() % 3), 4}, rng());
    for (int t = 2; t <= n; ++t) {
      HamiltonResult r = cycle_of_length(g, t);
      CHECK(r.status ==
            (oracle::cycle_of_length(g, t) ? SolveStatus::Yes : SolveStatus::No));
      if (r.status == SolveStatus::Yes) {
        CHECK(r.witness->length() == t);
        CHECK(validate_cycle(g, *r.witness));
      }
    }
  }
  CHECK_THROWS_AS(cycle_of_length(directed_cycle(4), 1), std::invalid_argument);
  CHECK_THROWS_AS(cycle_of_length(directed_cycle(4), 5), std::invalid_argument);
}

TEST_CASE("pancyclicity") {
  Digraph k6 = complete_digraph(6);
  PancyclicReport r = is_pancyclic(k6);
  CHECK(r.pancyclic);
  CHECK(r.definitive);
  CHECK(r.missing.empty());
  REQUIRE((int)r.lengths.size() == 5);
  for (auto& ls : r.lengths) {
    CHECK(ls.status == SolveStatus::Yes);
    CHECK(validate_cycle(k6, *ls.witness));
  }
  // directed cycle: only the full length exists
  PancyclicReport c = is_pancyclic(directed_cycle(6));
  CHECK_FALSE(c.pancyclic);
  CHECK(c.definitive);
  CHECK(c.missing == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("vertex pancyclicity") {
  VertexPancyclicReport r = is_vertex_pancyclic(complete_digraph(5));
  CHECK(r.vertex_pancyclic);
  CHECK(r.definitive);
  for (auto& row : r.covered)
    for (auto st : row) CHECK(st == SolveStatus::Yes);
  // layered family: vertex 0 sits on no 2-cycle but on a 3-cycle
  Digraph g = vertex_pancyclic_counterexample(3, 20);
  VertexPancyclicReport v = is_vertex_pancyclic(g);
  CHECK(v.definitive);
  CHECK_FALSE(v.vertex_pancyclic);
  CHECK(v.covered[0][0] == SolveStatus::No);
  CHECK(v.covered[0][1] == SolveStatus::Yes);
  // beyond the DP cap the report degrades to non-definitive, never wrong
  Digraph big = vertex_pancyclic_counterexample(3, 54);
  VertexPancyclicReport vb = is_vertex_pancyclic(big, SolveBudget{12, 50000});
  CHECK_FALSE(vb.definitive);
  for (auto& row : vb.covered)
    for (auto st : row) CHECK(st != SolveStatus::No);
}

TEST_CASE("shortest cycle through a vertex") {
  // 4-cycle with a chord 2 -> 0: shortest through 0 is 0,1,2 back via chord
  Digraph g = Digraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 0}});
  auto w = shortest_cycle_through(g, 0);
  REQUIRE(w.has_value());
  CHECK(w->length() == 3);
  CHECK(validate_cycle(g, *w));
  auto w3 = shortest_cycle_through(g, 3);
  CHECK(w3->length() == 4);
  // acyclic vertex
  Digraph dag = Digraph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(shortest_cycle_through(dag, 0).has_value());
}

TEST_CASE("one-factor matches the permutation oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + (int)(rng() % 6);
    Digraph g = random_digraph(n, Frac{1 + (int)(rng() % 4), 6}, rng());
    OneFactorResult r = has_one_factor(g);
    CHECK(r.has_one_factor == oracle::one_factor(g));
    if (r.has_one_factor) {
      // successor must be a permutation along edges
      std::vector<bool> hit(n, false);
      for (int v = 0; v < n; ++v) {
        CHECK(g.has_edge(v, r.successor[v]));
        hit[r.successor[v]] = true;
      }
      for (int v = 0; v < n; ++v) CHECK(hit[v]);
    } else {
      // Hall violator certificate: |N+(S)| < |S|
      REQUIRE_FALSE(r.hall_violator.empty());
      Bits s((int)n);
      for (int v : r.hall_violator) s.set(v);
      CHECK(out_neighbourhood(g, s).count() == r.violator_neighbourhood);
      CHECK(r.violator_neighbourhood < (int)r.hall_violator.size());
    }
  }
}

TEST_CASE("hamilton implies one-factor") {
  std::mt19937_64 rng(19);
  int hams = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + (int)(rng() % 5);
    Digraph g = random_digraph(n, Frac{3, 5}, rng());
    if (has_hamilton_cycle(g).status == SolveStatus::Yes) {
      ++hams;
      CHECK(has_one_factor(g).has_one_factor);
    }
  }
  CHECK(hams > 50);
}

TEST_CASE("high total degree vertex") {
  Digraph g = figure1_extremal(9, 3);
  auto v = high_total_degree_vertex(g);
  REQUIRE(v.has_value());
  CHECK(g.out_degree(*v) + g.in_degree(*v) == 16);
  CHECK_FALSE(high_total_degree_vertex(directed_cycle(5)).has_value());
}

TEST_CASE("rotation through a high-degree vertex") {
  // complete digraph on 7: remove vertex 6, hand it a Hamilton cycle of the
  // rest, and ask for every cycle length through 6
  Digraph k7 = complete_digraph(7);
  CycleWitness ham{{0, 1, 2, 3, 4, 5}};
  for (int t = 2; t <= 7; ++t) {
    CycleWitness w = rotation_cycle_through(k7, 6, t, ham);
    CHECK(w.length() == t);
    CHECK(validate_cycle(k7, w));
    bool through = false;
    for (int v : w.vertices) through |= v == 6;
    CHECK(through);
  }
  CHECK_THROWS_AS(rotation_cycle_through(k7, 6, 8, ham), std::invalid_argument);
  CHECK_THROWS_AS(rotation_cycle_through(k7, 5, 3, ham), std::invalid_argument);
  // degree too small: directed cycle has total degree 2 < n
  Digraph c5 = directed_cycle(5);
  CycleWitness sub{{0, 1, 2, 3}};
  CHECK_THROWS_AS(rotation_cycle_through(c5, 4, 3, sub), std::invalid_argument);
}
