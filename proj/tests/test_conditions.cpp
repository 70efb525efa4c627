#include <random>
#include <vector>

#include "doctest.h"
#include "hamdeg/conditions.hpp"
#include "hamdeg/constructions.hpp"
#include "hamdeg/digraph.hpp"
#include "hamdeg/harness.hpp"

using namespace hamdeg;

namespace {

Digraph complete_digraph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) e.emplace_back(u, v);
  return Digraph::from_edges(n, e);
}

// doubled undirected graph: every edge in both directions
Digraph double_undirected(int n, const std::vector<std::pair<int, int>>& und) {
  std::vector<std::pair<int, int>> e;
  for (auto& [u, v] : und) {
    e.emplace_back(u, v);
    e.emplace_back(v, u);
  }
  return Digraph::from_edges(n, e);
}

Digraph add_random_edge(const Digraph& g, std::mt19937_64& rng) {
  auto e = g.edges();
  int n = g.n();
  for (int tries = 0; tries < 4 * n * n; ++tries) {
    int u = (int)(rng() % n), v = (int)(rng() % n);
    if (u != v && !g.has_edge(u, v)) {
      e.emplace_back(u, v);
      return Digraph::from_edges(n, e);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("complete digraph satisfies everything") {
  Digraph k = complete_digraph(8);
  CHECK(nash_williams(k).holds);
  CHECK(posa_digraph(k).holds);
  CHECK(nw3(k).holds);
  CHECK(pancyclic_2conn_condition(k).holds);
  CHECK(approx_nw(k, Frac{1, 5}).holds);
  CHECK(approx_posa(k, Frac{1, 5}).holds);
  CHECK(capped_approx_nw(k, Frac{1, 5}).holds);
  CHECK(bermond_thomassen_false(k).holds);
}

TEST_CASE("first failure is the smallest index, clause order breaks ties") {
  // directed 6-cycle: all degrees 1, clause I and II both fail first at i=1
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 6; ++v) e.emplace_back(v, (v + 1) % 6);
  Digraph c6 = Digraph::from_edges(6, e);
  ConditionReport r = nash_williams(c6);
  CHECK_FALSE(r.holds);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->index == 1);
  CHECK(r.first_failure->clause == Clause::I);
}

TEST_CASE("nash-williams clause range stops below n/2") {
  // regular tournament on 7: all degrees 3, fails exactly at i=3
  Digraph t7 = regular_tournament(7);
  ConditionReport r = nash_williams(t7);
  CHECK_FALSE(r.holds);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->index == 3);
  // n=8 circulant with out-set {1,2,3,4}: all degrees 4, passes
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v)
    for (int d = 1; d <= 4; ++d) e.emplace_back(v, (v + d) % 8);
  CHECK(nash_williams(Digraph::from_edges(8, e)).holds);
}

TEST_CASE("conditions are monotone under edge addition") {
  std::mt19937_64 rng(23);
  int added = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + (int)(rng() % 7);
    Digraph g = random_digraph(n, Frac{1 + (int)(rng() % 3), 4}, rng());
    Digraph h = add_random_edge(g, rng);
    if (h.edge_count() == g.edge_count()) continue;
    ++added;
    if (nash_williams(g).holds) CHECK(nash_williams(h).holds);
    if (posa_digraph(g).holds) CHECK(posa_digraph(h).holds);
    if (nw3(g).holds) CHECK(nw3(h).holds);
    if (approx_nw(g, Frac{1, 5}).holds) CHECK(approx_nw(h, Frac{1, 5}).holds);
    if (pancyclic_2conn_condition(g).holds)
      CHECK(pancyclic_2conn_condition(h).holds);
  }
  CHECK(added > 200);
}

TEST_CASE("nash-williams is reversal-symmetric") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + (int)(rng() % 8);
    Digraph g = random_digraph(n, Frac{1 + (int)(rng() % 3), 4}, rng());
    Digraph r = reverse(g);
    CHECK(nash_williams(g).holds == nash_williams(r).holds);
    CHECK(nw3(g).holds == nw3(r).holds);
    CHECK(posa_digraph(g).holds == posa_digraph(r).holds);
  }
}

TEST_CASE("chvatal agrees with nash-williams on doubled graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + (int)(rng() % 8);
    std::vector<std::pair<int, int>> und;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) und.emplace_back(u, v);
    Digraph d = double_undirected(n, und);
    std::vector<int> degrees(n);
    for (int v = 0; v < n; ++v) degrees[v] = d.out_degree(v);
    CHECK(chvatal_undirected(degrees).holds == nash_williams(d).holds);
  }
}

TEST_CASE("chvatal known verdicts") {
  // K4 degrees
  CHECK(chvatal_undirected({3, 3, 3, 3}).holds);
  // C5 degrees: d_1 = 2 >= 2, i=2 not reached (i < 2.5 means i in {1,2}) --
  // at i=2: d_2 = 2 >= 3 fails, d_3 = 2 >= 3 fails
  ConditionReport c5 = chvatal_undirected({2, 2, 2, 2, 2});
  CHECK_FALSE(c5.holds);
  CHECK(c5.first_failure->index == 2);
  CHECK(chvatal_undirected({1}).holds);  // vacuous range
}

TEST_CASE("approx variants: out-of-range second index fails that disjunct") {
  // C6 again, eta = 1/3: at i=1 first disjunct needs d+_1 >= 1 + 2 = 3,
  // second needs d-_{6-1-2} = d-_3 >= 5; both fail
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 6; ++v) e.emplace_back(v, (v + 1) % 6);
  Digraph c6 = Digraph::from_edges(6, e);
  ConditionReport r = approx_nw(c6, Frac{1, 3});
  CHECK_FALSE(r.holds);
  CHECK(r.first_failure->index == 1);
  // eta big enough that n - i - ceil(eta*n) < 1 for every i: the second
  // disjunct is always out of range, so approx_nw reduces to the first
  Digraph k = complete_digraph(6);
  CHECK(approx_nw(k, Frac{9, 10}).holds == false);
  CHECK(approx_posa(k, Frac{1, 20}).holds);
}

TEST_CASE("capped variant is implied by the uncapped one") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + (int)(rng() % 8);
    Digraph g = random_digraph(n, Frac{1 + (int)(rng() % 3), 4}, rng());
    Frac eta{1, 4 + (int)(rng() % 5)};
    if (approx_nw(g, eta).holds) CHECK(capped_approx_nw(g, eta).holds);
  }
  // and the cap genuinely weakens: complete digraph with a large eta fails
  // approx_nw (first disjunct i + eta*n > n-1 at the top) but satisfies the
  // capped form (min(i + eta*n, n/2) <= n/2 <= n-1)
  Digraph k = complete_digraph(6);
  CHECK_FALSE(approx_nw(k, Frac{9, 10}).holds);
  CHECK(capped_approx_nw(k, Frac{9, 10}).holds);
}

TEST_CASE("nw3 adds clause III only for even n") {
  // two cliques of 3, all edges one way: NW holds, clause III fails
  Digraph g = two_cliques_disconnected(6);
  CHECK(nash_williams(g).holds);
  ConditionReport r = nw3(g);
  CHECK_FALSE(r.holds);
  CHECK(r.first_failure->index == 3);
  CHECK(r.first_failure->clause == Clause::III);
  // odd n: nw3 == nash_williams
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 5 + 2 * (int)(rng() % 4);
    Digraph h = random_digraph(n, Frac{1 + (int)(rng() % 3), 4}, rng());
    CHECK(nw3(h).holds == nash_williams(h).holds);
  }
}

TEST_CASE("posa digraph condition on known families") {
  // complete bipartite digraph, classes 3+3: degrees all 3,
  // i < (n-1)/2 = 2.5 so i in {1,2}: 3 >= 2, 3 >= 3 pass; n even, no extra
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) {
      e.emplace_back(u, v);
      e.emplace_back(v, u);
    }
  CHECK(posa_digraph(Digraph::from_edges(6, e)).holds);
  // regular tournament on 7: odd-n extra clause needs d at ceil(7/2) = 4
  // to reach 4, but all degrees are 3
  ConditionReport r = posa_digraph(regular_tournament(7));
  CHECK_FALSE(r.holds);
  CHECK(r.first_failure->index == 4);
}
