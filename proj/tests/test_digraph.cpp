#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hamdeg/digraph.hpp"
#include "hamdeg/harness.hpp"
#include "oracles.hpp"

using namespace hamdeg;

TEST_CASE("from_edges rejects loops and bad endpoints, dedups") {
  CHECK_THROWS_AS(Digraph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph::from_edges(3, {{-1, 0}}), std::invalid_argument);
  Digraph g = Digraph::from_edges(3, {{0, 1}, {0, 1}, {1, 0}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("parse and format round-trip") {
  Digraph g = random_digraph(9, Frac{1, 3}, 7);
  Digraph h = parse_digraph(format_digraph(g));
  CHECK(h.n() == g.n());
  CHECK(h.edges() == g.edges());
  CHECK_THROWS(parse_digraph("2 1\n0 2\n"));
  CHECK_THROWS(parse_digraph("garbage"));
  CHECK_THROWS(parse_digraph("2 2\n0 1\n"));  // edge count mismatch
}

TEST_CASE("degree sequences sorted ascending, 1-based accessors") {
  // star out of 0 plus return edge from 3
  Digraph g = Digraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {3, 0}});
  DegreeSequences d = degree_sequences(g);
  CHECK(d.n() == 4);
  CHECK(d.out(1) == 0);
  CHECK(d.out(3) == 1);
  CHECK(d.out(4) == 3);
  CHECK(d.in(1) == 1);
  CHECK(d.in(4) == 1);
  CHECK(std::is_sorted(d.out_sorted.begin(), d.out_sorted.end()));
  CHECK(std::is_sorted(d.in_sorted.begin(), d.in_sorted.end()));
  CHECK(min_semi_degree(g) == 0);
}

TEST_CASE("strong connectivity matches the relaxation oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + (int)(rng() % 7);
    Digraph g = random_digraph(n, Frac{1 + (int)(rng() % 3), 4}, rng());
    CHECK(is_strongly_connected(g) == oracle::strongly_connected(g));
  }
  CHECK(is_strongly_connected(Digraph::from_edges(1, {})));
  CHECK_FALSE(is_strongly_connected(Digraph::from_edges(2, {{0, 1}})));
}

TEST_CASE("reverse swaps degree roles") {
  Digraph g = random_digraph(8, Frac{2, 5}, 3);
  Digraph r = reverse(g);
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v)
      if (u != v) CHECK(g.has_edge(u, v) == r.has_edge(v, u));
  DegreeSequences dg = degree_sequences(g), dr = degree_sequences(r);
  CHECK(dg.out_sorted == dr.in_sorted);
  CHECK(dg.in_sorted == dr.out_sorted);
}

TEST_CASE("neighbourhood unions") {
  Digraph g = Digraph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {4, 0}});
  Bits s(5);
  s.set(0);
  s.set(1);
  Bits nb = out_neighbourhood(g, s);
  CHECK(nb.test(1));
  CHECK(nb.test(2));
  CHECK_FALSE(nb.test(0));
  CHECK_FALSE(nb.test(4));
  Bits ib = in_neighbourhood(g, s);
  CHECK(ib.test(4));
  CHECK_FALSE(ib.test(3));
}

TEST_CASE("dominates is a partial order on sorted lists") {
  std::vector<long long> a{1, 2, 3}, b{1, 3, 3}, c{2, 3, 4};
  CHECK(dominates(a, a));
  CHECK(dominates(a, b));
  CHECK(dominates(b, c));
  CHECK(dominates(a, c));  // transitivity instance
  CHECK_FALSE(dominates(b, a));
  CHECK_FALSE(dominates(c, a));
  CHECK_THROWS(dominates({1}, {1, 2}));
}

TEST_CASE("remove_vertex and induced keep labels consistent") {
  Digraph g = random_digraph(7, Frac{1, 2}, 19);
  VertexRemoval rem = remove_vertex(g, 3);
  CHECK(rem.graph.n() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (a != b)
        CHECK(rem.graph.has_edge(a, b) ==
              g.has_edge(rem.old_of_new[a], rem.old_of_new[b]));
  Bits s(7);
  s.set(1);
  s.set(4);
  s.set(6);
  VertexRemoval ind = induced(g, s);
  CHECK(ind.graph.n() == 3);
  CHECK(ind.old_of_new == std::vector<int>{1, 4, 6});
}

TEST_CASE("cycle validation and normalization") {
  Digraph c4 = Digraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CycleWitness w{{2, 3, 0, 1}};
  CHECK(validate_cycle(c4, w));
  CycleWitness norm = normalize_cycle(w);
  CHECK(norm.vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(validate_cycle(c4, norm));
  CHECK_FALSE(validate_cycle(c4, CycleWitness{{0, 2, 1, 3}}));
  CHECK_FALSE(validate_cycle(c4, CycleWitness{{0, 1, 2}}));   // no 2->0 edge
  CHECK_FALSE(validate_cycle(c4, CycleWitness{{0, 1, 1, 2}}));
  CHECK_FALSE(validate_cycle(c4, CycleWitness{{0}}));
}

TEST_CASE("is_oriented") {
  CHECK(is_oriented(Digraph::from_edges(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(is_oriented(Digraph::from_edges(3, {{0, 1}, {1, 0}})));
}
