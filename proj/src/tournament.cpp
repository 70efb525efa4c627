#include "hamdeg/tournament.hpp"

#include "hamdeg/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hamdeg {

const char* removal_kind_name(RemovalStrategy::Kind k) {
  switch (k) {
    case RemovalStrategy::Kind::Random: return "random";
    case RemovalStrategy::Kind::OneVertexOut: return "one-vertex-out";
    case RemovalStrategy::Kind::Split: return "split";
    case RemovalStrategy::Kind::AdversarialGreedy: return "adversarial-greedy";
  }
  return "?";
}

RemovalStrategy::Kind removal_kind_from_name(const std::string& name) {
  if (name == "random") return RemovalStrategy::Kind::Random;
  if (name == "one-vertex-out") return RemovalStrategy::Kind::OneVertexOut;
  if (name == "split") return RemovalStrategy::Kind::Split;
  if (name == "adversarial-greedy") return RemovalStrategy::Kind::AdversarialGreedy;
  throw std::invalid_argument("unknown removal strategy: " + name);
}

bool is_regular_tournament(const Digraph& g) {
  int n = g.n();
  if (n % 2 == 0 || !is_oriented(g)) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && !g.has_edge(v, u)) return false;
  for (int v = 0; v < n; ++v)
    if (g.out_degree(v) != (n - 1) / 2) return false;
  return true;
}

namespace {

Digraph remove_edges(const Digraph& g,
                     const std::vector<std::pair<int, int>>& gone) {
  std::set<std::pair<int, int>> drop(gone.begin(), gone.end());
  std::vector<std::pair<int, int>> kept;
  for (auto& e : g.edges())
    if (!drop.count(e)) kept.push_back(e);
  return Digraph::from_edges(g.n(), kept);
}

long long degree_proxy(const std::vector<int>& outd, const std::vector<int>& ind) {
  long long best = -1;
  for (size_t v = 0; v < outd.size(); ++v) {
    long long s = (long long)outd[v] * ind[v];
    if (best < 0 || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<std::pair<int, int>> select_removal(const Digraph& t, int r,
                                                const RemovalStrategy& strat) {
  int n = t.n();
  if (r < 0 || r > t.edge_count())
    throw std::invalid_argument("select_removal: removal count out of range");
  std::vector<std::pair<int, int>> all = t.edges();
  std::vector<std::pair<int, int>> picked;
  switch (strat.kind) {
    case RemovalStrategy::Kind::Random: {
      std::mt19937_64 rng(strat.seed);
      std::shuffle(all.begin(), all.end(), rng);
      picked.assign(all.begin(), all.begin() + r);
      break;
    }
    case RemovalStrategy::Kind::OneVertexOut: {
      int v = n ? (int)(strat.seed % n) : 0;
      t.out(v).for_each([&](int u) {
        if ((int)picked.size() < r) picked.emplace_back(v, u);
      });
      if ((int)picked.size() < r)
        throw std::invalid_argument("select_removal: vertex has too few out-edges");
      break;
    }
    case RemovalStrategy::Kind::Split: {
      int v1 = n ? (int)(strat.seed % n) : 0;
      int v2 = n ? (int)((strat.seed + 1) % n) : 0;
      if (v2 == v1) v2 = (v1 + 1) % n;
      std::vector<int> o1 = t.out(v1).to_vector(), o2 = t.out(v2).to_vector();
      size_t i1 = 0, i2 = 0;
      while ((int)picked.size() < r) {
        bool first_turn = picked.size() % 2 == 0;
        if (first_turn && i1 < o1.size()) picked.emplace_back(v1, o1[i1++]);
        else if (i2 < o2.size()) picked.emplace_back(v2, o2[i2++]);
        else if (i1 < o1.size()) picked.emplace_back(v1, o1[i1++]);
        else throw std::invalid_argument("select_removal: not enough edges at the two vertices");
      }
      break;
    }
    case RemovalStrategy::Kind::AdversarialGreedy: {
      std::vector<int> outd(n), ind(n);
      for (int v = 0; v < n; ++v) {
        outd[v] = t.out_degree(v);
        ind[v] = t.in_degree(v);
      }
      std::vector<std::pair<int, int>> pool = all;  // sorted lexicographically
      for (int step = 0; step < r; ++step) {
        long long best_score = -1;
        size_t best_idx = 0;
        for (size_t i = 0; i < pool.size(); ++i) {
          auto [u, v] = pool[i];
          --outd[u];
          --ind[v];
          long long s = degree_proxy(outd, ind);
          ++outd[u];
          ++ind[v];
          if (best_score < 0 || s < best_score) {
            best_score = s;
            best_idx = i;
          }
        }
        auto e = pool[best_idx];
        pool.erase(pool.begin() + best_idx);
        --outd[e.first];
        --ind[e.second];
        picked.push_back(e);
      }
      break;
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

MergeResult merge_endpoints(const Digraph& g, int x, int y) {
  int n = g.n();
  if (x == y || x < 0 || y < 0 || x >= n || y >= n)
    throw std::invalid_argument("merge_endpoints: need two distinct vertices");
  if (!g.has_edge(x, y))
    throw std::invalid_argument("merge_endpoints: edge x -> y required");
  std::vector<int> new_of_old(n, -1), old_of_new;
  for (int v = 0; v < n; ++v) {
    if (v == x || v == y) continue;
    new_of_old[v] = (int)old_of_new.size();
    old_of_new.push_back(v);
  }
  int z = (int)old_of_new.size();
  old_of_new.push_back(-1);
  std::vector<std::pair<int, int>> edges;
  for (auto& [u, v] : g.edges()) {
    if (u == x || u == y || v == x || v == y) continue;
    edges.emplace_back(new_of_old[u], new_of_old[v]);
  }
  g.out(y).for_each([&](int v) {
    if (v != x && v != y) edges.emplace_back(z, new_of_old[v]);
  });
  g.in(x).for_each([&](int u) {
    if (u != x && u != y) edges.emplace_back(new_of_old[u], z);
  });
  return MergeResult{Digraph::from_edges(n - 1, edges), std::move(old_of_new),
                     z, x, y};
}

CycleWitness lift_merged_hamilton(const Digraph& g, const MergeResult& m,
                                  const CycleWitness& merged) {
  int np = m.graph.n();
  if (merged.length() != np)
    throw std::invalid_argument("lift_merged_hamilton: cycle must span the merged graph");
  int zpos = -1;
  for (int i = 0; i < np; ++i)
    if (merged.vertices[i] == m.z) zpos = i;
  if (zpos < 0)
    throw std::invalid_argument("lift_merged_hamilton: merge vertex missing from cycle");
  CycleWitness lifted;
  lifted.vertices.push_back(m.x);
  lifted.vertices.push_back(m.y);
  for (int i = 1; i < np; ++i)
    lifted.vertices.push_back(m.old_of_new[merged.vertices[(zpos + i) % np]]);
  lifted = normalize_cycle(std::move(lifted));
  if (!validate_cycle(g, lifted))
    throw std::logic_error("lift_merged_hamilton: lifted walk is not a cycle of g");
  return lifted;
}

ThomassenVerdict thomassen_trial(const Digraph& t, int r,
                                 const RemovalStrategy& strat,
                                 const SolveBudget& budget) {
  if (!is_regular_tournament(t))
    throw std::invalid_argument("thomassen_trial: input must be a regular tournament");
  int n = t.n();
  if (2 * r >= n - 1)
    throw std::invalid_argument("thomassen_trial: need r < (n-1)/2");
  ThomassenVerdict v;
  v.n = n;
  v.r = r;
  v.removed = select_removal(t, r, strat);
  Digraph g = remove_edges(t, v.removed);
  HamiltonResult direct = has_hamilton_cycle(g, budget);
  v.direct = direct.status;
  v.witness = direct.witness;

  // The reduction branch fires when some vertex lost more than half the
  // removal budget, mirroring the low-semidegree case of the argument.
  int trigger = (n - 1) / 2 - r / 2;
  if (min_semi_degree(g) < trigger) {
    int x = 0, best = 1 << 30;
    for (int u = 0; u < n; ++u) {
      int s = std::min(g.out_degree(u), g.in_degree(u));
      if (s < best) {
        best = s;
        x = u;
      }
    }
    bool out_side = g.out_degree(x) <= g.in_degree(x);
    Bits nb = out_side ? g.out(x) : g.in(x);
    if (nb.any()) {
      int y = nb.first();
      MergeResult m = out_side ? merge_endpoints(g, x, y) : merge_endpoints(g, y, x);
      v.merge_ran = true;
      HamiltonResult merged = has_hamilton_cycle(m.graph, budget);
      v.merged_status = merged.status;
      if (merged.status == SolveStatus::Yes) {
        CycleWitness lifted = lift_merged_hamilton(g, m, *merged.witness);
        v.lift_valid = true;
        v.consistent = v.direct == SolveStatus::Yes;
        if (!v.witness) v.witness = lifted;
      }
    }
  }
  return v;
}

EdgeDensityReport keevash_sudakov_check(const Digraph& g, const Frac& c,
                                        long long trials, uint64_t seed) {
  if (!(Frac(0) < c) || !(c < Frac(1, 2)))
    throw std::invalid_argument("keevash_sudakov_check: need 0 < c < 1/2");
  int n = g.n();
  EdgeDensityReport rep;
  rep.oriented = is_oriented(g);
  rep.c_out_of_range = c >= Frac(1, 10000);
  Frac bound = (Frac(1, 2) - c) * Frac(n);
  rep.min_semidegree_below = Frac(min_semi_degree(g)) < bound;
  rep.hypothesis_met = rep.oriented && !rep.c_out_of_range && !rep.min_semidegree_below;
  int m0 = (int)(Frac(1, 2) - c).ceil_mul(n);
  m0 = std::max(1, std::min(m0, n));
  rep.set_size = m0;

  auto edges_between = [&](const Bits& s, const Bits& t) -> long long {
    long long total = 0;
    s.for_each([&](int u) { total += g.out(u).count_and(t); });
    return total;
  };

  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long best = -1;
  Bits best_s(n), best_t(n);

  auto consider = [&](const Bits& s, const Bits& t) {
    ++rep.pairs_checked;
    long long e = edges_between(s, t);
    if (best < 0 || e < best) {
      best = e;
      best_s = s;
      best_t = t;
    }
    return e;
  };

  auto descend = [&](Bits& s, const Bits& t, long long cur) -> long long {
    // Best single swap in s, repeated to a local minimum.
    bool improved = true;
    while (improved) {
      improved = false;
      long long best_swap = cur;
      int take = -1, put = -1;
      for (int out_v = 0; out_v < n; ++out_v) {
        if (!s.test(out_v)) continue;
        for (int in_v = 0; in_v < n; ++in_v) {
          if (s.test(in_v)) continue;
          Bits cand = s;
          cand.reset(out_v);
          cand.set(in_v);
          long long e = consider(cand, t);
          if (e < best_swap) {
            best_swap = e;
            take = out_v;
            put = in_v;
          }
        }
      }
      if (take >= 0) {
        s.reset(take);
        s.set(put);
        cur = best_swap;
        improved = true;
      }
    }
    return cur;
  };

  for (long long trial = 0; trial < std::max<long long>(trials, 1); ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Bits s(n);
    for (int i = 0; i < m0; ++i) s.set(perm[i]);
    std::shuffle(perm.begin(), perm.end(), rng);
    Bits t(n);
    for (int i = 0; i < m0; ++i) t.set(perm[i]);
    long long cur = consider(s, t);
    cur = descend(s, t, cur);
    // then the target side, holding the refined source side fixed
    Bits t2 = t;
    bool improved = true;
    while (improved) {
      improved = false;
      long long best_swap = cur;
      int take = -1, put = -1;
      for (int out_v = 0; out_v < n; ++out_v) {
        if (!t2.test(out_v)) continue;
        for (int in_v = 0; in_v < n; ++in_v) {
          if (t2.test(in_v)) continue;
          Bits cand = t2;
          cand.reset(out_v);
          cand.set(in_v);
          long long e = consider(s, cand);
          if (e < best_swap) {
            best_swap = e;
            take = out_v;
            put = in_v;
          }
        }
      }
      if (take >= 0) {
        t2.reset(take);
        t2.set(put);
        cur = best_swap;
        improved = true;
      }
    }
  }
  rep.min_edges_found = best < 0 ? 0 : best;
  rep.argmin_s = best_s.to_vector();
  rep.argmin_t = best_t.to_vector();
  rep.passes = rep.min_edges_found * 60 >= (long long)n * n;
  return rep;
}

std::vector<TourneyRow> tourney_sweep(const std::vector<int>& ns,
                                      const std::vector<RemovalStrategy::Kind>& kinds,
                                      int seeds,
                                      const SolveBudget& budget) {
  std::vector<TourneyRow> rows;
  for (int n : ns) {
    Digraph t = regular_tournament(n);
    for (auto kind : kinds)
      for (int r = 0; 2 * r <= n - 3; ++r)
        for (int seed = 0; seed < seeds; ++seed) {
          auto start = std::chrono::steady_clock::now();
          ThomassenVerdict v =
              thomassen_trial(t, r, RemovalStrategy{kind, (uint64_t)seed}, budget);
          auto stop = std::chrono::steady_clock::now();
          TourneyRow row;
          row.n = n;
          row.strategy = removal_kind_name(kind);
          row.r = r;
          row.seed = (uint64_t)seed;
          row.hamiltonian = v.direct == SolveStatus::Yes;
          row.runtime_ms =
              std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                  .count();
          rows.push_back(std::move(row));
        }
  }
  return rows;
}

std::string tourney_csv(const std::vector<TourneyRow>& rows) {
  std::ostringstream out;
  out << "n,strategy,r,seed,hamiltonian,runtime_ms\n";
  for (auto& r : rows)
    out << r.n << ',' << r.strategy << ',' << r.r << ',' << r.seed << ','
        << (r.hamiltonian ? 1 : 0) << ',' << r.runtime_ms << '\n';
  return out.str();
}

}  // namespace hamdeg
