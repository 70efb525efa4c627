#include "hamdeg/solver.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace hamdeg {

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Yes: return "yes";
    case SolveStatus::No: return "no";
    case SolveStatus::Unknown: return "unknown";
  }
  return "?";
}

namespace {

constexpr int kHardDpCap = 24;     // 2^24 * 4 bytes of DP table at most
constexpr int kBacktrackCap = 64;  // single-word adjacency masks

int effective_dp_cap(const SolveBudget& b) {
  return std::min(b.max_n_dp, kHardDpCap);
}

struct MaskGraph {
  int n = 0;
  uint64_t full = 0;
  std::vector<uint64_t> out, in;

  explicit MaskGraph(const Digraph& g) : n(g.n()) {
    if (n > kBacktrackCap)
      throw std::invalid_argument("exact search limited to 64 vertices");
    full = n == 64 ? ~0ull : (1ull << n) - 1;
    out.assign(n, 0);
    in.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      g.out(v).for_each([&](int u) { out[v] |= 1ull << u; });
      g.in(v).for_each([&](int u) { in[v] |= 1ull << u; });
    }
  }
};

// Subset DP over the suffix universe {s..n-1}, local bit i = vertex s+i.
// dp[mask] = bitmask of endpoints v reachable by a simple path that starts
// at s, visits exactly mask, and ends at v.
struct SuffixDP {
  int s = 0, m = 0;
  std::vector<uint32_t> out_local, in_local;
  std::vector<uint32_t> dp;

  void build_adjacency(const Digraph& g, int start) {
    s = start;
    m = g.n() - s;
    out_local.assign(m, 0);
    in_local.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      g.out(s + i).for_each([&](int v) {
        if (v >= s) out_local[i] |= 1u << (v - s);
      });
      g.in(s + i).for_each([&](int v) {
        if (v >= s) in_local[i] |= 1u << (v - s);
      });
    }
  }

  // max_size bounds the path length in vertices; pass m for no bound.
  void run(int max_size) {
    dp.assign((size_t)1 << m, 0);
    dp[1] = 1;
    size_t size = (size_t)1 << m;
    for (size_t mask = 1; mask < size; mask += 2) {
      uint32_t ends = dp[mask];
      if (!ends) continue;
      if (std::popcount((uint32_t)mask) >= max_size) continue;
      uint32_t e = ends;
      while (e) {
        int v = std::countr_zero(e);
        e &= e - 1;
        uint32_t ext = out_local[v] & ~(uint32_t)mask;
        while (ext) {
          int u = std::countr_zero(ext);
          ext &= ext - 1;
          dp[mask | (1u << u)] |= 1u << u;
        }
      }
    }
  }

  // Path s -> ... -> (s + end_local) covering mask, returned in global ids.
  std::vector<int> reconstruct(uint32_t mask, int end_local) const {
    std::vector<int> rev;
    int cur = end_local;
    uint32_t rem = mask;
    while (true) {
      rev.push_back(s + cur);
      rem &= ~(1u << cur);
      if (rem == 0) break;
      uint32_t preds = dp[rem] & in_local[cur];
      assert(preds);
      cur = std::countr_zero(preds);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }
};

// Pruned DFS for Hamilton cycles anchored at vertex 0. Deterministic order.
struct HamBacktracker {
  const MaskGraph& g;
  int n;
  long long budget;
  long long nodes = 0;
  bool out_of_budget = false;
  uint64_t visited = 0;
  std::vector<int> path;
  std::optional<CycleWitness> found;

  HamBacktracker(const MaskGraph& gg, long long budget_)
      : g(gg), n(gg.n), budget(budget_) {
    path.reserve(n);
  }

  bool feasible(int cur) {
    uint64_t unvisited = g.full & ~visited;
    uint64_t allowed = unvisited | 1ull;  // remainder may only touch these
    // Everything still to visit, and the anchor, must be reachable from cur
    // inside the remainder.
    uint64_t reach = g.out[cur] & allowed;
    uint64_t frontier = reach;
    while (frontier) {
      uint64_t next = 0;
      uint64_t f = frontier & ~1ull;  // paths never pass through the anchor
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.out[v];
      }
      frontier = next & allowed & ~reach;
      reach |= frontier;
    }
    if (unvisited & ~reach) return false;
    if (!(reach & 1ull)) return false;
    // Local degree feasibility in the remainder. At most one vertex may be
    // forced to close at the anchor, at most one forced to follow cur.
    int only_to_anchor = 0, only_from_cur = 0;
    uint64_t rest = unvisited;
    while (rest) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      uint64_t oc = g.out[u] & allowed;
      if (!oc) return false;
      if (oc == 1ull && ++only_to_anchor > 1) return false;
      uint64_t ic = g.in[u] & (unvisited | (1ull << cur));
      if (!ic) return false;
      if (ic == (1ull << cur) && ++only_from_cur > 1) return false;
    }
    return true;
  }

  bool dfs(int cur) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if ((int)path.size() == n) {
      if (g.out[cur] & 1ull) {
        found = CycleWitness{path};
        return true;
      }
      return false;
    }
    if (!feasible(cur)) return false;
    uint64_t cand = g.out[cur] & ~visited & ~1ull;
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      visited |= 1ull << u;
      path.push_back(u);
      if (dfs(u)) return true;
      path.pop_back();
      visited &= ~(1ull << u);
      if (out_of_budget) return false;
    }
    return false;
  }

  void run() {
    visited = 1;
    path.push_back(0);
    dfs(0);
  }
};

HamiltonResult ham_dp(const Digraph& g) {
  SuffixDP dp;
  dp.build_adjacency(g, 0);
  dp.run(dp.m);
  uint32_t full = (uint32_t)(((uint64_t)1 << dp.m) - 1);
  uint32_t closers = dp.dp[full] & dp.in_local[0];
  if (!closers)
    return HamiltonResult{SolveStatus::No, std::nullopt, 0, "subset-dp"};
  int v = std::countr_zero(closers);
  CycleWitness w{dp.reconstruct(full, v)};
  return HamiltonResult{SolveStatus::Yes, normalize_cycle(std::move(w)), 0,
                        "subset-dp"};
}

}  // namespace

HamiltonResult has_hamilton_cycle(const Digraph& g, const SolveBudget& b) {
  int n = g.n();
  if (n < 2) return HamiltonResult{SolveStatus::No, std::nullopt, 0, "trivial"};
  MaskGraph mg(g);
  if (n <= effective_dp_cap(b)) {
    // Witness-first probe: cheap on dense Hamiltonian instances, then the DP
    // settles the rest definitively.
    HamBacktracker probe(mg, 2000 + 50LL * n);
    probe.run();
    if (probe.found) {
      CycleWitness w = normalize_cycle(std::move(*probe.found));
      assert(validate_cycle(g, w));
      return HamiltonResult{SolveStatus::Yes, std::move(w), probe.nodes,
                            "backtracking"};
    }
    if (!probe.out_of_budget)
      return HamiltonResult{SolveStatus::No, std::nullopt, probe.nodes,
                            "backtracking"};
    HamiltonResult r = ham_dp(g);
    if (r.witness) assert(validate_cycle(g, *r.witness));
    return r;
  }
  HamBacktracker bt(mg, b.node_budget);
  bt.run();
  if (bt.found) {
    CycleWitness w = normalize_cycle(std::move(*bt.found));
    assert(validate_cycle(g, w));
    return HamiltonResult{SolveStatus::Yes, std::move(w), bt.nodes, "backtracking"};
  }
  if (bt.out_of_budget)
    return HamiltonResult{SolveStatus::Unknown, std::nullopt, bt.nodes,
                          "backtracking"};
  return HamiltonResult{SolveStatus::No, std::nullopt, bt.nodes, "backtracking"};
}

namespace {

// Budgeted DFS for a cycle on exactly t vertices whose minimum vertex is s.
struct FixedLenBacktracker {
  const MaskGraph& g;
  int n, s, t;
  long long& nodes;
  long long budget;
  bool out_of_budget = false;
  std::vector<int> dist_to_s;  // within {v >= s}
  uint64_t visited = 0;
  std::vector<int> path;
  std::optional<CycleWitness> found;

  FixedLenBacktracker(const MaskGraph& gg, int start, int len,
                      long long& node_ctr, long long budget_)
      : g(gg), n(gg.n), s(start), t(len), nodes(node_ctr), budget(budget_) {
    dist_to_s.assign(n, -1);
    std::queue<int> q;
    dist_to_s[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      uint64_t preds = g.in[v];
      while (preds) {
        int u = std::countr_zero(preds);
        preds &= preds - 1;
        if (u >= s && dist_to_s[u] < 0) {
          dist_to_s[u] = dist_to_s[v] + 1;
          q.push(u);
        }
      }
    }
  }

  bool dfs(int cur, int depth) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (depth == t) {
      if (g.out[cur] >> s & 1) {
        found = CycleWitness{path};
        return true;
      }
      return false;
    }
    uint64_t cand = g.out[cur] & ~visited;
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      if (u <= s) continue;
      // After taking u we have depth+1 vertices and t-depth edges left to
      // spend, the closing edge included; dist is a lower bound on that.
      if (dist_to_s[u] < 0 || dist_to_s[u] > t - depth) continue;
      visited |= 1ull << u;
      path.push_back(u);
      if (dfs(u, depth + 1)) return true;
      path.pop_back();
      visited &= ~(1ull << u);
      if (out_of_budget) return false;
    }
    return false;
  }

  void run() {
    visited = 1ull << s;
    path.push_back(s);
    dfs(s, 1);
  }
};

}  // namespace

HamiltonResult cycle_of_length(const Digraph& g, int t, const SolveBudget& b) {
  int n = g.n();
  if (t < 2 || t > n)
    throw std::invalid_argument("cycle_of_length: t must satisfy 2 <= t <= n");
  if (n <= effective_dp_cap(b)) {
    for (int s = 0; s + t <= n; ++s) {
      SuffixDP dp;
      dp.build_adjacency(g, s);
      dp.run(t);
      size_t size = (size_t)1 << dp.m;
      for (size_t mask = 1; mask < size; mask += 2) {
        if (std::popcount((uint32_t)mask) != t) continue;
        uint32_t closers = dp.dp[mask] & dp.in_local[0];
        if (!closers) continue;
        int v = std::countr_zero(closers);
        CycleWitness w{dp.reconstruct((uint32_t)mask, v)};
        w = normalize_cycle(std::move(w));
        assert(validate_cycle(g, w));
        return HamiltonResult{SolveStatus::Yes, std::move(w), 0, "subset-dp"};
      }
    }
    return HamiltonResult{SolveStatus::No, std::nullopt, 0, "subset-dp"};
  }
  MaskGraph mg(g);
  long long nodes = 0;
  for (int s = 0; s + t <= n; ++s) {
    FixedLenBacktracker bt(mg, s, t, nodes, b.node_budget);
    bt.run();
    if (bt.found) {
      CycleWitness w = normalize_cycle(std::move(*bt.found));
      assert(validate_cycle(g, w));
      return HamiltonResult{SolveStatus::Yes, std::move(w), nodes, "backtracking"};
    }
    if (bt.out_of_budget)
      return HamiltonResult{SolveStatus::Unknown, std::nullopt, nodes,
                            "backtracking"};
  }
  return HamiltonResult{SolveStatus::No, std::nullopt, nodes, "backtracking"};
}

namespace {

struct CycleEnumeration {
  std::vector<LengthStatus> lengths;  // index 0 -> length 2
  std::vector<uint64_t> coverage;     // coverage[t] = vertices on some t-cycle
  bool exact = false;
};

// Exhaustive enumeration of achievable cycle lengths (and which vertices
// realize them): one suffix-DP pass per minimum vertex. Total table work
// across passes is 2^(n+1) entries.
CycleEnumeration enumerate_cycles_exact(const Digraph& g) {
  int n = g.n();
  CycleEnumeration r;
  r.exact = true;
  r.lengths.resize(std::max(0, n - 1));
  for (int t = 2; t <= n; ++t)
    r.lengths[t - 2] = LengthStatus{t, SolveStatus::No, std::nullopt};
  r.coverage.assign(n + 1, 0);
  for (int s = 0; s + 2 <= n; ++s) {
    SuffixDP dp;
    dp.build_adjacency(g, s);
    dp.run(dp.m);
    size_t size = (size_t)1 << dp.m;
    for (size_t mask = 1; mask < size; mask += 2) {
      uint32_t closers = dp.dp[mask] & dp.in_local[0];
      if (!closers) continue;
      int t = std::popcount((uint32_t)mask);
      if (t < 2) continue;
      r.coverage[t] |= (uint64_t)mask << s;
      auto& slot = r.lengths[t - 2];
      if (slot.status != SolveStatus::Yes) {
        int v = std::countr_zero(closers);
        CycleWitness w{dp.reconstruct((uint32_t)mask, v)};
        slot.status = SolveStatus::Yes;
        slot.witness = normalize_cycle(std::move(w));
        assert(validate_cycle(g, *slot.witness));
      }
    }
  }
  return r;
}

CycleEnumeration enumerate_cycles_budgeted(const Digraph& g, const SolveBudget& b) {
  int n = g.n();
  CycleEnumeration r;
  r.exact = false;
  r.lengths.resize(std::max(0, n - 1));
  r.coverage.assign(n + 1, 0);
  for (int t = 2; t <= n; ++t) {
    HamiltonResult h = t == n ? has_hamilton_cycle(g, b) : cycle_of_length(g, t, b);
    auto& slot = r.lengths[t - 2];
    slot = LengthStatus{t, h.status, h.witness};
    if (h.witness)
      for (int v : h.witness->vertices)
        if (v < 64) r.coverage[t] |= 1ull << v;
  }
  return r;
}

}  // namespace

PancyclicReport is_pancyclic(const Digraph& g, const SolveBudget& b) {
  int n = g.n();
  if (n < 2) throw std::invalid_argument("is_pancyclic: need n >= 2");
  CycleEnumeration e = n <= effective_dp_cap(b) ? enumerate_cycles_exact(g)
                                                : enumerate_cycles_budgeted(g, b);
  PancyclicReport rep;
  rep.lengths = e.lengths;
  rep.pancyclic = true;
  rep.definitive = true;
  for (auto& ls : rep.lengths) {
    if (ls.status != SolveStatus::Yes) rep.pancyclic = false;
    if (ls.status == SolveStatus::Unknown) rep.definitive = false;
    if (ls.status == SolveStatus::No) rep.missing.push_back(ls.length);
  }
  return rep;
}

VertexPancyclicReport is_vertex_pancyclic(const Digraph& g, const SolveBudget& b) {
  int n = g.n();
  if (n < 2) throw std::invalid_argument("is_vertex_pancyclic: need n >= 2");
  bool exact = n <= effective_dp_cap(b);
  CycleEnumeration e =
      exact ? enumerate_cycles_exact(g) : enumerate_cycles_budgeted(g, b);
  VertexPancyclicReport rep;
  rep.lengths = e.lengths;
  rep.covered.assign(n, std::vector<SolveStatus>(std::max(0, n - 1),
                                                 SolveStatus::Unknown));
  rep.vertex_pancyclic = true;
  rep.definitive = exact;
  for (int t = 2; t <= n; ++t)
    for (int v = 0; v < n; ++v) {
      bool on = v < 64 && (e.coverage[t] >> v & 1);
      SolveStatus st = on ? SolveStatus::Yes
                          : (exact ? SolveStatus::No : SolveStatus::Unknown);
      rep.covered[v][t - 2] = st;
      if (st != SolveStatus::Yes) rep.vertex_pancyclic = false;
    }
  return rep;
}

std::optional<CycleWitness> shortest_cycle_through(const Digraph& g, int x) {
  int n = g.n();
  if (x < 0 || x >= n)
    throw std::invalid_argument("shortest_cycle_through: vertex out of range");
  // Reverse BFS from x: dist[v] = length of a shortest v -> x path.
  std::vector<int> dist(n, -1), succ(n, -1);
  dist[x] = 0;
  std::queue<int> q;
  q.push(x);
  while (!q.empty()) {
    int w = q.front();
    q.pop();
    g.in(w).for_each([&](int v) {
      if (dist[v] < 0) {
        dist[v] = dist[w] + 1;
        succ[v] = w;
        q.push(v);
      }
    });
  }
  int best = -1, best_u = -1;
  g.out(x).for_each([&](int u) {
    if (dist[u] < 0) return;
    int len = 1 + dist[u];
    if (best < 0 || len < best) {
      best = len;
      best_u = u;
    }
  });
  if (best < 0) return std::nullopt;
  CycleWitness w;
  w.vertices.push_back(x);
  for (int v = best_u; v != x; v = succ[v]) w.vertices.push_back(v);
  assert(validate_cycle(g, w));
  return normalize_cycle(std::move(w));
}

OneFactorResult has_one_factor(const Digraph& g) {
  int n = g.n();
  std::vector<int> ml(n, -1), mr(n, -1);
  for (int u = 0; u < n; ++u) {
    bool matched = false;
    g.out(u).for_each([&](int v) {
      if (matched || mr[v] >= 0) return;
      ml[u] = v;
      mr[v] = u;
      matched = true;
    });
  }
  std::vector<int> seen(n, -1);
  std::function<bool(int, int)> augment = [&](int u, int stamp) -> bool {
    bool ok = false;
    g.out(u).for_each([&](int v) {
      if (ok || seen[v] == stamp) return;
      seen[v] = stamp;
      if (mr[v] < 0 || augment(mr[v], stamp)) {
        ml[u] = v;
        mr[v] = u;
        ok = true;
      }
    });
    return ok;
  };
  int stamp = 0;
  for (int u = 0; u < n; ++u)
    if (ml[u] < 0) augment(u, stamp++);
  bool perfect = true;
  for (int u = 0; u < n; ++u)
    if (ml[u] < 0) perfect = false;
  OneFactorResult res;
  res.has_one_factor = perfect;
  if (perfect) {
    res.successor = ml;
    return res;
  }
  // Hall violator: out-copies reachable from unmatched out-copies by
  // alternating paths; their joint image is smaller than the set itself.
  Bits in_s(n), rights(n);
  std::queue<int> q;
  for (int u = 0; u < n; ++u)
    if (ml[u] < 0) {
      in_s.set(u);
      q.push(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    g.out(u).for_each([&](int v) {
      if (rights.test(v)) return;
      rights.set(v);
      int w = mr[v];
      if (w >= 0 && !in_s.test(w)) {
        in_s.set(w);
        q.push(w);
      }
    });
  }
  res.hall_violator = in_s.to_vector();
  res.violator_neighbourhood = rights.count();
  return res;
}

std::optional<int> high_total_degree_vertex(const Digraph& g) {
  int best = -1, best_total = -1;
  for (int v = 0; v < g.n(); ++v) {
    int total = g.out_degree(v) + g.in_degree(v);
    if (total > best_total) {
      best_total = total;
      best = v;
    }
  }
  if (best >= 0 && best_total >= g.n()) return best;
  return std::nullopt;
}

CycleWitness rotation_cycle_through(const Digraph& g, int x, int t,
                                    const CycleWitness& ham) {
  int n = g.n();
  if (x < 0 || x >= n)
    throw std::invalid_argument("rotation_cycle_through: vertex out of range");
  if (t < 2 || t > n)
    throw std::invalid_argument("rotation_cycle_through: t must satisfy 2 <= t <= n");
  if (g.out_degree(x) + g.in_degree(x) < n)
    throw std::invalid_argument(
        "rotation_cycle_through: requires d+(x) + d-(x) >= n");
  int np = n - 1;
  if (ham.length() != np)
    throw std::invalid_argument("rotation_cycle_through: ham must cover G - x");
  Bits seen(n);
  for (int v : ham.vertices) {
    if (v == x || v < 0 || v >= n || seen.test(v))
      throw std::invalid_argument(
          "rotation_cycle_through: ham is not a cycle of G - x");
    seen.set(v);
  }
  for (int i = 0; i < np; ++i)
    if (!g.has_edge(ham.vertices[i], ham.vertices[(i + 1) % np]))
      throw std::invalid_argument(
          "rotation_cycle_through: ham is not a cycle of G - x");
  // d+(x) + d-(x) >= n = np + 1 out/in slots spread over np cycle positions:
  // some position i has ham[i] an out-neighbour and ham[i+t-2] an
  // in-neighbour of x, by pigeonhole over the shifted pairing.
  for (int i = 0; i < np; ++i) {
    int a = ham.vertices[i];
    int z = ham.vertices[(i + t - 2) % np];
    if (g.has_edge(x, a) && g.has_edge(z, x)) {
      CycleWitness w;
      w.vertices.push_back(x);
      for (int j = 0; j < t - 1; ++j)
        w.vertices.push_back(ham.vertices[(i + j) % np]);
      w = normalize_cycle(std::move(w));
      assert(validate_cycle(g, w));
      return w;
    }
  }
  throw std::logic_error(
      "rotation_cycle_through: no rotation index despite degree precondition");
}

}  // namespace hamdeg
