#include "hamdeg/expansion.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hamdeg {

void RobustParams::validate() const {
  if (!(Frac(0) < nu) || !(nu <= tau) || !(tau < Frac(1)))
    throw std::invalid_argument("expansion parameters must satisfy 0 < nu <= tau < 1");
}

const char* expand_mode_name(ExpandMode m) {
  return m == ExpandMode::Exhaustive ? "exhaustive" : "sampled";
}

const char* degree_expansion_outcome_name(DegreeExpansionOutcome o) {
  switch (o) {
    case DegreeExpansionOutcome::HypothesisFalse: return "hypothesis-false";
    case DegreeExpansionOutcome::Verified: return "verified";
    case DegreeExpansionOutcome::SmallNException: return "small-n-exception";
  }
  return "?";
}

Bits robust_out_neighbourhood(const Digraph& g, const Bits& s, const Frac& nu) {
  if (!(Frac(0) < nu) || !(nu <= Frac(1)))
    throw std::invalid_argument("robust_out_neighbourhood: need 0 < nu <= 1");
  int n = g.n();
  long long thr = nu.ceil_mul(n);  // count >= nu*n  <=>  count >= ceil(nu*n)
  Bits rn(n);
  for (int x = 0; x < n; ++x)
    if ((long long)g.in(x).count_and(s) >= thr) rn.set(x);
  return rn;
}

namespace {

// Size window: the k with tau*n < k < (1-tau)*n, strict on exact rationals.
std::vector<char> window_sizes(int n, const Frac& tau) {
  std::vector<char> ok(n + 1, 0);
  Frac lo = tau * Frac(n);
  Frac hi = (Frac(1) - tau) * Frac(n);
  for (int k = 0; k <= n; ++k)
    ok[k] = lo < Frac(k) && Frac(k) < hi;
  return ok;
}

struct MaskAdjacency {
  int n;
  long long rn_threshold;  // ceil(nu*n)
  std::vector<uint32_t> in_mask, out_mask;

  MaskAdjacency(const Digraph& g, const Frac& nu) : n(g.n()) {
    rn_threshold = nu.ceil_mul(n);
    in_mask.assign(n, 0);
    out_mask.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      g.in(v).for_each([&](int u) { in_mask[v] |= 1u << u; });
      g.out(v).for_each([&](int u) { out_mask[v] |= 1u << u; });
    }
  }

  int robust_size(uint32_t s) const {
    int c = 0;
    for (int x = 0; x < n; ++x)
      if (std::popcount(in_mask[x] & s) >= rn_threshold) ++c;
    return c;
  }

  int plain_size(uint32_t s) const {
    uint32_t nb = 0;
    uint32_t rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      nb |= out_mask[v];
    }
    return std::popcount(nb);
  }
};

std::vector<int> mask_to_set(uint32_t s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

ExpansionVerdict exhaustive_scan(const Digraph& g, const RobustParams& p,
                                 bool robust) {
  int n = g.n();
  if (n > kExhaustiveExpansionCap)
    throw std::invalid_argument(
        "exhaustive expansion check limited to n <= 20; use sampled mode");
  ExpansionVerdict v;
  v.mode = ExpandMode::Exhaustive;
  std::vector<char> ok = window_sizes(n, p.tau);
  // required: |neighbourhood| >= k + nu*n, i.e. >= ceil(k + nu*n) exactly
  std::vector<long long> need(n + 1, 0);
  for (int k = 0; k <= n; ++k)
    need[k] = (Frac(k) + p.nu * Frac(n)).ceil_mul(1);
  MaskAdjacency adj(g, p.nu);
  uint32_t limit_mask = n == 32 ? ~0u : (1u << n) - 1;
  for (uint32_t s = 1; s <= limit_mask; ++s) {
    int k = std::popcount(s);
    if (!ok[k]) continue;
    ++v.sets_checked;
    int sz = robust ? adj.robust_size(s) : adj.plain_size(s);
    if (sz < need[k]) {
      v.is_expander = false;
      v.violator = ExpansionViolator{mask_to_set(s), sz};
      return v;
    }
  }
  v.is_expander = true;
  return v;
}

// Sampled falsification: random window-sized sets, forward-closure candidates,
// and a short greedy descent on |neighbourhood(S)| - |S|.
ExpansionVerdict sampled_scan(const Digraph& g, const RobustParams& p,
                              bool robust, long long trials, uint64_t seed) {
  int n = g.n();
  ExpansionVerdict v;
  v.mode = ExpandMode::Sampled;
  v.seed = seed;
  v.trials = trials;
  std::vector<char> ok = window_sizes(n, p.tau);
  std::vector<int> sizes;
  for (int k = 1; k <= n; ++k)
    if (ok[k]) sizes.push_back(k);
  if (sizes.empty()) {
    v.is_expander = true;  // empty window: condition vacuous
    return v;
  }
  std::vector<long long> need(n + 1, 0);
  for (int k = 0; k <= n; ++k)
    need[k] = (Frac(k) + p.nu * Frac(n)).ceil_mul(1);

  auto nb_size = [&](const Bits& s) -> int {
    if (robust) return robust_out_neighbourhood(g, s, p.nu).count();
    return out_neighbourhood(g, s).count();
  };
  auto check = [&](const Bits& s) -> bool {  // true when a violation is found
    int k = s.count();
    if (k > n || !ok[k]) return false;
    ++v.sets_checked;
    int sz = nb_size(s);
    if (sz < need[k]) {
      v.is_expander = false;
      v.violator = ExpansionViolator{s.to_vector(), sz};
      return true;
    }
    return false;
  };

  // Forward closures: N+(S) ⊆ S forces |N+(S)| <= |S|, so any closure whose
  // size lands in the window is a strong candidate.
  for (int start = 0; start < n; ++start) {
    Bits r(n);
    r.set(start);
    while (true) {
      if (check(r)) return v;
      Bits next = out_neighbourhood(g, r);
      next |= r;
      if (next == r) break;
      r = next;
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (long long t = 0; t < trials; ++t) {
    int k = sizes[rng() % sizes.size()];
    std::shuffle(perm.begin(), perm.end(), rng);
    Bits s(n);
    for (int i = 0; i < k; ++i) s.set(perm[i]);
    if (check(s)) return v;
    // Greedy descent: single swaps that shrink the neighbourhood.
    int cur = nb_size(s);
    for (int step = 0; step < 2 * n; ++step) {
      int out_v = perm[rng() % k];
      int in_v = perm[k + rng() % (n - k)];
      if (!s.test(out_v) || s.test(in_v)) continue;
      Bits cand = s;
      cand.reset(out_v);
      cand.set(in_v);
      int csz = nb_size(cand);
      ++v.sets_checked;
      if (csz < need[k]) {
        v.is_expander = false;
        v.violator = ExpansionViolator{cand.to_vector(), csz};
        return v;
      }
      if (csz < cur) {
        s = cand;
        cur = csz;
        std::swap(*std::find(perm.begin(), perm.begin() + k, out_v),
                  *std::find(perm.begin() + k, perm.end(), in_v));
      }
    }
  }
  v.is_expander = true;
  return v;
}

}  // namespace

ExpansionVerdict is_robust_outexpander(const Digraph& g, const RobustParams& p,
                                       ExpandMode mode, long long trials,
                                       uint64_t seed) {
  p.validate();
  return mode == ExpandMode::Exhaustive ? exhaustive_scan(g, p, true)
                                        : sampled_scan(g, p, true, trials, seed);
}

ExpansionVerdict is_outexpander(const Digraph& g, const RobustParams& p,
                                ExpandMode mode, long long trials,
                                uint64_t seed) {
  p.validate();
  return mode == ExpandMode::Exhaustive ? exhaustive_scan(g, p, false)
                                        : sampled_scan(g, p, false, trials, seed);
}

DegreeExpansionReport verify_expansion_from_degrees(const Digraph& g,
                                                    const Frac& eta,
                                                    const Frac& tau) {
  if (!(Frac(0) < tau) || !(tau < Frac(1)))
    throw std::invalid_argument("verify_expansion_from_degrees: need 0 < tau < 1");
  DegreeExpansionReport rep;
  rep.hypothesis = approx_nw(g, eta);
  if (!rep.hypothesis.holds) {
    rep.outcome = DegreeExpansionOutcome::HypothesisFalse;
    return rep;
  }
  int n = g.n();
  rep.min_semidegree = min_semi_degree(g);
  rep.semidegree_ok = Frac(rep.min_semidegree) >= eta * Frac(n);
  RobustParams p{tau * tau, tau};
  rep.expansion = is_robust_outexpander(g, p, ExpandMode::Exhaustive);
  rep.outcome = rep.semidegree_ok && rep.expansion->is_expander
                    ? DegreeExpansionOutcome::Verified
                    : DegreeExpansionOutcome::SmallNException;
  return rep;
}

Digraph random_orientation(const Digraph& g, uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n = g.n();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    g.out(u).for_each([&](int v) {
      if (!g.has_edge(v, u)) {
        edges.emplace_back(u, v);
      } else if (u < v) {
        // 2-cycle: exactly one side survives, a fair coin per pair.
        if (rng() & 1)
          edges.emplace_back(u, v);
        else
          edges.emplace_back(v, u);
      }
    });
  return Digraph::from_edges(n, edges);
}

}  // namespace hamdeg
