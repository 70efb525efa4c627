#pragma once

// Slow reference implementations the fast library code is checked against.
// Everything here recomputes from first principles: permutation scans and
// integer-cross-multiplied thresholds, no shared helpers with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hamdeg/digraph.hpp"
#include "hamdeg/rational.hpp"

namespace oracle {

// Hamiltonicity by scanning all (n-1)! cyclic orders. n <= 8 only.
inline bool hamilton(const hamdeg::Digraph& g) {
  int n = g.n();
  if (n < 2) return false;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = g.has_edge(0, perm[0]) && g.has_edge(perm[n - 2], 0);
    for (int i = 0; ok && i + 1 < n - 1; ++i)
      ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace detail {
struct TupleScan {
  const hamdeg::Digraph& g;
  std::vector<int>& tup;
  std::vector<bool>& used;
  int t;
  bool run(int depth) {
    if (depth == t) return g.has_edge(tup[t - 1], tup[0]);
    for (int v = tup[0] + 1; v < g.n(); ++v) {
      if (used[v] || !g.has_edge(tup[depth - 1], v)) continue;
      used[v] = true;
      tup[depth] = v;
      if (run(depth + 1)) return true;
      used[v] = false;
    }
    return false;
  }
};
}  // namespace detail

// Cycle of exact length t by scanning ordered tuples with minimum vertex
// first. n <= 8.
inline bool cycle_of_length(const hamdeg::Digraph& g, int t) {
  int n = g.n();
  if (t < 2 || t > n) return false;
  std::vector<int> tup(t);
  std::vector<bool> used(n, false);
  for (int s = 0; s + t <= n; ++s) {
    std::fill(used.begin(), used.end(), false);
    tup[0] = s;
    used[s] = true;
    detail::TupleScan scan{g, tup, used, t};
    if (scan.run(1)) return true;
  }
  return false;
}

// 1-factor by scanning all successor permutations. n <= 7.
inline bool one_factor(const hamdeg::Digraph& g) {
  int n = g.n();
  std::vector<int> succ(n);
  std::iota(succ.begin(), succ.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; ok && v < n; ++v) ok = g.has_edge(v, succ[v]);
    if (ok) return true;
  } while (std::next_permutation(succ.begin(), succ.end()));
  return false;
}

// k > tau*n by cross-multiplication
inline bool above_window_floor(int k, hamdeg::Frac tau, int n) {
  return (long long)k * tau.den > (long long)tau.num * n;
}
// k < (1-tau)*n  <=>  k*den < (den-num)*n
inline bool below_window_ceiling(int k, hamdeg::Frac tau, int n) {
  return (long long)k * tau.den < (long long)(tau.den - tau.num) * n;
}

// Robust outexpansion straight from the definition, subsets as uint32 masks,
// thresholds by integer cross-multiplication. n <= 16 or so.
inline bool robust_outexpander(const hamdeg::Digraph& g, hamdeg::Frac nu,
                               hamdeg::Frac tau) {
  int n = g.n();
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int k = __builtin_popcount(s);
    if (!above_window_floor(k, tau, n) || !below_window_ceiling(k, tau, n))
      continue;
    int rn = 0;
    for (int x = 0; x < n; ++x) {
      int hits = 0;
      for (int u = 0; u < n; ++u)
        if ((s >> u & 1) && g.has_edge(u, x)) ++hits;
      // hits >= nu*n  <=>  hits*den >= num*n
      if ((long long)hits * nu.den >= (long long)nu.num * n) ++rn;
    }
    // need rn >= k + nu*n  <=>  rn*den >= k*den + num*n
    if ((long long)rn * nu.den < (long long)k * nu.den + (long long)nu.num * n)
      return false;
  }
  return true;
}

// Plain outexpansion: ordinary out-neighbourhood of S in the same window.
inline bool plain_outexpander(const hamdeg::Digraph& g, hamdeg::Frac nu,
                              hamdeg::Frac tau) {
  int n = g.n();
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int k = __builtin_popcount(s);
    if (!above_window_floor(k, tau, n) || !below_window_ceiling(k, tau, n))
      continue;
    int nb = 0;
    for (int x = 0; x < n; ++x) {
      bool hit = false;
      for (int u = 0; u < n && !hit; ++u)
        if ((s >> u & 1) && g.has_edge(u, x)) hit = true;
      if (hit) ++nb;
    }
    if ((long long)nb * nu.den < (long long)k * nu.den + (long long)nu.num * n)
      return false;
  }
  return true;
}

// Strong connectivity by n rounds of edge relaxation from vertex 0.
inline bool strongly_connected(const hamdeg::Digraph& g) {
  int n = g.n();
  if (n <= 1) return true;
  std::vector<bool> fwd(n, false), bwd(n, false);
  fwd[0] = bwd[0] = true;
  for (int round = 0; round < n; ++round)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (g.has_edge(u, v)) {
          if (fwd[u]) fwd[v] = true;
          if (bwd[v]) bwd[u] = true;
        }
  for (int v = 0; v < n; ++v)
    if (!fwd[v] || !bwd[v]) return false;
  return true;
}

}  // namespace oracle
