#include "hamdeg/constructions.hpp"

#include <map>
#include <stdexcept>

namespace hamdeg {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void set_range(Bits& row, int lo, int hi) {
  for (int i = lo; i < hi; ++i) row.set(i);
}

// Complete digraph on [lo, hi).
void complete_block(std::vector<Bits>& out, int lo, int hi) {
  for (int v = lo; v < hi; ++v) {
    set_range(out[v], lo, hi);
    out[v].reset(v);
  }
}

// All edges [alo, ahi) -> [blo, bhi).
void complete_cross(std::vector<Bits>& out, int alo, int ahi, int blo, int bhi) {
  for (int v = alo; v < ahi; ++v) set_range(out[v], blo, bhi);
}

// Tournament on ids, as regular as possible: odd m is the circulant where
// ids[i] beats the next (m-1)/2; even m beats the next m/2-1 plus the
// antipode for the first half.
void tournament_block(std::vector<Bits>& out, const std::vector<int>& ids) {
  int m = (int)ids.size();
  if (m <= 1) return;
  int half = m % 2 == 1 ? (m - 1) / 2 : m / 2 - 1;
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= half; ++j) out[ids[i]].set(ids[(i + j) % m]);
    if (m % 2 == 0 && i < m / 2) out[ids[i]].set(ids[(i + m / 2) % m]);
  }
}

std::vector<int> iota_ids(int lo, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = lo + i;
  return v;
}

}  // namespace

Digraph intro_extremal(int n, int k) {
  require(k >= 1 && 2 * k < n, "intro_extremal: need 1 <= k and 2k < n");
  std::vector<Bits> out(n, Bits(n));
  complete_block(out, k, n);
  for (int i = 0; i < k; ++i)
    for (int x = k; x < 2 * k; ++x) {
      out[i].set(x);
      out[x].set(i);
    }
  return Digraph::from_adjacency(std::move(out));
}

Digraph bermond_thomassen(int n) {
  require(n >= 5, "bermond_thomassen: need n >= 5");
  std::vector<Bits> out(n, Bits(n));
  int v = n - 2, w = n - 1;
  complete_block(out, 0, n - 2);
  set_range(out[v], 0, n - 2);
  set_range(out[w], 0, n - 2);
  out[0].set(v);
  out[0].set(w);
  return Digraph::from_adjacency(std::move(out));
}

Digraph figure1_extremal(int n, int k) {
  require(k >= 2 && 2 * k < n, "figure1_extremal: need 2 <= k and 2k < n");
  int klo = 0, khi = k - 1;          // K
  int plo = k - 1, phi = n - 3;      // K'
  int u = n - 3, v = n - 2, w = n - 1;
  std::vector<Bits> out(n, Bits(n));
  complete_block(out, klo, khi);
  complete_block(out, plo, phi);
  complete_cross(out, plo, phi, klo, khi);
  for (int p = plo; p < phi; ++p) {
    out[p].set(u);
    out[p].set(v);
  }
  set_range(out[u], klo, khi);
  set_range(out[v], klo, khi);
  for (int x = 0; x < n - 1; ++x) {
    out[w].set(x);
    out[x].set(w);
  }
  return Digraph::from_adjacency(std::move(out));
}

Digraph two_cliques_disconnected(int n) {
  require(n >= 4 && n % 2 == 0, "two_cliques_disconnected: need even n >= 4");
  std::vector<Bits> out(n, Bits(n));
  int h = n / 2;
  complete_block(out, 0, h);
  complete_block(out, h, n);
  complete_cross(out, 0, h, h, n);
  return Digraph::from_adjacency(std::move(out));
}

Digraph two_cliques_odd(int n) {
  require(n >= 5 && n % 2 == 1, "two_cliques_odd: need odd n >= 5");
  std::vector<Bits> out(n, Bits(n));
  int big = (n + 1) / 2;
  complete_block(out, 0, big);
  complete_block(out, big, n);
  complete_cross(out, 0, big, big, n);
  return Digraph::from_adjacency(std::move(out));
}

Digraph chvatal_double_counterexample(int n) {
  require(n >= 8 && n % 2 == 0, "chvatal_double_counterexample: need even n >= 8");
  int h = n / 2;
  std::vector<Bits> out(n, Bits(n));
  auto undirected = [&](int a, int b) {
    out[a].set(b);
    out[b].set(a);
  };
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (i != j) undirected(i, h + j);
  for (int i = 0; i < h; ++i) undirected(i, (i + 1) % h);
  return Digraph::from_adjacency(std::move(out));
}

Frac vertex_pancyclic_eta(int k) {
  require(k >= 3 && k <= 18, "vertex_pancyclic_eta: need 3 <= k <= 18");
  long long den = k;
  for (int i = 0; i < k; ++i) den *= 3;
  return Frac(1, den);
}

Digraph vertex_pancyclic_counterexample(int k, int n) {
  Frac eta = vertex_pancyclic_eta(k);
  long long unit = eta.ceil_mul(n);
  require(unit >= 1, "vertex_pancyclic_counterexample: n too small");
  std::vector<long long> sizes;  // |V_1| .. |V_{k-2}|
  long long total = 1;           // x
  long long pw = 1;
  for (int i = 1; i <= k - 2; ++i) {
    pw *= 3;
    sizes.push_back(pw * unit);
    total += pw * unit;
  }
  require(total < n, "vertex_pancyclic_counterexample: layers leave no room for K");
  std::vector<Bits> out(n, Bits(n));
  int x = 0;
  std::vector<std::pair<int, int>> layer;  // [lo, hi) per V_i
  int pos = 1;
  for (long long sz : sizes) {
    layer.emplace_back(pos, pos + (int)sz);
    pos += (int)sz;
  }
  int klo = pos, khi = n;
  set_range(out[x], layer[0].first, layer[0].second);
  for (size_t i = 0; i + 1 < layer.size(); ++i)
    complete_cross(out, layer[i].first, layer[i].second, layer[i + 1].first,
                   layer[i + 1].second);
  complete_cross(out, layer.back().first, layer.back().second, klo, khi);
  complete_block(out, klo, khi);
  for (int v = klo; v < khi; ++v) set_range(out[v], 0, klo);
  return Digraph::from_adjacency(std::move(out));
}

OrientedPosaParams oriented_posa_parameters(Frac alpha, long long n) {
  require(Frac(0) < alpha && alpha < Frac(3, 8),
          "oriented_posa: need 0 < alpha < 3/8");
  long long p = alpha.num, q = alpha.den;
  long long denom = 3 * q - 8 * p;  // > 0 by the range check
  long long t = q / denom + 1;
  long long c = 4 * t;
  require(n % (8 * t) == 0,
          "oriented_posa: need n divisible by 8t = " + std::to_string(8 * t));
  long long s = n / (2 * c) - 2;
  require(s >= 1, "oriented_posa: need n/(2c) - 2 >= 1, got s = " + std::to_string(s));
  return OrientedPosaParams{t, c, s};
}

Digraph oriented_posa_counterexample(Frac alpha, long long n) {
  auto [t, c, s] = oriented_posa_parameters(alpha, n);
  int nn = (int)n;
  int nA = nn / 4, nB = nn / 8, nC = nn / 8 - 1, nD = nn / 4 + 1, nE = nn / 4;
  int A0 = 0, B0 = nA, C0 = B0 + nB, D0 = C0 + nC, E0 = D0 + nD;
  require(E0 + nE == nn, "oriented_posa: internal size mismatch");
  int half = nn / 8 - (int)c / 2;  // count of x's (= count of y's)

  std::vector<Bits> out(nn, Bits(nn));
  auto cross = [&](int alo, int acnt, int blo, int bcnt) {
    complete_cross(out, alo, alo + acnt, blo, blo + bcnt);
  };
  cross(A0, nA, B0, nB);
  cross(B0, nB, C0, nC);
  cross(C0, nC, D0, nD);
  cross(A0, nA, C0, nC);
  cross(B0, nB, D0, nD);
  cross(D0, nD, A0, nA);
  cross(E0, nE, A0, nA);
  cross(E0, nE, B0, nB);
  cross(C0, nC, E0, nE);
  cross(D0, nD, E0, nE);

  tournament_block(out, iota_ids(B0, nB));
  tournament_block(out, iota_ids(C0, nC));

  // Inside A: x_1..x_half, y_1..y_half, then A'' = z_1..z_2t, w_1..w_2t.
  auto ax = [&](int i) { return A0 + i; };            // x_{i+1}
  auto ay = [&](int i) { return A0 + half + i; };     // y_{i+1}
  auto az = [&](int j) { return A0 + 2 * half + j; }; // z_{j+1}
  auto aw = [&](int j) { return A0 + 2 * half + 2 * (int)t + j; };
  {
    std::vector<int> aprime = iota_ids(A0, 2 * half);
    tournament_block(out, aprime);
    std::vector<int> adpp = iota_ids(A0 + 2 * half, (int)c);
    tournament_block(out, adpp);
  }
  // Direction of each A' x A'' pair; true = a' -> a''.
  auto aprime_beats = [&](bool is_x, int i, bool to_z, int j) {
    if (is_x && to_z) return true;                       // x_i -> z_j, all
    if (!is_x && !to_z) return true;                     // y_i -> w_j, all
    int block = i / (int)s;                              // 0-based
    return j == 2 * block || j == 2 * block + 1;         // block pair
  };
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < 2 * (int)t; ++j) {
      if (aprime_beats(true, i, true, j)) out[ax(i)].set(az(j));
      else out[az(j)].set(ax(i));
      if (aprime_beats(true, i, false, j)) out[ax(i)].set(aw(j));
      else out[aw(j)].set(ax(i));
      if (aprime_beats(false, i, true, j)) out[ay(i)].set(az(j));
      else out[az(j)].set(ay(i));
      if (aprime_beats(false, i, false, j)) out[ay(i)].set(aw(j));
      else out[aw(j)].set(ay(i));
    }

  // Inside D: mirror of A with every edge reversed, plus a leftover vertex r
  // that takes all its D'' edges inward.
  auto dx = [&](int i) { return D0 + i; };
  auto dy = [&](int i) { return D0 + half + i; };
  int r = D0 + 2 * half;
  auto dz = [&](int j) { return D0 + 2 * half + 1 + j; };
  auto dw = [&](int j) { return D0 + 2 * half + 1 + 2 * (int)t + j; };
  {
    std::vector<int> dprime = iota_ids(D0, 2 * half + 1);  // includes r
    tournament_block(out, dprime);
    std::vector<int> ddpp = iota_ids(D0 + 2 * half + 1, (int)c);
    tournament_block(out, ddpp);
  }
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < 2 * (int)t; ++j) {
      if (aprime_beats(true, i, true, j)) out[dz(j)].set(dx(i));
      else out[dx(i)].set(dz(j));
      if (aprime_beats(true, i, false, j)) out[dw(j)].set(dx(i));
      else out[dx(i)].set(dw(j));
      if (aprime_beats(false, i, true, j)) out[dz(j)].set(dy(i));
      else out[dy(i)].set(dz(j));
      if (aprime_beats(false, i, false, j)) out[dw(j)].set(dy(i));
      else out[dy(i)].set(dw(j));
    }
  for (int j = 0; j < (int)c; ++j) out[D0 + 2 * half + 1 + j].set(r);

  return Digraph::from_adjacency(std::move(out));
}

Digraph regular_tournament(int n) {
  require(n >= 3 && n % 2 == 1, "regular_tournament: need odd n >= 3");
  std::vector<Bits> out(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= (n - 1) / 2; ++j) out[i].set((i + j) % n);
  return Digraph::from_adjacency(std::move(out));
}

std::string layout_doc(const std::string& family) {
  static const std::map<std::string, std::string> docs = {
      {"intro-extremal",
       "I = {0..k-1} independent; K = {k..n-1} complete; X = {k..2k-1} joined "
       "both ways to I"},
      {"bermond-thomassen",
       "K = {0..n-3} complete; v = n-2, w = n-1 send to all of K; u = 0 sends "
       "to v and w"},
      {"figure1",
       "K = {0..k-2}, K' = {k-1..n-4} complete; u = n-3, v = n-2; K'->K, "
       "K'->{u,v}, {u,v}->K; w = n-1 universal both ways"},
      {"two-cliques-even",
       "source clique {0..n/2-1}, sink clique {n/2..n-1}, all edges source->sink"},
      {"two-cliques-odd",
       "source clique {0..ceil(n/2)-1}, sink clique rest, all edges source->sink"},
      {"chvatal-double",
       "classes {0..n/2-1}, {n/2..n-1}; complete bipartite minus matching "
       "{i,i+n/2} plus cycle in first class; all edges doubled"},
      {"vertex-pancyclic",
       "x = 0; layers V_1..V_{k-2} consecutive (|V_i| = 3^i*ceil(n/(k*3^k))); "
       "complete K occupies the tail"},
      {"oriented-posa",
       "classes A (n/4), B (n/8), C (n/8-1), D (n/4+1), E (n/4) consecutive; "
       "A = x_1..,y_1..,z_1..z_2t,w_1..w_2t; D mirrors A with leftover r "
       "before its final c vertices"},
      {"regular-tournament", "circulant: i -> i+1..i+(n-1)/2 (mod n)"},
  };
  auto it = docs.find(family);
  if (it == docs.end()) throw std::invalid_argument("unknown family: " + family);
  return it->second;
}

}  // namespace hamdeg
