#include "hamdeg/digraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hamdeg {

Digraph::Digraph(std::vector<Bits> out) : n_((int)out.size()), out_(std::move(out)) {
  in_.assign(n_, Bits(n_));
  m_ = 0;
  for (int u = 0; u < n_; ++u) {
    out_[u].for_each([&](int v) { in_[v].set(u); });
    m_ += out_[u].count();
  }
}

Digraph Digraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("from_edges: negative n");
  std::vector<Bits> out(n, Bits(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("from_edges: endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("from_edges: loop at vertex " + std::to_string(u));
    out[u].set(v);
  }
  return Digraph(std::move(out));
}

Digraph Digraph::from_adjacency(std::vector<Bits> out) {
  int n = (int)out.size();
  for (int u = 0; u < n; ++u) {
    if (out[u].capacity() != n)
      throw std::invalid_argument("from_adjacency: row capacity mismatch");
    if (out[u].test(u))
      throw std::invalid_argument("from_adjacency: loop at vertex " + std::to_string(u));
  }
  return Digraph(std::move(out));
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve((size_t)m_);
  for (int u = 0; u < n_; ++u) out_[u].for_each([&](int v) { e.emplace_back(u, v); });
  return e;
}

DegreeSequences degree_sequences(const Digraph& g) {
  DegreeSequences d;
  d.out_sorted.reserve(g.n());
  d.in_sorted.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) {
    d.out_sorted.push_back(g.out_degree(v));
    d.in_sorted.push_back(g.in_degree(v));
  }
  std::sort(d.out_sorted.begin(), d.out_sorted.end());
  std::sort(d.in_sorted.begin(), d.in_sorted.end());
  return d;
}

int min_semi_degree(const Digraph& g) {
  if (g.n() == 0) throw std::invalid_argument("min_semi_degree: empty digraph");
  int mo = g.n(), mi = g.n();
  for (int v = 0; v < g.n(); ++v) {
    mo = std::min(mo, g.out_degree(v));
    mi = std::min(mi, g.in_degree(v));
  }
  return std::min(mo, mi);
}

namespace {
Bits reach(const Digraph& g, int start, bool forward) {
  Bits seen(g.n());
  seen.set(start);
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const Bits& nb = forward ? g.out(v) : g.in(v);
    nb.for_each([&](int u) {
      if (!seen.test(u)) {
        seen.set(u);
        stack.push_back(u);
      }
    });
  }
  return seen;
}
}  // namespace

bool is_strongly_connected(const Digraph& g) {
  if (g.n() == 0) throw std::invalid_argument("is_strongly_connected: empty digraph");
  if (g.n() == 1) return true;
  return reach(g, 0, true).count() == g.n() && reach(g, 0, false).count() == g.n();
}

bool is_oriented(const Digraph& g) {
  for (int u = 0; u < g.n(); ++u)
    if (g.out(u).intersects(g.in(u))) return false;
  return true;
}

Bits out_neighbourhood(const Digraph& g, const Bits& s) {
  Bits r(g.n());
  s.for_each([&](int v) { r |= g.out(v); });
  return r;
}

Bits in_neighbourhood(const Digraph& g, const Bits& s) {
  Bits r(g.n());
  s.for_each([&](int v) { r |= g.in(v); });
  return r;
}

bool dominates(const std::vector<long long>& smaller, const std::vector<long long>& larger) {
  if (smaller.size() != larger.size())
    throw std::invalid_argument("dominates: length mismatch");
  for (size_t i = 0; i < smaller.size(); ++i)
    if (larger[i] < smaller[i]) return false;
  return true;
}

Digraph reverse(const Digraph& g) {
  std::vector<Bits> out(g.n(), Bits(g.n()));
  for (int v = 0; v < g.n(); ++v) out[v] = g.in(v);
  return Digraph::from_adjacency(std::move(out));
}

VertexRemoval remove_vertex(const Digraph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::invalid_argument("remove_vertex: out of range");
  Bits keep = Bits::full(g.n());
  keep.reset(v);
  return induced(g, keep);
}

VertexRemoval induced(const Digraph& g, const Bits& s) {
  std::vector<int> old_of_new = s.to_vector();
  std::vector<int> new_of_old(g.n(), -1);
  for (int i = 0; i < (int)old_of_new.size(); ++i) new_of_old[old_of_new[i]] = i;
  int m = (int)old_of_new.size();
  std::vector<Bits> out(m, Bits(m));
  for (int i = 0; i < m; ++i) {
    Bits row = g.out(old_of_new[i]);
    row &= s;
    row.for_each([&](int old) { out[i].set(new_of_old[old]); });
  }
  return VertexRemoval{Digraph::from_adjacency(std::move(out)), std::move(old_of_new)};
}

bool validate_cycle(const Digraph& g, const CycleWitness& w) {
  int len = w.length();
  if (len < 2) return false;
  Bits seen(g.n());
  for (int v : w.vertices) {
    if (v < 0 || v >= g.n() || seen.test(v)) return false;
    seen.set(v);
  }
  for (int i = 0; i < len; ++i)
    if (!g.has_edge(w.vertices[i], w.vertices[(i + 1) % len])) return false;
  return true;
}

CycleWitness normalize_cycle(CycleWitness w) {
  if (w.vertices.empty()) return w;
  auto it = std::min_element(w.vertices.begin(), w.vertices.end());
  std::rotate(w.vertices.begin(), it, w.vertices.end());
  return w;
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw std::runtime_error("parse: empty input");
  std::istringstream head(line);
  long long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0)
    throw std::runtime_error("parse: line " + std::to_string(lineno) +
                             ": expected header \"n m\"");
  std::string junk;
  if (head >> junk)
    throw std::runtime_error("parse: line " + std::to_string(lineno) +
                             ": trailing tokens after header");
  std::vector<Bits> out((size_t)n, Bits((int)n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line())
      throw std::runtime_error("parse: expected " + std::to_string(m) +
                               " edges, got " + std::to_string(i));
    std::istringstream es(line);
    long long u, v;
    if (!(es >> u >> v))
      throw std::runtime_error("parse: line " + std::to_string(lineno) +
                               ": expected \"u v\"");
    if (es >> junk)
      throw std::runtime_error("parse: line " + std::to_string(lineno) +
                               ": trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::runtime_error("parse: line " + std::to_string(lineno) +
                               ": endpoint out of range");
    if (u == v)
      throw std::runtime_error("parse: line " + std::to_string(lineno) + ": loop");
    if (out[(size_t)u].test((int)v))
      throw std::runtime_error("parse: line " + std::to_string(lineno) +
                               ": duplicate edge");
    out[(size_t)u].set((int)v);
  }
  if (next_line())
    throw std::runtime_error("parse: line " + std::to_string(lineno) +
                             ": extra content after edge list");
  return Digraph::from_adjacency(std::move(out));
}

std::string format_digraph(const Digraph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace hamdeg
