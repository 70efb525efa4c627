#include "hamdeg/harness.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "hamdeg/conditions.hpp"
#include "hamdeg/expansion.hpp"
#include "hamdeg/solver.hpp"

namespace hamdeg {

namespace {

Digraph random_digraph_rng(int n, const Frac& density, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_digraph: need n >= 1");
  if (density.num < 0 || Frac(1) < density)
    throw std::invalid_argument("random_digraph: density must lie in [0, 1]");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      // One draw per ordered pair keeps the stream length fixed, so the
      // sample is reproducible independent of which edges appear.
      if ((long long)(rng() % (uint64_t)density.den) < density.num)
        edges.emplace_back(u, v);
    }
  return Digraph::from_edges(n, edges);
}

}  // namespace

Digraph random_digraph(int n, const Frac& density, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_digraph_rng(n, density, rng);
}

// ------------------------------------------------------------------
// Exhaustive enumeration, 4 states per unordered pair, odometer-incremented
// with O(1) amortized mask/degree updates.

namespace {

constexpr int kEnumMaxN = 6;

bool tiny_ham_rec(const uint32_t* outm, int n, int cur, int depth,
                  uint32_t& visited, int* order) {
  if (depth == n) return (outm[cur] & 1u) != 0;
  uint32_t cand = outm[cur] & ~visited;
  while (cand) {
    int u = std::countr_zero(cand);
    cand &= cand - 1;
    visited |= 1u << u;
    order[depth] = u;
    if (tiny_ham_rec(outm, n, u, depth + 1, visited, order)) return true;
    visited &= ~(1u << u);
  }
  return false;
}

bool tiny_strong(const uint32_t* outm, const uint32_t* inm, int n) {
  uint32_t full = (1u << n) - 1;
  for (int pass = 0; pass < 2; ++pass) {
    const uint32_t* adj = pass ? inm : outm;
    uint32_t vis = 1, frontier = 1;
    while (frontier) {
      uint32_t next = 0, f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v];
      }
      frontier = next & ~vis;
      vis |= next;
    }
    if (vis != full) return false;
  }
  return true;
}

void sort_small(const int* src, int* dst, int n) {
  for (int i = 0; i < n; ++i) {
    int x = src[i], j = i;
    while (j > 0 && dst[j - 1] > x) {
      dst[j] = dst[j - 1];
      --j;
    }
    dst[j] = x;
  }
}

// Same index convention as the conditions module; cross-checked against it
// on a deterministic subsample of instances.
bool inline_nw(const int* so, const int* si, int n) {
  int hi = (n + 1) / 2 - 1;
  for (int i = 1; i <= hi; ++i) {
    bool c1 = so[i - 1] >= i + 1 || si[n - i - 1] >= n - i;
    bool c2 = si[i - 1] >= i + 1 || so[n - i - 1] >= n - i;
    if (!c1 || !c2) return false;
  }
  return true;
}

Digraph digraph_from_masks(const uint32_t* outm, int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u) {
    uint32_t m = outm[u];
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      es.emplace_back(u, v);
    }
  }
  return Digraph::from_edges(n, es);
}

struct EnumShard {
  long long filtered = 0, verified = 0;
  std::vector<std::pair<long long, std::string>> cex;
  std::string error;
};

void enum_worker(int n, long long lo, long long hi, EnumShard& out) {
  try {
    const int P = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<uint8_t> digit(P, 0);
    uint32_t outm[kEnumMaxN] = {0}, inm[kEnumMaxN] = {0};
    int od[kEnumMaxN] = {0}, id[kEnumMaxN] = {0};

    auto set_pair = [&](int p, uint8_t s) {
      auto [u, v] = pairs[p];
      uint8_t old = digit[p];
      if ((old ^ s) & 1) {
        if (s & 1) {
          outm[u] |= 1u << v;
          inm[v] |= 1u << u;
          ++od[u];
          ++id[v];
        } else {
          outm[u] &= ~(1u << v);
          inm[v] &= ~(1u << u);
          --od[u];
          --id[v];
        }
      }
      if ((old ^ s) & 2) {
        if (s & 2) {
          outm[v] |= 1u << u;
          inm[u] |= 1u << v;
          ++od[v];
          ++id[u];
        } else {
          outm[v] &= ~(1u << u);
          inm[u] &= ~(1u << v);
          --od[v];
          --id[u];
        }
      }
      digit[p] = s;
    };

    for (int p = 0; p < P; ++p)
      set_pair(p, (uint8_t)((lo >> (2 * p)) & 3));

    for (long long code = lo; code < hi; ++code) {
      bool degs_ok = true;
      for (int v = 0; v < n; ++v)
        if (od[v] == 0 || id[v] == 0) {
          degs_ok = false;
          break;
        }
      bool nw_ok = false, strong_ok = false;
      if (degs_ok) {
        int so[kEnumMaxN], si[kEnumMaxN];
        sort_small(od, so, n);
        sort_small(id, si, n);
        nw_ok = inline_nw(so, si, n);
        if (nw_ok) strong_ok = tiny_strong(outm, inm, n);
        if (nw_ok && strong_ok) {
          ++out.filtered;
          int order[kEnumMaxN];
          order[0] = 0;
          uint32_t visited = 1;
          bool ham = tiny_ham_rec(outm, n, 0, 1, visited, order);
          if (ham) {
            for (int i = 0; i < n; ++i)
              if (!(outm[order[i]] >> order[(i + 1) % n] & 1))
                throw std::logic_error("enumeration witness failed validation");
            ++out.verified;
          } else {
            out.cex.emplace_back(code, format_digraph(digraph_from_masks(outm, n)));
          }
        }
      }
      if ((code & 0xFFF) == 0) {
        // Subsampled cross-check of the inlined predicates against the
        // canonical implementations.
        Digraph g = digraph_from_masks(outm, n);
        bool strong_ref = is_strongly_connected(g);
        bool strong_fast = tiny_strong(outm, inm, n);
        if (strong_ref != strong_fast)
          throw std::logic_error("enumeration cross-check: connectivity mismatch");
        int so[kEnumMaxN], si[kEnumMaxN];
        sort_small(od, so, n);
        sort_small(id, si, n);
        if (nash_williams(g).holds != inline_nw(so, si, n))
          throw std::logic_error("enumeration cross-check: condition mismatch");
      }
      if (code + 1 < hi)
        for (int p = 0; p < P; ++p) {
          uint8_t s = digit[p];
          if (s < 3) {
            set_pair(p, (uint8_t)(s + 1));
            break;
          }
          set_pair(p, 0);
        }
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
}

}  // namespace

ExhaustiveSummary nash_williams_exhaustive_check(int n, int jobs) {
  if (n < 3 || n > kEnumMaxN)
    throw std::invalid_argument("exhaustive check supports 3 <= n <= 6");
  const int P = n * (n - 1) / 2;
  long long total = 1;
  for (int p = 0; p < P; ++p) total *= 4;
  jobs = std::max(1, std::min(jobs, 256));
  if ((long long)jobs > total) jobs = (int)total;
  std::vector<EnumShard> shards(jobs);
  std::vector<std::thread> threads;
  long long chunk = (total + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    long long lo = w * chunk, hi = std::min(total, (w + 1) * chunk);
    if (lo >= hi) break;
    threads.emplace_back(enum_worker, n, lo, hi, std::ref(shards[w]));
  }
  for (auto& t : threads) t.join();
  ExhaustiveSummary s;
  s.n = n;
  s.enumerated = total;
  for (auto& shard : shards) {
    if (!shard.error.empty()) throw std::logic_error(shard.error);
    s.filtered += shard.filtered;
    s.verified += shard.verified;
    for (auto& [code, text] : shard.cex) s.counterexamples.push_back(text);
  }
  return s;
}

// ------------------------------------------------------------------

namespace {

std::string echo_lines(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::ostringstream out;
  for (auto& [k, v] : kv) out << k << " = " << v << "\n";
  return out.str();
}

}  // namespace

SampledSummary approx_nw_sampled_check(int n, const Frac& eta,
                                       const Frac& density, long long trials,
                                       uint64_t seed) {
  SampledSummary s;
  s.kind = "approx-nw";
  s.n = n;
  s.trials = trials;
  s.config = echo_lines({{"kind", "approx-nw"},
                         {"n", std::to_string(n)},
                         {"eta", eta.str()},
                         {"density", density.str()},
                         {"trials", std::to_string(trials)},
                         {"seed", std::to_string(seed)}});
  std::mt19937_64 rng(seed);
  for (long long t = 0; t < trials; ++t) {
    Digraph g = random_digraph_rng(n, density, rng);
    InstanceRow row{t, false, false};
    if (approx_nw(g, eta).holds) {
      row.kept = true;
      ++s.kept;
      HamiltonResult h = has_hamilton_cycle(g);
      row.hamiltonian = h.status == SolveStatus::Yes;
      if (row.hamiltonian)
        ++s.hamiltonian;
      else
        s.exceptions.push_back(format_digraph(g));
    }
    s.rows.push_back(row);
  }
  return s;
}

namespace {

// Dense blocks, sparse cross edges: a structured instance family that is
// usually rejected by the expansion filter.
Digraph two_block_model(int n, std::mt19937_64& rng) {
  int half = (n + 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      bool same = (u < half) == (v < half);
      uint64_t draw = rng() % 10;
      if (same ? draw < 9 : draw < 1) edges.emplace_back(u, v);
    }
  return Digraph::from_edges(n, edges);
}

}  // namespace

SampledSummary expander_hamilton_sampled_check(int n, const Frac& eta,
                                               const Frac& nu, const Frac& tau,
                                               long long trials, uint64_t seed) {
  if (n > kExhaustiveExpansionCap)
    throw std::invalid_argument(
        "expander_hamilton_sampled_check: n exceeds the exhaustive expansion cap");
  RobustParams params{nu, tau};
  params.validate();
  SampledSummary s;
  s.kind = "expander";
  s.n = n;
  s.trials = trials;
  s.config = echo_lines({{"kind", "expander"},
                         {"n", std::to_string(n)},
                         {"eta", eta.str()},
                         {"nu", nu.str()},
                         {"tau", tau.str()},
                         {"trials", std::to_string(trials)},
                         {"seed", std::to_string(seed)}});
  std::mt19937_64 rng(seed);
  for (long long t = 0; t < trials; ++t) {
    Digraph g = t % 4 == 2 ? two_block_model(n, rng)
                           : random_digraph_rng(
                                 n, t % 4 == 0 ? Frac(1, 2)
                                               : (t % 4 == 1 ? Frac(7, 10)
                                                             : Frac(9, 10)),
                                 rng);
    InstanceRow row{t, false, false};
    bool semi = Frac(min_semi_degree(g)) >= eta * Frac(n);
    if (semi && is_robust_outexpander(g, params, ExpandMode::Exhaustive).is_expander) {
      row.kept = true;
      ++s.kept;
      HamiltonResult h = has_hamilton_cycle(g);
      row.hamiltonian = h.status == SolveStatus::Yes;
      if (row.hamiltonian)
        ++s.hamiltonian;
      else
        s.exceptions.push_back(format_digraph(g));
    }
    s.rows.push_back(row);
  }
  return s;
}

DegreeExpansionSweep degree_expansion_sampled_check(const std::vector<int>& ns,
                                                    const Frac& eta,
                                                    const Frac& tau,
                                                    long long target,
                                                    uint64_t seed) {
  if (ns.empty())
    throw std::invalid_argument("degree_expansion_sampled_check: need n values");
  for (int n : ns)
    if (n > kExhaustiveExpansionCap)
      throw std::invalid_argument(
          "degree_expansion_sampled_check: n exceeds the exhaustive expansion cap");
  DegreeExpansionSweep s;
  s.ns = ns;
  s.target = target;
  {
    std::ostringstream nss;
    for (size_t i = 0; i < ns.size(); ++i) nss << (i ? "," : "") << ns[i];
    s.config = echo_lines({{"kind", "degree-expansion"},
                           {"n", nss.str()},
                           {"eta", eta.str()},
                           {"tau", tau.str()},
                           {"target", std::to_string(target)},
                           {"seed", std::to_string(seed)}});
  }
  std::mt19937_64 rng(seed);
  const Frac densities[3] = {Frac(17, 20), Frac(9, 10), Frac(4, 5)};
  long long cap = target * 1000;
  while (s.samples < target && s.attempts < cap) {
    int n = ns[s.attempts % ns.size()];
    Frac density = densities[(s.attempts / ns.size()) % 3];
    ++s.attempts;
    Digraph g = random_digraph_rng(n, density, rng);
    DegreeExpansionReport rep = verify_expansion_from_degrees(g, eta, tau);
    if (rep.outcome == DegreeExpansionOutcome::HypothesisFalse) continue;
    DegreeExpansionRow row;
    row.sample = s.samples;
    row.n = n;
    row.semidegree_ok = rep.semidegree_ok;
    row.expander_ok = rep.expansion && rep.expansion->is_expander;
    ++s.samples;
    if (row.semidegree_ok) ++s.semidegree_ok;
    if (row.expander_ok) ++s.expander_ok;
    if (!row.semidegree_ok || !row.expander_ok)
      s.exceptions.push_back(format_digraph(g));
    s.rows.push_back(row);
  }
  if (s.samples < target)
    throw std::runtime_error(
        "degree_expansion_sampled_check: sampling budget exhausted before target");
  return s;
}

// ------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

SweepConfig SweepConfig::parse(const std::string& text) {
  SweepConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key == "kind") cfg.kind = val;
    else if (key == "n") cfg.n = std::stoi(val);
    else if (key == "n_hi") cfg.n_hi = std::stoi(val);
    else if (key == "eta") cfg.eta = Frac::parse(val);
    else if (key == "nu") cfg.nu = Frac::parse(val);
    else if (key == "tau") cfg.tau = Frac::parse(val);
    else if (key == "density") cfg.density = Frac::parse(val);
    else if (key == "trials") cfg.trials = std::stoll(val);
    else if (key == "seed") cfg.seed = (uint64_t)std::stoull(val);
    else if (key == "jobs") cfg.jobs = std::stoi(val);
    else if (key == "out") cfg.out = val;
    else
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
  }
  if (cfg.kind.empty())
    throw std::invalid_argument("config: 'kind' is required");
  return cfg;
}

std::string SweepConfig::echo() const {
  std::ostringstream text;
  text << "kind = " << kind << "\n";
  text << "n = " << n << "\n";
  if (n_hi >= 0) text << "n_hi = " << n_hi << "\n";
  text << "eta = " << eta.str() << "\n";
  text << "nu = " << nu.str() << "\n";
  text << "tau = " << tau.str() << "\n";
  text << "density = " << density.str() << "\n";
  text << "trials = " << trials << "\n";
  text << "seed = " << seed << "\n";
  text << "jobs = " << jobs << "\n";
  if (!out.empty()) text << "out = " << out << "\n";
  return text.str();
}

// ------------------------------------------------------------------

std::string csv_rows(const SampledSummary& s) {
  std::ostringstream out;
  out << "trial,kept,hamiltonian\n";
  for (auto& r : s.rows) {
    out << r.trial << ',' << (r.kept ? 1 : 0) << ',';
    if (r.kept) out << (r.hamiltonian ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

std::string csv_rows(const ExhaustiveSummary& s) {
  std::ostringstream out;
  out << "n,enumerated,filtered,verified,counterexamples\n";
  out << s.n << ',' << s.enumerated << ',' << s.filtered << ',' << s.verified
      << ',' << s.counterexamples.size() << '\n';
  return out.str();
}

std::string csv_rows(const DegreeExpansionSweep& s) {
  std::ostringstream out;
  out << "sample,n,semidegree_ok,expander_ok\n";
  for (auto& r : s.rows)
    out << r.sample << ',' << r.n << ',' << (r.semidegree_ok ? 1 : 0) << ','
        << (r.expander_ok ? 1 : 0) << '\n';
  return out.str();
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

nlohmann::json exceptions_json(const std::vector<std::string>& dumps) {
  nlohmann::json arr = nlohmann::json::array();
  for (size_t i = 0; i < dumps.size(); ++i)
    arr.push_back({{"index", i}, {"digraph", dumps[i]}});
  return arr;
}

ReportPaths emit(const std::string& base, const nlohmann::json& j,
                 const std::string& csv) {
  ReportPaths p{base + ".json", base + ".csv"};
  write_file(p.json_path, j.dump(2) + "\n");
  write_file(p.csv_path, csv);
  return p;
}

}  // namespace

ReportPaths write_report(const std::string& base, const SampledSummary& s) {
  nlohmann::json j{{"kind", s.kind},
                   {"config", s.config},
                   {"counts",
                    {{"n", s.n},
                     {"trials", s.trials},
                     {"kept", s.kept},
                     {"hamiltonian", s.hamiltonian}}},
                   {"exceptions", exceptions_json(s.exceptions)}};
  return emit(base, j, csv_rows(s));
}

ReportPaths write_report(const std::string& base, const ExhaustiveSummary& s) {
  nlohmann::json j{{"kind", "enumerate"},
                   {"counts",
                    {{"n", s.n},
                     {"enumerated", s.enumerated},
                     {"filtered", s.filtered},
                     {"verified", s.verified}}},
                   {"exceptions", exceptions_json(s.counterexamples)}};
  return emit(base, j, csv_rows(s));
}

ReportPaths write_report(const std::string& base, const DegreeExpansionSweep& s) {
  nlohmann::json j{{"kind", "degree-expansion"},
                   {"config", s.config},
                   {"counts",
                    {{"target", s.target},
                     {"attempts", s.attempts},
                     {"samples", s.samples},
                     {"semidegree_ok", s.semidegree_ok},
                     {"expander_ok", s.expander_ok}}},
                   {"exceptions", exceptions_json(s.exceptions)}};
  return emit(base, j, csv_rows(s));
}

SweepOutcome run_sweep(const SweepConfig& cfg) {
  SweepOutcome out;
  std::ostringstream line;
  if (cfg.kind == "enumerate") {
    ExhaustiveSummary s = nash_williams_exhaustive_check(cfg.n, cfg.jobs);
    out.exceptions = (long long)s.counterexamples.size();
    line << "enumerate n=" << s.n << ": enumerated=" << s.enumerated
         << " filtered=" << s.filtered << " verified=" << s.verified
         << " counterexamples=" << s.counterexamples.size();
    if (!cfg.out.empty()) out.reports = write_report(cfg.out, s);
  } else if (cfg.kind == "approx-nw") {
    SampledSummary s =
        approx_nw_sampled_check(cfg.n, cfg.eta, cfg.density, cfg.trials, cfg.seed);
    out.exceptions = (long long)s.exceptions.size();
    line << "approx-nw n=" << s.n << " trials=" << s.trials
         << ": kept=" << s.kept << " hamiltonian=" << s.hamiltonian
         << " exceptions=" << s.exceptions.size();
    if (!cfg.out.empty()) out.reports = write_report(cfg.out, s);
  } else if (cfg.kind == "expander") {
    SampledSummary s = expander_hamilton_sampled_check(cfg.n, cfg.eta, cfg.nu,
                                                       cfg.tau, cfg.trials,
                                                       cfg.seed);
    out.exceptions = (long long)s.exceptions.size();
    line << "expander n=" << s.n << " trials=" << s.trials
         << ": kept=" << s.kept << " hamiltonian=" << s.hamiltonian
         << " exceptions=" << s.exceptions.size();
    if (!cfg.out.empty()) out.reports = write_report(cfg.out, s);
  } else if (cfg.kind == "degree-expansion") {
    std::vector<int> ns;
    int hi = cfg.n_hi >= cfg.n ? cfg.n_hi : cfg.n;
    for (int n = cfg.n; n <= hi; ++n) ns.push_back(n);
    DegreeExpansionSweep s =
        degree_expansion_sampled_check(ns, cfg.eta, cfg.tau, cfg.trials, cfg.seed);
    out.exceptions = (long long)s.exceptions.size();
    line << "degree-expansion n=" << cfg.n << ".." << hi
         << " samples=" << s.samples << ": semidegree_ok=" << s.semidegree_ok
         << " expander_ok=" << s.expander_ok
         << " exceptions=" << s.exceptions.size();
    if (!cfg.out.empty()) out.reports = write_report(cfg.out, s);
  } else {
    throw std::invalid_argument("unknown sweep kind: " + cfg.kind);
  }
  out.summary = line.str();
  return out;
}

}  // namespace hamdeg
