#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamdeg/digraph.hpp"
#include "hamdeg/rational.hpp"

namespace hamdeg {

// Each ordered pair (u,v), u != v, gets an edge independently with the given
// probability. Deterministic across platforms for a fixed seed.
Digraph random_digraph(int n, const Frac& density, uint64_t seed);

// ------------------------------------------------------------------
// Exhaustive tiny-n verification: every labeled digraph (4 states per
// unordered pair), filtered to strongly connected + the degree condition,
// must be Hamiltonian.

struct ExhaustiveSummary {
  int n = 0;
  long long enumerated = 0;  // 4^(n(n-1)/2)
  long long filtered = 0;    // strongly connected and condition holds
  long long verified = 0;    // filtered and Hamiltonian with a valid witness
  std::vector<std::string> counterexamples;  // digraph text dumps
};

// 3 <= n <= 6; n=6 is the billions-of-instances tier, so pass jobs > 1.
ExhaustiveSummary nash_williams_exhaustive_check(int n, int jobs = 1);

// ------------------------------------------------------------------
// Sampled sweeps: generate, filter by a hypothesis, solve, archive any
// hypothesis-satisfying non-Hamiltonian instance (possible at small n; the
// guarantees are asymptotic).

struct InstanceRow {
  long long trial = 0;
  bool kept = false;
  bool hamiltonian = false;  // meaningful only when kept
};

struct SampledSummary {
  std::string kind;
  int n = 0;
  long long trials = 0;
  long long kept = 0;
  long long hamiltonian = 0;
  std::vector<InstanceRow> rows;         // one per trial
  std::vector<std::string> exceptions;   // kept but not Hamiltonian (dumps)
  std::string config;                    // echoed key = value lines
};

// Filter: the relaxed degree condition at eta. Instances are random digraphs
// at the given density.
SampledSummary approx_nw_sampled_check(int n, const Frac& eta,
                                       const Frac& density, long long trials,
                                       uint64_t seed);

// Filter: min semidegree >= eta*n and exhaustively verified robust
// (nu,tau)-outexpansion. Instances cycle through random densities and a
// planted two-block model that tends to fail expansion.
SampledSummary expander_hamilton_sampled_check(int n, const Frac& eta,
                                               const Frac& nu, const Frac& tau,
                                               long long trials, uint64_t seed);

// ------------------------------------------------------------------
// Degree-condition => expansion implication, sampled over hypothesis-
// satisfying instances (dense random digraphs, n cycling over ns).

struct DegreeExpansionRow {
  long long sample = 0;
  int n = 0;
  bool semidegree_ok = false;
  bool expander_ok = false;
};

struct DegreeExpansionSweep {
  std::vector<int> ns;
  long long target = 0;
  long long attempts = 0;      // instances generated to reach the target
  long long samples = 0;       // hypothesis-satisfying instances evaluated
  long long semidegree_ok = 0;
  long long expander_ok = 0;
  std::vector<DegreeExpansionRow> rows;
  std::vector<std::string> exceptions;  // a conclusion failed (dumps)
  std::string config;
};

DegreeExpansionSweep degree_expansion_sampled_check(const std::vector<int>& ns,
                                                    const Frac& eta,
                                                    const Frac& tau,
                                                    long long target,
                                                    uint64_t seed);

// ------------------------------------------------------------------
// Config-file driven sweeps (key = value lines, '#' comments).

struct SweepConfig {
  std::string kind;  // enumerate | approx-nw | expander | degree-expansion
  int n = 12;
  int n_hi = -1;  // degree-expansion ranges over n..n_hi
  Frac eta{1, 5};
  Frac nu{1, 20};
  Frac tau{1, 4};
  Frac density{1, 2};
  long long trials = 100;
  uint64_t seed = 1;
  int jobs = 1;
  std::string out;  // report base path; empty writes nothing

  static SweepConfig parse(const std::string& text);
  std::string echo() const;
};

struct ReportPaths {
  std::string json_path, csv_path;
};

// JSON summary (config echo, counts, exceptions with embedded digraph text)
// plus CSV rows. Byte-deterministic for a fixed config.
ReportPaths write_report(const std::string& base_path, const SampledSummary& s);
ReportPaths write_report(const std::string& base_path, const ExhaustiveSummary& s);
ReportPaths write_report(const std::string& base_path,
                         const DegreeExpansionSweep& s);

std::string csv_rows(const SampledSummary& s);
std::string csv_rows(const ExhaustiveSummary& s);
std::string csv_rows(const DegreeExpansionSweep& s);

struct SweepOutcome {
  std::string summary;       // one human-readable line
  long long exceptions = 0;  // archived non-conforming instances
  ReportPaths reports;       // empty paths when cfg.out is empty
};

SweepOutcome run_sweep(const SweepConfig& cfg);

}  // namespace hamdeg
