#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hamdeg/conditions.hpp"
#include "hamdeg/constructions.hpp"
#include "hamdeg/digraph.hpp"
#include "hamdeg/expansion.hpp"
#include "hamdeg/harness.hpp"
#include "hamdeg/jsonio.hpp"
#include "hamdeg/solver.hpp"
#include "hamdeg/tournament.hpp"

namespace {

using hamdeg::Digraph;
using hamdeg::Frac;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

Digraph load_digraph(const std::string& path) {
  return hamdeg::parse_digraph(read_file(path));
}

// Symmetric digraphs double an undirected graph; the undirected degree of a
// vertex is then its out-degree.
std::vector<int> undirected_degrees(const Digraph& g) {
  for (auto& [u, v] : g.edges())
    if (!g.has_edge(v, u))
      throw std::runtime_error(
          "chvatal applies to doubled undirected graphs: edge " +
          std::to_string(u) + "->" + std::to_string(v) + " has no reverse");
  std::vector<int> d(g.n());
  for (int v = 0; v < g.n(); ++v) d[v] = g.out_degree(v);
  return d;
}

Frac parse_frac_option(const std::string& value, const std::string& name) {
  try {
    return Frac::parse(value);
  } catch (const std::exception&) {
    throw std::runtime_error("cannot parse " + name + " value '" + value + "'");
  }
}

std::vector<int> parse_range(const std::string& text) {
  int lo = 0, hi = 0, step = 1;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> lo)) throw std::runtime_error("bad range: " + text);
  if (in >> c1 >> hi) {
    if (c1 != ':') throw std::runtime_error("bad range: " + text);
    if (in >> c2 >> step && c2 != ':') throw std::runtime_error("bad range: " + text);
  } else {
    hi = lo;
  }
  if (step <= 0 || hi < lo) throw std::runtime_error("bad range: " + text);
  std::vector<int> out;
  for (int n = lo; n <= hi; n += step) out.push_back(n);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"degree-sequence Hamiltonicity toolkit"};
  app.require_subcommand(1);

  // check ------------------------------------------------------------
  auto* check = app.add_subcommand("check", "evaluate a degree condition");
  std::string check_name, check_file, check_eta = "";
  check->add_option("condition", check_name,
                    "chvatal | nash-williams | approx-nw | posa | approx-posa | "
                    "nw3 | capped-approx-nw | bermond-thomassen | pancyclic-2conn")
      ->required();
  check->add_option("digraph", check_file, "digraph text file")->required();
  check->add_option("--eta", check_eta, "rational like 1/5 (relaxed variants)");

  // gen --------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a construction family member");
  std::string gen_family, gen_out, gen_alpha = "3/10";
  int gen_n = 0, gen_k = 3;
  gen->add_option("family", gen_family,
                  "intro-extremal | bermond-thomassen | figure1 | "
                  "two-cliques-even | two-cliques-odd | chvatal-double | "
                  "vertex-pancyclic | oriented-posa | regular-tournament")
      ->required();
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--k", gen_k, "family parameter k");
  gen->add_option("--alpha", gen_alpha, "rational alpha for oriented-posa");
  gen->add_option("--out", gen_out, "write digraph here plus a .json sidecar");

  // solve ------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "exact cycle structure queries");
  std::string solve_task, solve_file;
  int solve_t = 0, solve_max_dp = 22;
  long long solve_nodes = 20'000'000;
  solve->add_option("task", solve_task,
                    "ham | pancyclic | vertex-pancyclic | one-factor | cycle")
      ->required();
  solve->add_option("digraph", solve_file, "digraph text file")->required();
  solve->add_option("-t,--length", solve_t, "cycle length for task 'cycle'");
  solve->add_option("--max-n-dp", solve_max_dp, "exact subset-DP size cap");
  solve->add_option("--node-budget", solve_nodes, "backtracking node budget");

  // expand -----------------------------------------------------------
  auto* expand = app.add_subcommand("expand", "outexpansion verification");
  std::string ex_kind, ex_file, ex_nu, ex_tau, ex_mode = "exhaustive";
  long long ex_trials = 20000;
  uint64_t ex_seed = 1;
  expand->add_option("kind", ex_kind, "robust | plain")->required();
  expand->add_option("digraph", ex_file, "digraph text file")->required();
  expand->add_option("--nu", ex_nu, "rational nu")->required();
  expand->add_option("--tau", ex_tau, "rational tau")->required();
  expand->add_option("--mode", ex_mode, "exhaustive | sampled");
  expand->add_option("--trials", ex_trials, "sampled-mode trial count");
  expand->add_option("--seed", ex_seed, "sampled-mode seed");

  // tourney ----------------------------------------------------------
  auto* tourney = app.add_subcommand("tourney", "regular-tournament experiments");
  auto* tsweep = tourney->add_subcommand("sweep", "edge-removal trial grid");
  std::string ts_range = "7:15:2", ts_strategies = "all", ts_out;
  int ts_seeds = 200;
  tsweep->add_option("--n-range", ts_range, "lo:hi:step, odd values");
  tsweep->add_option("--strategies", ts_strategies,
                     "all or comma list (random, one-vertex-out, split, "
                     "adversarial-greedy)");
  tsweep->add_option("--seeds", ts_seeds, "seeds per (n, strategy, r) cell");
  tsweep->add_option("--out", ts_out, "CSV output path");
  tourney->require_subcommand(1);

  // sweep ------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "run a config-file sweep");
  std::string sweep_config;
  sweep->add_option("config", sweep_config, "key = value config file")->required();

  // enumerate ----------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive tiny-n check");
  int en_n = 4, en_jobs = 1;
  std::string en_out;
  enumerate->add_option("--n", en_n, "3..6")->required();
  enumerate->add_option("--jobs", en_jobs, "worker threads");
  enumerate->add_option("--out", en_out, "report base path");

  CLI11_PARSE(app, argc, argv);

  if (*check) {
    Digraph g = load_digraph(check_file);
    hamdeg::ConditionReport rep;
    if (check_name == "chvatal") {
      rep = hamdeg::chvatal_undirected(undirected_degrees(g));
    } else if (check_name == "nash-williams") {
      rep = hamdeg::nash_williams(g);
    } else if (check_name == "approx-nw" || check_name == "approx-posa" ||
               check_name == "capped-approx-nw") {
      if (check_eta.empty())
        throw std::runtime_error("--eta is required for " + check_name);
      Frac eta = parse_frac_option(check_eta, "--eta");
      rep = check_name == "approx-nw" ? hamdeg::approx_nw(g, eta)
            : check_name == "approx-posa" ? hamdeg::approx_posa(g, eta)
                                          : hamdeg::capped_approx_nw(g, eta);
    } else if (check_name == "posa") {
      rep = hamdeg::posa_digraph(g);
    } else if (check_name == "nw3") {
      rep = hamdeg::nw3(g);
    } else if (check_name == "bermond-thomassen") {
      rep = hamdeg::bermond_thomassen_false(g);
    } else if (check_name == "pancyclic-2conn") {
      rep = hamdeg::pancyclic_2conn_condition(g);
    } else {
      throw std::runtime_error("unknown condition: " + check_name);
    }
    nlohmann::json j = hamdeg::to_json(rep);
    j["condition"] = check_name;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (*gen) {
    Digraph g = [&]() -> Digraph {
      if (gen_family == "intro-extremal") return hamdeg::intro_extremal(gen_n, gen_k);
      if (gen_family == "bermond-thomassen") return hamdeg::bermond_thomassen(gen_n);
      if (gen_family == "figure1") return hamdeg::figure1_extremal(gen_n, gen_k);
      if (gen_family == "two-cliques-even")
        return hamdeg::two_cliques_disconnected(gen_n);
      if (gen_family == "two-cliques-odd") return hamdeg::two_cliques_odd(gen_n);
      if (gen_family == "chvatal-double")
        return hamdeg::chvatal_double_counterexample(gen_n);
      if (gen_family == "vertex-pancyclic")
        return hamdeg::vertex_pancyclic_counterexample(gen_k, gen_n);
      if (gen_family == "oriented-posa")
        return hamdeg::oriented_posa_counterexample(
            parse_frac_option(gen_alpha, "--alpha"), gen_n);
      if (gen_family == "regular-tournament")
        return hamdeg::regular_tournament(gen_n);
      throw std::runtime_error("unknown family: " + gen_family);
    }();
    std::string text = hamdeg::format_digraph(g);
    hamdeg::DegreeSequences seqs = hamdeg::degree_sequences(g);
    nlohmann::json sidecar{
        {"family", gen_family},
        {"n", g.n()},
        {"edges", g.edge_count()},
        {"layout", hamdeg::layout_doc(gen_family)},
        {"degrees", hamdeg::to_json(seqs)},
        {"min_semidegree", hamdeg::min_semi_degree(g)},
        {"strongly_connected", hamdeg::is_strongly_connected(g)},
        {"oriented", hamdeg::is_oriented(g)}};
    if (gen_out.empty()) {
      std::cout << text;
    } else {
      write_file(gen_out, text);
      write_file(gen_out + ".json", sidecar.dump(2) + "\n");
      std::cout << "wrote " << gen_out << " and " << gen_out << ".json\n";
    }
    return 0;
  }

  if (*solve) {
    Digraph g = load_digraph(solve_file);
    hamdeg::SolveBudget budget{solve_max_dp, solve_nodes};
    nlohmann::json j;
    if (solve_task == "ham") {
      j = hamdeg::to_json(hamdeg::has_hamilton_cycle(g, budget));
    } else if (solve_task == "pancyclic") {
      j = hamdeg::to_json(hamdeg::is_pancyclic(g, budget));
    } else if (solve_task == "vertex-pancyclic") {
      j = hamdeg::to_json(hamdeg::is_vertex_pancyclic(g, budget));
    } else if (solve_task == "one-factor") {
      j = hamdeg::to_json(hamdeg::has_one_factor(g));
    } else if (solve_task == "cycle") {
      if (solve_t < 2) throw std::runtime_error("task 'cycle' needs -t length");
      j = hamdeg::to_json(hamdeg::cycle_of_length(g, solve_t, budget));
    } else {
      throw std::runtime_error("unknown task: " + solve_task);
    }
    j["task"] = solve_task;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (*expand) {
    Digraph g = load_digraph(ex_file);
    hamdeg::RobustParams p{parse_frac_option(ex_nu, "--nu"),
                           parse_frac_option(ex_tau, "--tau")};
    hamdeg::ExpandMode mode;
    if (ex_mode == "exhaustive") mode = hamdeg::ExpandMode::Exhaustive;
    else if (ex_mode == "sampled") mode = hamdeg::ExpandMode::Sampled;
    else throw std::runtime_error("unknown mode: " + ex_mode);
    hamdeg::ExpansionVerdict v =
        ex_kind == "robust" ? hamdeg::is_robust_outexpander(g, p, mode, ex_trials, ex_seed)
        : ex_kind == "plain" ? hamdeg::is_outexpander(g, p, mode, ex_trials, ex_seed)
                             : throw std::runtime_error("kind must be robust or plain");
    nlohmann::json j = hamdeg::to_json(v);
    j["kind"] = ex_kind;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (*tsweep) {
    std::vector<int> ns = parse_range(ts_range);
    std::vector<hamdeg::RemovalStrategy::Kind> kinds;
    if (ts_strategies == "all") {
      kinds = {hamdeg::RemovalStrategy::Kind::Random,
               hamdeg::RemovalStrategy::Kind::OneVertexOut,
               hamdeg::RemovalStrategy::Kind::Split,
               hamdeg::RemovalStrategy::Kind::AdversarialGreedy};
    } else {
      std::istringstream in(ts_strategies);
      std::string tok;
      while (std::getline(in, tok, ','))
        kinds.push_back(hamdeg::removal_kind_from_name(tok));
    }
    auto rows = hamdeg::tourney_sweep(ns, kinds, ts_seeds);
    std::string csv = hamdeg::tourney_csv(rows);
    long long bad = 0;
    for (auto& r : rows)
      if (!r.hamiltonian) ++bad;
    if (ts_out.empty()) {
      std::cout << csv;
    } else {
      write_file(ts_out, csv);
      std::cout << "rows=" << rows.size() << " non_hamiltonian=" << bad
                << " -> " << ts_out << "\n";
    }
    return bad == 0 ? 0 : 2;
  }

  if (*sweep) {
    hamdeg::SweepConfig cfg = hamdeg::SweepConfig::parse(read_file(sweep_config));
    hamdeg::SweepOutcome out = hamdeg::run_sweep(cfg);
    std::cout << out.summary << "\n";
    if (!out.reports.json_path.empty())
      std::cout << "reports: " << out.reports.json_path << " "
                << out.reports.csv_path << "\n";
    return 0;
  }

  if (*enumerate) {
    hamdeg::ExhaustiveSummary s = hamdeg::nash_williams_exhaustive_check(en_n, en_jobs);
    std::cout << "n=" << s.n << " enumerated=" << s.enumerated
              << " filtered=" << s.filtered << " verified=" << s.verified
              << " counterexamples=" << s.counterexamples.size() << "\n";
    if (!en_out.empty()) {
      hamdeg::ReportPaths p = hamdeg::write_report(en_out, s);
      std::cout << "reports: " << p.json_path << " " << p.csv_path << "\n";
    }
    return s.counterexamples.empty() ? 0 : 2;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
