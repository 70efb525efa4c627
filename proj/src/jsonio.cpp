#include "hamdeg/jsonio.hpp"

namespace hamdeg {

using nlohmann::json;

json to_json(const ConditionReport& r) {
  json j{{"holds", r.holds}, {"checked_range", r.checked_range}};
  if (r.first_failure)
    j["first_failure"] = {{"index", r.first_failure->index},
                          {"clause", clause_name(r.first_failure->clause)}};
  else
    j["first_failure"] = nullptr;
  return j;
}

json to_json(const DegreeSequences& d) {
  return json{{"out_sorted", d.out_sorted}, {"in_sorted", d.in_sorted}};
}

json to_json(const CycleWitness& w) {
  return json{{"vertices", w.vertices}, {"length", w.length()}};
}

json to_json(const HamiltonResult& r) {
  json j{{"status", status_name(r.status)},
         {"nodes", r.nodes},
         {"method", r.method}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

json to_json(const PancyclicReport& r) {
  json lengths = json::array();
  for (auto& ls : r.lengths) {
    json e{{"length", ls.length}, {"status", status_name(ls.status)}};
    e["witness"] = ls.witness ? to_json(*ls.witness) : json(nullptr);
    lengths.push_back(e);
  }
  return json{{"pancyclic", r.pancyclic},
              {"definitive", r.definitive},
              {"missing", r.missing},
              {"lengths", lengths}};
}

json to_json(const VertexPancyclicReport& r) {
  json covered = json::array();
  for (auto& row : r.covered) {
    std::string cells;
    for (auto st : row)
      cells += st == SolveStatus::Yes ? 'y' : (st == SolveStatus::No ? 'n' : '?');
    covered.push_back(cells);
  }
  json lengths = json::array();
  for (auto& ls : r.lengths) {
    json e{{"length", ls.length}, {"status", status_name(ls.status)}};
    e["witness"] = ls.witness ? to_json(*ls.witness) : json(nullptr);
    lengths.push_back(e);
  }
  return json{{"vertex_pancyclic", r.vertex_pancyclic},
              {"definitive", r.definitive},
              {"covered", covered},
              {"lengths", lengths}};
}

json to_json(const OneFactorResult& r) {
  json j{{"has_one_factor", r.has_one_factor}};
  if (r.has_one_factor) {
    j["successor"] = r.successor;
  } else {
    j["hall_violator"] = r.hall_violator;
    j["violator_size"] = r.hall_violator.size();
    j["violator_neighbourhood"] = r.violator_neighbourhood;
  }
  return j;
}

json to_json(const ExpansionVerdict& v) {
  json j{{"is_expander", v.is_expander},
         {"sets_checked", v.sets_checked},
         {"mode", expand_mode_name(v.mode)}};
  if (v.mode == ExpandMode::Sampled) {
    j["seed"] = v.seed;
    j["trials"] = v.trials;
  }
  if (v.violator)
    j["violator"] = {{"set", v.violator->set},
                     {"size", v.violator->set.size()},
                     {"neighbourhood_size", v.violator->neighbourhood_size}};
  else
    j["violator"] = nullptr;
  return j;
}

json to_json(const DegreeExpansionReport& r) {
  json j{{"outcome", degree_expansion_outcome_name(r.outcome)},
         {"hypothesis", to_json(r.hypothesis)},
         {"min_semidegree", r.min_semidegree},
         {"semidegree_ok", r.semidegree_ok}};
  j["expansion"] = r.expansion ? to_json(*r.expansion) : json(nullptr);
  return j;
}

json to_json(const ThomassenVerdict& v) {
  json removed = json::array();
  for (auto& [u, w] : v.removed) removed.push_back({u, w});
  json j{{"n", v.n},
         {"r", v.r},
         {"removed", removed},
         {"direct", status_name(v.direct)},
         {"merge_ran", v.merge_ran},
         {"consistent", v.consistent}};
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  if (v.merge_ran) {
    j["merged_status"] = status_name(v.merged_status);
    j["lift_valid"] = v.lift_valid;
  }
  return j;
}

json to_json(const EdgeDensityReport& r) {
  return json{{"oriented", r.oriented},
              {"c_out_of_range", r.c_out_of_range},
              {"min_semidegree_below", r.min_semidegree_below},
              {"hypothesis_met", r.hypothesis_met},
              {"set_size", r.set_size},
              {"min_edges_found", r.min_edges_found},
              {"argmin_s", r.argmin_s},
              {"argmin_t", r.argmin_t},
              {"passes", r.passes},
              {"pairs_checked", r.pairs_checked}};
}

}  // namespace hamdeg
