#pragma once

#include "json.hpp"

#include "hamdeg/conditions.hpp"
#include "hamdeg/digraph.hpp"
#include "hamdeg/expansion.hpp"
#include "hamdeg/solver.hpp"
#include "hamdeg/tournament.hpp"

namespace hamdeg {

nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const DegreeSequences& d);
nlohmann::json to_json(const CycleWitness& w);
nlohmann::json to_json(const HamiltonResult& r);
nlohmann::json to_json(const PancyclicReport& r);
nlohmann::json to_json(const VertexPancyclicReport& r);
nlohmann::json to_json(const OneFactorResult& r);
nlohmann::json to_json(const ExpansionVerdict& v);
nlohmann::json to_json(const DegreeExpansionReport& r);
nlohmann::json to_json(const ThomassenVerdict& v);
nlohmann::json to_json(const EdgeDensityReport& r);

}  // namespace hamdeg
