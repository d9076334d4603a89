#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dlhom/chain_sat.hpp"
#include "dlhom/generator.hpp"
#include "dlhom/instance.hpp"
#include "dlhom/target_structure.hpp"

namespace dlhom {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical JSON forms. Writers emit arrays sorted ascending and edges with
// the smaller endpoint first; readers reject anything structurally off.

nlohmann::json graph_to_json(const UndirectedGraph& g);
UndirectedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json target_to_json(const BipartiteTarget& h);
BipartiteTarget target_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const DlhomInstance& inst);
DlhomInstance instance_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const DeletionSolution& sol);
DeletionSolution solution_from_json(const nlohmann::json& j, int g_n);

nlohmann::json arcs_to_json(const ArcRepresentation& rep);
ArcRepresentation arcs_from_json(const nlohmann::json& j);

// Chain formulas; "k" rides along for the deletion problems and "deletable"
// marks the variable-deletion clauses.
nlohmann::json cdcs_to_json(const CdcsInstance& inst);
CdcsInstance cdcs_from_json(const nlohmann::json& j);
nlohmann::json vdcs_to_json(const VdcsInstance& inst);
VdcsInstance vdcs_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const SkewDecompTree& t);

GenSpec gen_spec_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace dlhom
