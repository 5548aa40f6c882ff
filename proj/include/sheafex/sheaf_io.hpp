#pragma once

#include "sheafex/sheaf.hpp"

#include <json.hpp>
#include <string>

namespace sheafex {

/**
 * Sheaf spec file:
 *   {"ambient": {"backend": "gf", "p": 2, "k": 3} | {"backend": "cyclic", "moduli": [m,...]},
 *    "subgroups": {"face-key": [[generator coords],...]}}
 * Face keys name vertices or edges of `g`; omitted faces get the zero subgroup.
 */
SubgroupAssignment assignment_from_json(const nlohmann::json& j, const WeightedGraph& g);
nlohmann::json assignment_to_json(const SubgroupAssignment& a, const WeightedGraph& g);
SubgroupAssignment load_assignment(const std::string& path, const WeightedGraph& g);

nlohmann::json ambient_to_json(const AbelianGroup& r);
AbelianGroup ambient_from_json(const nlohmann::json& j);

}  // namespace sheafex
