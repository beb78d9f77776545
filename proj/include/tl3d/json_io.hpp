#pragma once

#include <json.hpp>

#include "tl3d/algebra.hpp"
#include "tl3d/posets.hpp"

// JSON forms:
//   tree       {"brackets": "()(())", "loops": 3}
//   partition  {"ground": ["1-","2-","1+","2+"], "blocks": [["1-","1+"],...]}
//   diagram    {"source": "(())", "target": "(())", "blocks": [...]}
//   poly       {"q^2*k^1": "2", "q^0*k^0": "-1/2"}
//   lincomb    {"source":..., "target":..., "terms":[{"poly":..,"diagram":..}]}
//   gram       {"object":.., "section":.., "basis":[..], "entries":[[str]],
//               "flags":[[bool]]}
//   hasse      {"nodes": ["", "()", ...], "covers": [[0,1], ...]}

namespace tl3d {

nlohmann::json to_json(const RootedTree& t);
RootedTree tree_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SetPartition& p);
SetPartition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Poly2& p);
Poly2 poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LinComb& l);
LinComb lincomb_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GramMatrix& m);
nlohmann::json to_json(const HasseDiagram& h);

}  // namespace tl3d
