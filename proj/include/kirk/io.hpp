#pragma once

// JSON file formats.
//
// Presentation:
//   { "n": 4, "components": { "4": [ {"sign": 1, "word": "[x1,[x2,x3]]"} ] } }
// Diagram:
//   { "n": 3, "arcs": [{"id": "a1", "component": 1}, ...],
//     "base_arcs": {"1": "a1", ...},
//     "crossings": [{"over": "a3", "under_in": "a1", "under_out": "a2", "sign": 1}] }
// Cross-section: a diagram (inline, or under "diagram") plus
//   "singularities": {"3": [{"sign": 1, "loop": [["a1", 1], ["a4", -1]]}]}

#include <string>

#include "json.hpp"

#include "kirk/invariants.hpp"
#include "kirk/wirtinger.hpp"

namespace kirk {

using Json = nlohmann::json;

LinkMapPresentation presentation_from_json(const Json& j);
Json to_json(const LinkMapPresentation& p);

DiagramSpec diagram_from_json(const Json& j);
Json to_json(const DiagramSpec& d);

CrossSection cross_section_from_json(const Json& j);
Json to_json(const CrossSection& cs);

// [{"indices": [..], "coeff": k}, ...] in monomial order.
Json to_json(const Polynomial& p);
Json to_json(const Residue& r);
Json to_json(const KEntry& e);
Json to_json(const std::vector<KPair>& pairs);

// Reads and parses a JSON file; InvalidInput on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace kirk
