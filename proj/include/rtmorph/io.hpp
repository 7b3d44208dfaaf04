#pragma once

#include "json.hpp"

#include <filesystem>
#include <string>

#include "rtmorph/morph.hpp"
#include "rtmorph/rt_geometry.hpp"
#include "rtmorph/schnyder.hpp"

namespace rtmorph::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Throws ParseError naming the path.
Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

// Every `from_json` helper takes `where`, a label for the document ("a.json"),
// which prefixes field paths in ParseError messages. Semantic problems raise
// ValidationError carrying the diagnostics of the owning module.

Json graph_to_json(const PlaneTriangulation& g);
GraphPtr graph_from_json(const Json& j, const std::string& where = "graph");

Json wood_to_json(const SchnyderWood& w);
SchnyderWood wood_from_json(const Json& j, const GraphPtr& g, const std::string& where = "wood");

Json rational_to_json(const Rational& r);

/// {"triangles": {...}}, plus "graph" when with_graph is set.
Json rep_to_json(const RTRepresentation& r, bool with_graph = false);
/// Uses the embedded "graph" field when present, else `g`. Validates the
/// result with validate_rt.
RTRepresentation rep_from_json(const Json& j, const GraphPtr& g, const std::string& where = "representation");
/// Same, without geometric validation (for keyframes and tools that want to
/// report problems themselves).
RTRepresentation rep_from_json_unchecked(const Json& j, const GraphPtr& g, const std::string& where = "representation");

Json labeling_to_json(const Labeling& tau);
Labeling labeling_from_json(const Json& j, int n, const std::string& where = "labeling");

Json wood_set_to_json(const WoodSet& ws);
Json potential_to_json(const PotentialVector& p);
Json decision_to_json(const MorphDecision& d);

/// Keyframes omit the graph; it is stored once at the top level.
Json plan_to_json(const MorphPlan& plan);
MorphPlan plan_from_json(const Json& j, const GraphPtr& g, const std::string& where = "plan");

}  // namespace rtmorph::io
