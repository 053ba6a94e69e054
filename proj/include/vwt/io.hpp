#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vwt/lfunctions.hpp"

namespace vwt {

using Json = nlohmann::ordered_json;

/// A parsed graph file: the weighted graph, its Z^d voltage and every other
/// integer-valued per-edge key (e.g. "beta").
struct GraphFile {
  RGraph graph;
  VoltageAssignment alpha;
  std::map<std::string, std::vector<long>> edge_keys;
  std::optional<int> levels;
  std::optional<std::size_t> root;
};

/// {"prime","dim","levels"}.
struct TowerSpec {
  long prime = 2;
  int dim = 1;
  int levels = 2;
};

/// Throws ParseError on any schema violation.
GraphFile parse_graph(const Json& j);
GraphFile load_graph(const std::filesystem::path& path);
TowerSpec parse_tower(const Json& j);
TowerSpec load_tower(const std::filesystem::path& path);

/// Per-edge integers stored under `key`; throws ParseError when missing.
std::vector<long> edge_values(const GraphFile& f, const std::string& key);

Json to_json(const PiRingElement& x);
Json to_json(const CycloElement& x);
/// {"shift":[k_i], "terms":[{"exp":[...], "coeff":[...]}]}.
Json to_json(const RLaurent& q);
Json graph_to_json(const GraphFile& f);

PiRingElement pi_from_json(const PiField& f, const Json& j);
CycloElement cyclo_from_json(const CycloRing& r, const Json& j);
RLaurent laurent_from_json(const PolyRing<PiRingElement>& ctx, const Json& j);

}  // namespace vwt
