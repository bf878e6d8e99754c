#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bbd/conditions.hpp"
#include "bbd/connectivity.hpp"
#include "bbd/cycles.hpp"
#include "bbd/digraph.hpp"
#include "bbd/matching.hpp"

namespace bbd {

using Json = nlohmann::json;

// Cycles, paths and vertex lists render as space-separated names,
// e.g. "X1 Y1 X3 Y3 X2 Y2".
std::string format_vertices(const std::vector<VertexId>& vs);
std::vector<VertexId> parse_vertex_list(std::string_view text);

Json to_json(const ConditionReport& report);
Json to_json(const StrongConnectivityReport& report);
Json to_json(const TwoConnectivityReport& report);
Json to_json(const Matching& m);
Json to_json(const HallViolator& v);
Json to_json(const CycleFactorResult& result);
Json to_json(const Cycle& c);
Json to_json(const Bypass& b);
Json to_json(const std::vector<DominatingPair>& pairs);

}  // namespace bbd
