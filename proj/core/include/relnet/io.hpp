#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relnet/cactus.hpp"
#include "relnet/graph.hpp"
#include "relnet/oracle.hpp"
#include "relnet/sdk.hpp"
#include "relnet/separators.hpp"
#include "relnet/types.hpp"

namespace relnet {

/// Graph text format: first line "n m", then m lines "u v w" with 0-based
/// vertex ids; parallel edges as repeated lines; edge id = line order.
Graph parse_graph_text(std::istream& in);
Graph parse_graph_text(const std::string& text);
std::string format_graph_text(const Graph& g);

/// Demand lines "s t k"; duplicates merged keeping the largest k. Blank
/// lines and '#' comments are ignored.
std::vector<Demand> parse_demands(std::istream& in);
std::vector<Demand> parse_demands(const std::string& text);

/// JSON artifacts (schema 1). Deterministic byte-for-byte for fixed inputs.
std::string solution_json(const std::string& problem, const Graph& g, const Solution& solution);
std::string sdk_solution_json(const Graph& g, const Solution& solution, int k,
                              const SdkTrace& trace);
std::string feasibility_json(const FeasibilityReport& report);
std::string exact_json(const Graph& g, const Solution& solution);
std::string cactus_json(const Graph& g, const CactusModel& cactus,
                        const std::optional<StChain>& chain);
std::string hierarchy_json(const HierarchicalDecomposition& decomp);

/// Edge set from a solution JSON artifact (the "edges" array).
EdgeSet parse_solution_edges(const std::string& json_text);

}  // namespace relnet
