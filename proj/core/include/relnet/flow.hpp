#pragma once

#include <map>
#include <optional>

#include "relnet/graph.hpp"
#include "relnet/types.hpp"

namespace relnet {

/// Result of a unit-capacity maximum flow. `value` equals the number of
/// edge-disjoint X-Y paths; `source_side` is the minimum cut closest to X
/// (vertices reachable from X in the residual network).
struct FlowResult {
  int value = 0;
  std::map<EdgeId, int> edge_usage;     // edge id -> 1 for used edges
  std::map<EdgeId, bool> toward_v;      // used edge id -> true if flow runs u -> v
  EdgeSet min_cut;
  VertexSet source_side;
};

/// Maximum number of edge-disjoint paths between vertex sets X and Y, which
/// are treated as contracted super terminals. X and Y must be disjoint and
/// nonempty.
FlowResult max_flow(const Graph& g, const VertexSet& x, const VertexSet& y);

int lambda(const Graph& g, VertexId s, VertexId t);
int lambda_sets(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Minimum-weight x-y path; nullopt iff x and y are disconnected.
std::optional<Solution> shortest_path(const Graph& g, VertexId x, VertexId y);

/// Minimum-cost integral flow of exactly `flow_value` under unit capacities
/// and costs equal to edge weights. Returns the edges carrying flow; nullopt
/// iff lambda(x, y) < flow_value.
std::optional<Solution> min_cost_flow(const Graph& g, VertexId x, VertexId y, int flow_value);

/// Set-terminal variant: contracts X and Y first, maps edge ids back.
std::optional<Solution> min_cost_flow_sets(const Graph& g, const VertexSet& x, const VertexSet& y,
                                           int flow_value);

}  // namespace relnet
