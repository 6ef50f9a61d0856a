#pragma once

#include <optional>
#include <vector>

#include "relnet/graph.hpp"
#include "relnet/separators.hpp"
#include "relnet/types.hpp"

namespace relnet {

/// One (X, Y, d) demand generated for a component of the hierarchical
/// decomposition, with the incident separator edges recorded.
struct GroupDemand {
  VertexSet x;
  VertexSet y;
  int d = 0;
  EdgeSet s_x;  // edges of the left separator incident on X
  EdgeSet s_y;  // edges of the right separator incident on Y
};

/// Demands for one component: every nonempty (X, Y) subset pair except
/// (V_l, V_r) with d = max(0, k + |S_X| + |S_Y| - |S_{i-1}| - |S_i|), plus
/// the (V_l, V_r, level+1) flow demand and the (V_l, V_r, k-1) demand.
struct GroupDemandSet {
  std::vector<GroupDemand> subset_demands;      // zero-d pairs dropped
  std::optional<SetDemand> flow_demand;         // (V_l, V_r, level+1)
  std::optional<SetDemand> final_demand;        // (V_l, V_r, k-1)

  std::vector<SetDemand> flatten() const;
};

GroupDemandSet group_demands(const Graph& g, const HierarchicalDecomposition& decomp,
                             int node_index, int k);

/// T(k) from the cost recurrence: T(1) = 1, T(k) = (2^{2(k-1)} + 1) T(k-1) + 1.
long long ratio_bound(int k);

struct SdkOptions {
  bool bridge_peeling = true;   // peel terminal-separating bridges before decomposing
  bool require_root_2ec = true; // derived instances are exempt internally
  int max_k = 6;
};

/// Per-component record of which subroutine contributed which root edges.
struct SdkContribution {
  int level = 0;
  int node_index = 0;
  EdgeSet shortest_path_edges;
  EdgeSet recursive_edges;
  EdgeSet final_recursive_edges;
  EdgeSet flow_edges;
};

struct SdkTrace {
  EdgeSet separator_edges;
  EdgeSet forced_bridges;
  std::vector<SdkContribution> contributions;
  std::optional<HierarchicalDecomposition> decomposition;  // root-level, when one was built
};

/// Recursive approximation for the single-demand problem: exact min-cost
/// k-flow when lambda(s, t) >= k, shortest path at k = 1, otherwise the
/// hierarchical decomposition with per-component subroutines.
Solution solve_sdk(const Graph& g, VertexId s, VertexId t, int k, const SdkOptions& options = {},
                   SdkTrace* trace = nullptr);

}  // namespace relnet
