#pragma once

#include <vector>

#include "relnet/graph.hpp"
#include "relnet/types.hpp"

namespace relnet {

struct DemandClassification {
  Demand demand;
  int lambda = 0;
  bool relative = false;  // lambda < k
};

/// Classifies a demand with k <= 3; larger requirements belong to the
/// single-demand solver.
DemandClassification classify_demand(const Graph& g, const Demand& demand);

/// 2-approximation for 3-RSND: forced edges of every relative 3-demand plus
/// one Jain run over the input's ordinary demands joined with the equivalent
/// ordinary 3-demand stars of each relative demand (forced edges weight-zeroed
/// inside the SND call). Requires a 2-edge-connected graph and all k <= 3.
Solution solve_3rsnd(const Graph& g, const std::vector<Demand>& demands);

/// Component-wise pipeline for a single relative 3-demand: forced edges,
/// a min-cost 2-flow inside each non-central component, and a subset
/// 3-edge-connectivity solve inside each central component. Ordinary inputs
/// are delegated to an exact min-cost 3-flow.
Solution solve_sd3_componentwise(const Graph& g, VertexId s, VertexId t);

}  // namespace relnet
