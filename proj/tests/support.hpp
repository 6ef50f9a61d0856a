#pragma once

#include <vector>

#include "relnet/cactus.hpp"
#include "relnet/graph.hpp"
#include "relnet/oracle.hpp"

namespace relnet::testing {

inline EdgeSet all_edges(const Graph& g) {
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.insert(e);
  return out;
}

/// Brute-force 2-cuts: unordered edge pairs whose removal disconnects G.
inline std::vector<EdgeSet> brute_force_two_cuts(const Graph& g) {
  std::vector<EdgeSet> out;
  VertexSet everyone;
  for (VertexId v = 0; v < g.vertex_count(); ++v) everyone.insert(v);
  for (EdgeId a = 0; a < g.edge_count(); ++a)
    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
      EdgeSet pair{a, b};
      VertexSet reach = reachable_set(g, {0}, pair);
      if (static_cast<int>(reach.size()) != g.vertex_count()) out.push_back(pair);
    }
  return out;
}

/// Property (B) audit for a central component instance: every 2-edge set
/// disconnecting s and t is delta(s) or delta(t).
inline bool passes_ab_audit(const ComponentInstance& inst) {
  const Graph& j = inst.graph;
  if (j.incident(inst.s).size() != 2 || j.incident(inst.t).size() != 2) return false;
  EdgeSet ds(j.incident(inst.s).begin(), j.incident(inst.s).end());
  EdgeSet dt(j.incident(inst.t).begin(), j.incident(inst.t).end());
  for (EdgeId a = 0; a < j.edge_count(); ++a)
    for (EdgeId b = a + 1; b < j.edge_count(); ++b) {
      EdgeSet pair{a, b};
      if (!connected(j, {inst.s}, {inst.t}, pair)) {
        if (pair != ds && pair != dt) return false;
      }
    }
  return true;
}

}  // namespace relnet::testing
