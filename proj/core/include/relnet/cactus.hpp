#pragma once

#include <optional>
#include <vector>

#include "relnet/graph.hpp"
#include "relnet/types.hpp"

namespace relnet {

/// Equivalence classes of "no 2-cut separates u, v", i.e. lambda(u,v) >= 3.
struct ThreeClassPartition {
  std::vector<VertexSet> classes;  // ordered by smallest member
  std::vector<int> class_of;       // vertex -> class index
};

ThreeClassPartition three_classes(const Graph& g);

/// Cactus of the 2-cuts: the graph obtained by shrinking every nontrivial
/// 3-class. Every edge lies on exactly one cycle (a parallel pair forms a
/// 2-cycle) and the same-cycle edge pairs are exactly the 2-cuts of G.
struct CactusModel {
  ThreeClassPartition classes;
  std::vector<int> node_for_vertex;         // original vertex -> cactus node (== class index)
  Graph cactus_graph;
  std::vector<std::vector<EdgeId>> cycles;  // cactus edge ids, in cycle walk order
  std::vector<EdgeId> edge_origin;          // cactus edge -> original edge
  std::vector<int> cycle_of_edge;           // cactus edge -> cycle index
  std::vector<std::pair<VertexId, VertexId>> original_endpoints;  // per cactus edge
};

CactusModel build_cactus(const Graph& g);

struct RelevantClass {
  int class_index = -1;
  VertexSet members;                     // original vertices
  VertexSet attachment_nodes;            // original vertices; includes s/t when inside
  std::vector<EdgeId> attachment_edges;  // original ids of incident chain-cycle edges
  bool is_central = false;
};

struct StChain {
  VertexId s = -1;
  VertexId t = -1;
  std::vector<int> cycles;  // indices into CactusModel::cycles, ordered from s to t
  EdgeSet forced_edges;     // original edge ids: all edges on chain cycles
  std::vector<RelevantClass> relevant_classes;
};

/// nullopt signals an ordinary demand (s and t share a 3-class, lambda >= 3).
std::optional<StChain> st_chain(const CactusModel& cactus, VertexId s, VertexId t);

struct ComponentInstance {
  enum class Kind { Central, NonCentral };
  Kind kind = Kind::Central;
  int class_index = -1;
  Graph graph;
  std::vector<EdgeId> edge_origin;  // instance edge -> original id; -1 for fresh zero edges
  // central instances:
  VertexId s = -1;
  VertexId t = -1;
  VertexSet terminals;  // R = neighbors of s and t, instance ids
  // non-central instances:
  VertexId attach_u = -1;
  VertexId attach_v = -1;
};

/// Per-class component instances of the chain. Central instances satisfy
/// deg(s) = deg(t) = 2 with every 2-edge st-cut at delta(s) or delta(t);
/// non-central classes whose two attachment edges meet at a single vertex
/// impose no requirement and are omitted.
std::vector<ComponentInstance> extract_components(const Graph& g, const StChain& chain);

/// The equivalent set of ordinary 3-demands for a relative 3-demand (s,t,3):
/// a spanning star (centered at the smallest vertex id) over the attachment
/// nodes of every st-relevant class. nullopt signals an ordinary demand.
std::optional<std::vector<Demand>> ordinary_demand_set(const Graph& g, VertexId s, VertexId t);

/// Star demands for a chain already at hand (used by the joint reduction).
std::vector<Demand> chain_star_demands(const StChain& chain);

}  // namespace relnet
