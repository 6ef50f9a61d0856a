#pragma once

#include <tuple>
#include <vector>

#include "relnet/types.hpp"

namespace relnet {

struct Edge {
  EdgeId id = -1;
  VertexId u = -1;
  VertexId v = -1;
  double weight = 0.0;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool incident(VertexId w) const { return w == u || w == v; }
};

/// Weighted undirected multigraph with dense vertex ids 0..n-1 and dense,
/// stable edge ids 0..m-1 in construction order. Parallel edges are allowed,
/// self-loops are not. Immutable after construction; derived views (induced
/// subgraphs, contractions) are fresh graphs with explicit id maps.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, const std::vector<std::tuple<VertexId, VertexId, double>>& edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_.at(v); }

  double weight_of(const EdgeSet& set) const;
  double total_weight() const;
  Solution solution_for(EdgeSet set) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

Graph build_graph(int n, const std::vector<std::tuple<VertexId, VertexId, double>>& edge_list);

/// Edges of G with exactly one endpoint in `a`; parallel edges count
/// individually. Rejects a = {} and a = V, where the cut is undefined.
EdgeSet delta(const Graph& g, const VertexSet& a);

struct SubgraphView {
  Graph graph;
  std::vector<VertexId> vertex_origin;  // new vertex -> original vertex
  std::vector<VertexId> vertex_image;   // original vertex -> new vertex or -1
  std::vector<EdgeId> edge_origin;      // new edge -> original edge
};

SubgraphView induced_subgraph(const Graph& g, const VertexSet& a);

struct ContractionView {
  Graph graph;
  std::vector<VertexId> vertex_image;  // original vertex -> new vertex
  std::vector<EdgeId> edge_origin;     // new edge -> original edge
};

/// Contracts each part to a single vertex. Self-loops created by the
/// contraction are dropped; parallel edges are kept. Remaining vertices are
/// renumbered in ascending original-id order (a part takes the slot of its
/// smallest member).
ContractionView contract(const Graph& g, const std::vector<VertexSet>& parts);

/// True iff some vertex of X reaches some vertex of Y in G minus `removed`.
bool connected(const Graph& g, const VertexSet& x, const VertexSet& y, const EdgeSet& removed);
bool connected(const Graph& g, const VertexSet& x, const VertexSet& y,
               const std::vector<char>& removed_edge);

/// Vertices reachable from any vertex of X in G minus `removed`.
VertexSet reachable_set(const Graph& g, const VertexSet& x, const EdgeSet& removed);

struct ConnectivityReport {
  bool connected = false;
  bool two_edge_connected = false;
  std::vector<EdgeId> bridges;
};

/// Bridge-finding over the multigraph; a parallel pair is never a bridge.
ConnectivityReport two_edge_connectivity(const Graph& g);
bool is_2_edge_connected(const Graph& g);

/// Same vertex set, edges restricted to `keep`; new dense edge ids with an
/// origin map back to g.
struct EdgeSubgraphView {
  Graph graph;
  std::vector<EdgeId> edge_origin;
};

EdgeSubgraphView edge_subgraph(const Graph& g, const EdgeSet& keep);

}  // namespace relnet
