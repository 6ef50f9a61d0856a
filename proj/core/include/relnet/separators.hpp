#pragma once

#include <optional>
#include <vector>

#include "relnet/graph.hpp"
#include "relnet/types.hpp"

namespace relnet {

/// An important (X, Y)-separator: a minimal edge separator such that no
/// separator of the same or smaller size leaves a strictly smaller set of
/// vertices reachable from X. (Reachable sets are minimized; for minimal
/// separators this mirrors the usual convention with the roles of X and Y
/// swapped.)
struct ImportantSeparator {
  EdgeSet edges;
  VertexSet reachable;  // vertices reachable from X after removal
};

/// Deterministic choice (lexicographically smallest edge-id set) among the
/// important separators of size exactly `size`, or nullopt if none exists.
std::optional<ImportantSeparator> find_important_separator(const Graph& g, const VertexSet& x,
                                                           const VertexSet& y, int size);

/// All important (X, Y)-separators with at most `max_size` edges, sorted by
/// (size, edge ids). At most 4^max_size entries.
std::vector<ImportantSeparator> enumerate_important_separators(const Graph& g, const VertexSet& x,
                                                               const VertexSet& y, int max_size);

/// Chain of components obtained by repeatedly peeling the reachable side of
/// a size-h important separator. Boundaries are the separator endpoints in
/// each component, with X and Y standing in at the two ends.
struct HChain {
  int level = 0;  // h
  std::vector<VertexSet> components;
  std::vector<EdgeSet> separators;       // separators[i] between components[i] and [i+1]
  std::vector<VertexSet> left_boundary;  // per component
  std::vector<VertexSet> right_boundary;
};

/// Requires that no (X, Y)-separator of size < h exists (checked by a
/// min-cut probe). Single-component chain when no size-h important separator
/// exists at the start.
HChain build_h_chain(const Graph& g, const VertexSet& x, const VertexSet& y, int h);

struct HierarchyNode {
  int level = 0;   // 1 for the root
  int parent = -1;
  VertexSet vertices;
  VertexSet left_boundary;
  VertexSet right_boundary;
  EdgeSet left_separator;   // empty at the s-side end (inherited at chain ends)
  EdgeSet right_separator;
  std::vector<int> children;  // in chain order
};

/// Nested chains at levels 2..k-1; node 0 is the root 1-component G. All
/// vertex and edge ids refer to the root graph. Chain-end components inherit
/// the parent's boundary and separator on the outer side.
struct HierarchicalDecomposition {
  int k = 0;
  VertexId s = -1;
  VertexId t = -1;
  std::vector<HierarchyNode> nodes;
  EdgeSet all_separator_edges;
};

HierarchicalDecomposition build_hierarchy(const Graph& g, VertexId s, VertexId t, int k);

/// Variant for derived instances, which may legitimately contain bridges
/// away from the terminals; the level-2 chain still requires lambda(s,t) >= 2.
HierarchicalDecomposition build_hierarchy(const Graph& g, VertexId s, VertexId t, int k,
                                          bool require_2ec);

}  // namespace relnet
