#include "relnet/sdk.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>

#include "relnet/flow.hpp"

namespace relnet {

std::vector<SetDemand> GroupDemandSet::flatten() const {
  std::vector<SetDemand> out;
  for (const GroupDemand& gd : subset_demands) out.push_back(SetDemand{gd.x, gd.y, gd.d});
  if (flow_demand) out.push_back(*flow_demand);
  if (final_demand) out.push_back(*final_demand);
  return out;
}

GroupDemandSet group_demands(const Graph& g, const HierarchicalDecomposition& decomp,
                             int node_index, int k) {
  const HierarchyNode& node = decomp.nodes.at(node_index);
  const std::vector<VertexId> left(node.left_boundary.begin(), node.left_boundary.end());
  const std::vector<VertexId> right(node.right_boundary.begin(), node.right_boundary.end());
  const int sep_left = static_cast<int>(node.left_separator.size());
  const int sep_right = static_cast<int>(node.right_separator.size());

  auto incident_edges = [&](const EdgeSet& sep, const VertexSet& set) {
    EdgeSet out;
    for (EdgeId e : sep)
      if (set.count(g.edge(e).u) || set.count(g.edge(e).v)) out.insert(e);
    return out;
  };

  GroupDemandSet result;
  const uint32_t lx = 1u << left.size();
  const uint32_t ly = 1u << right.size();
  for (uint32_t mx = 1; mx < lx; ++mx) {
    VertexSet x;
    for (size_t i = 0; i < left.size(); ++i)
      if (mx & (1u << i)) x.insert(left[i]);
    EdgeSet s_x = incident_edges(node.left_separator, x);
    for (uint32_t my = 1; my < ly; ++my) {
      if (mx + 1 == lx && my + 1 == ly) continue;  // (X,Y) = (V_l, V_r) excluded
      VertexSet y;
      for (size_t i = 0; i < right.size(); ++i)
        if (my & (1u << i)) y.insert(right[i]);
      EdgeSet s_y = incident_edges(node.right_separator, y);
      int d = k + static_cast<int>(s_x.size()) + static_cast<int>(s_y.size()) - sep_left - sep_right;
      if (d <= 0) continue;
      result.subset_demands.push_back(GroupDemand{x, std::move(y), d, s_x, std::move(s_y)});
    }
  }
  result.flow_demand = SetDemand{node.left_boundary, node.right_boundary, node.level + 1};
  if (k - 1 >= 1)
    result.final_demand = SetDemand{node.left_boundary, node.right_boundary, k - 1};
  return result;
}

long long ratio_bound(int k) {
  if (k < 1) throw Error("ratio_bound: k must be >= 1");
  long long t = 1;
  for (int j = 2; j <= k; ++j) t = ((1LL << (2 * (j - 1))) + 1) * t + 1;
  return t;
}

namespace {

bool sets_intersect(const VertexSet& a, const VertexSet& b) {
  for (VertexId v : a)
    if (b.count(v)) return true;
  return false;
}

void merge_edges(EdgeSet& into, const EdgeSet& from) { into.insert(from.begin(), from.end()); }

EdgeSet map_edges(const EdgeSet& edges, const std::vector<EdgeId>& origin) {
  EdgeSet out;
  for (EdgeId e : edges) out.insert(origin[e]);
  return out;
}

Solution solve_sdk_impl(const Graph& g, VertexId s, VertexId t, int k, const SdkOptions& options,
                        SdkTrace* trace);

// Bridges whose removal separates s from t split the instance into a path of
// blocks; the bridges are forced and each block keeps the full demand k.
Solution solve_with_bridge_peeling(const Graph& g, VertexId s, VertexId t, int k,
                                   const SdkOptions& options, SdkTrace* trace) {
  ConnectivityReport report = two_edge_connectivity(g);
  EdgeSet separating_bridges;
  for (EdgeId b : report.bridges)
    if (!connected(g, {s}, {t}, EdgeSet{b})) separating_bridges.insert(b);
  if (separating_bridges.empty())
    throw Error("bridge peeling: no separating bridge found");  // caller guarantees lambda = 1

  if (trace) merge_edges(trace->forced_bridges, separating_bridges);
  EdgeSet result = separating_bridges;

  // Walk the components left by removing the separating bridges, solving
  // between the entry and exit vertex of each.
  std::vector<int> comp(g.vertex_count(), -1);
  int comp_count = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] != -1) continue;
    std::vector<VertexId> stack{v};
    comp[v] = comp_count;
    while (!stack.empty()) {
      VertexId w = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(w)) {
        if (separating_bridges.count(e)) continue;
        VertexId u = g.edge(e).other(w);
        if (comp[u] == -1) {
          comp[u] = comp_count;
          stack.push_back(u);
        }
      }
    }
    ++comp_count;
  }
  std::map<int, VertexId> entry, exit;
  entry[comp[s]] = s;
  exit[comp[t]] = t;
  // Orient each bridge along the s-t direction: the endpoint on the s-side
  // component is that component's exit, the other endpoint an entry.
  for (EdgeId b : separating_bridges) {
    const Edge& e = g.edge(b);
    // Removing b separates s and t; the endpoint reachable from s is exit.
    VertexSet side = reachable_set(g, {s}, EdgeSet{b});
    VertexId near = side.count(e.u) ? e.u : e.v;
    VertexId far = g.edge(b).other(near);
    exit[comp[near]] = near;
    entry[comp[far]] = far;
  }
  for (int c = 0; c < comp_count; ++c) {
    auto it_in = entry.find(c);
    auto it_out = exit.find(c);
    if (it_in == entry.end() || it_out == exit.end()) continue;  // off the s-t spine
    if (it_in->second == it_out->second) continue;
    VertexSet members;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (comp[v] == c) members.insert(v);
    SubgraphView view = induced_subgraph(g, members);
    // Nested solves run on derived graphs whose ids do not match the root;
    // the trace records this level only.
    Solution sub = solve_sdk_impl(view.graph, view.vertex_image[it_in->second],
                                  view.vertex_image[it_out->second], k, options, nullptr);
    merge_edges(result, map_edges(sub.edges, view.edge_origin));
  }
  return g.solution_for(std::move(result));
}

Solution solve_sdk_impl(const Graph& g, VertexId s, VertexId t, int k, const SdkOptions& options,
                        SdkTrace* trace) {
  if (k < 1) throw Error("solve_sdk: k must be >= 1");
  if (k > options.max_k) throw Error("solve_sdk: k exceeds the configured gate");
  if (s == t) throw Error("solve_sdk: s and t coincide");

  const int lam = lambda(g, s, t);
  if (lam >= k) {
    auto flow = min_cost_flow(g, s, t, k);
    if (!flow) throw Error("solve_sdk: internal error, flow below lambda");
    return *flow;
  }
  if (lam == 0) return Solution{};  // demand is vacuous: s,t disconnected in G
  // Remaining cases: 1 <= lambda < k, so k >= 2.
  if (lam == 1) {
    if (!options.bridge_peeling)
      throw Error("solve_sdk: instance has a terminal-separating bridge (bridge peeling disabled)");
    return solve_with_bridge_peeling(g, s, t, k, options, trace);
  }

  // Relative demand with lambda >= 2; k == 2 cannot reach here.
  HierarchicalDecomposition decomp = build_hierarchy(g, s, t, k, false);
  EdgeSet result = decomp.all_separator_edges;
  if (trace) {
    merge_edges(trace->separator_edges, decomp.all_separator_edges);
    trace->decomposition = decomp;
  }

  for (size_t i = 0; i < decomp.nodes.size(); ++i) {
    const HierarchyNode& node = decomp.nodes[i];
    if (node.level < 2) continue;  // subroutines run on levels 2..k-1
    SubgraphView comp = induced_subgraph(g, node.vertices);
    GroupDemandSet demands = group_demands(g, decomp, static_cast<int>(i), k);
    SdkContribution contribution;
    contribution.level = node.level;
    contribution.node_index = static_cast<int>(i);

    std::map<std::tuple<VertexSet, VertexSet, int>, EdgeSet> memo;
    auto sub_solve = [&](const VertexSet& x_root, const VertexSet& y_root, int d) -> EdgeSet {
      auto key = std::make_tuple(x_root, y_root, d);
      auto found = memo.find(key);
      if (found != memo.end()) return found->second;
      VertexSet x_local, y_local;
      for (VertexId v : x_root) x_local.insert(comp.vertex_image[v]);
      for (VertexId v : y_root) y_local.insert(comp.vertex_image[v]);
      ContractionView contracted = contract(comp.graph, {x_local, y_local});
      VertexId x = contracted.vertex_image[*x_local.begin()];
      VertexId y = contracted.vertex_image[*y_local.begin()];
      EdgeSet edges;
      if (d == 1) {
        if (connected(contracted.graph, {x}, {y}, EdgeSet{})) {
          auto path = shortest_path(contracted.graph, x, y);
          if (path) edges = map_edges(path->edges, contracted.edge_origin);
        }
      } else {
        Solution sub = solve_sdk_impl(contracted.graph, x, y, d, options, nullptr);
        edges = map_edges(sub.edges, contracted.edge_origin);
      }
      EdgeSet root_edges = map_edges(edges, comp.edge_origin);
      memo.emplace(std::move(key), root_edges);
      return root_edges;
    };

    for (const GroupDemand& gd : demands.subset_demands) {
      if (sets_intersect(gd.x, gd.y)) continue;  // trivially satisfied
      if (gd.d >= k) throw Error("solve_sdk: internal error, generated demand of size k");
      EdgeSet add = sub_solve(gd.x, gd.y, gd.d);
      if (gd.d == 1)
        merge_edges(contribution.shortest_path_edges, add);
      else
        merge_edges(contribution.recursive_edges, add);
      merge_edges(result, add);
    }

    if (!sets_intersect(node.left_boundary, node.right_boundary)) {
      EdgeSet final_edges = sub_solve(node.left_boundary, node.right_boundary, k - 1);
      merge_edges(contribution.final_recursive_edges, final_edges);
      merge_edges(result, final_edges);

      VertexSet x_local, y_local;
      for (VertexId v : node.left_boundary) x_local.insert(comp.vertex_image[v]);
      for (VertexId v : node.right_boundary) y_local.insert(comp.vertex_image[v]);
      auto flow = min_cost_flow_sets(comp.graph, x_local, y_local, node.level + 1);
      if (!flow)
        throw Error("solve_sdk: internal error, component lacks the guaranteed flow");
      EdgeSet flow_edges = map_edges(flow->edges, comp.edge_origin);
      merge_edges(contribution.flow_edges, flow_edges);
      merge_edges(result, flow_edges);
    }
    if (trace) trace->contributions.push_back(std::move(contribution));
  }
  return g.solution_for(std::move(result));
}

}  // namespace

Solution solve_sdk(const Graph& g, VertexId s, VertexId t, int k, const SdkOptions& options,
                   SdkTrace* trace) {
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
    throw Error("solve_sdk: terminal out of range");
  if (options.require_root_2ec && !is_2_edge_connected(g))
    throw Error("solve_sdk: root instance must be 2-edge-connected");
  return solve_sdk_impl(g, s, t, k, options, trace);
}

}  // namespace relnet
