#include "relnet/graph.hpp"

#include <algorithm>
#include <queue>

namespace relnet {

Graph::Graph(int vertex_count, const std::vector<std::tuple<VertexId, VertexId, double>>& edge_list)
    : n_(vertex_count) {
  if (vertex_count < 0) throw Error("vertex count must be nonnegative");
  incident_.resize(n_);
  edges_.reserve(edge_list.size());
  for (size_t i = 0; i < edge_list.size(); ++i) {
    auto [u, v, w] = edge_list[i];
    const std::string at = " at edge " + std::to_string(i);
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw Error("endpoint out of range" + at);
    if (u == v) throw Error("self-loop rejected" + at);
    if (w < 0) throw Error("negative weight rejected" + at);
    EdgeId id = static_cast<EdgeId>(i);
    edges_.push_back(Edge{id, u, v, w});
    incident_[u].push_back(id);
    incident_[v].push_back(id);
  }
}

Graph build_graph(int n, const std::vector<std::tuple<VertexId, VertexId, double>>& edge_list) {
  return Graph(n, edge_list);
}

double Graph::weight_of(const EdgeSet& set) const {
  double w = 0.0;
  for (EdgeId e : set) w += edge(e).weight;
  return w;
}

double Graph::total_weight() const {
  double w = 0.0;
  for (const Edge& e : edges_) w += e.weight;
  return w;
}

Solution Graph::solution_for(EdgeSet set) const {
  double w = weight_of(set);
  return Solution{std::move(set), w};
}

EdgeSet delta(const Graph& g, const VertexSet& a) {
  if (a.empty()) throw Error("delta: empty vertex set");
  if (static_cast<int>(a.size()) >= g.vertex_count()) throw Error("delta: set must be a proper subset");
  for (VertexId v : a)
    if (v < 0 || v >= g.vertex_count()) throw Error("delta: vertex out of range");
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    bool inu = a.count(e.u) > 0;
    bool inv = a.count(e.v) > 0;
    if (inu != inv) out.insert(e.id);
  }
  return out;
}

SubgraphView induced_subgraph(const Graph& g, const VertexSet& a) {
  if (a.empty()) throw Error("induced_subgraph: empty vertex set");
  SubgraphView view;
  view.vertex_image.assign(g.vertex_count(), -1);
  for (VertexId v : a) {
    if (v < 0 || v >= g.vertex_count()) throw Error("induced_subgraph: vertex out of range");
    view.vertex_image[v] = static_cast<VertexId>(view.vertex_origin.size());
    view.vertex_origin.push_back(v);
  }
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  for (const Edge& e : g.edges()) {
    VertexId u = view.vertex_image[e.u];
    VertexId v = view.vertex_image[e.v];
    if (u >= 0 && v >= 0) {
      edges.emplace_back(u, v, e.weight);
      view.edge_origin.push_back(e.id);
    }
  }
  view.graph = Graph(static_cast<int>(a.size()), edges);
  return view;
}

ContractionView contract(const Graph& g, const std::vector<VertexSet>& parts) {
  std::vector<int> part_of(g.vertex_count(), -1);
  for (size_t p = 0; p < parts.size(); ++p) {
    for (VertexId v : parts[p]) {
      if (v < 0 || v >= g.vertex_count()) throw Error("contract: vertex out of range");
      if (part_of[v] != -1) throw Error("contract: overlapping parts");
      part_of[v] = static_cast<int>(p);
    }
  }
  ContractionView view;
  view.vertex_image.assign(g.vertex_count(), -1);
  std::vector<VertexId> part_image(parts.size(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int p = part_of[v];
    if (p == -1) {
      view.vertex_image[v] = next++;
    } else if (part_image[p] == -1) {
      part_image[p] = next++;
      view.vertex_image[v] = part_image[p];
    } else {
      view.vertex_image[v] = part_image[p];
    }
  }
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  for (const Edge& e : g.edges()) {
    VertexId u = view.vertex_image[e.u];
    VertexId v = view.vertex_image[e.v];
    if (u == v) continue;  // loop created by contraction
    edges.emplace_back(u, v, e.weight);
    view.edge_origin.push_back(e.id);
  }
  view.graph = Graph(next, edges);
  return view;
}

namespace {

VertexSet reach_from(const Graph& g, const VertexSet& x, const std::vector<char>& removed_edge) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<VertexId> queue;
  for (VertexId v : x) {
    if (!seen[v]) {
      seen[v] = 1;
      queue.push(v);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (EdgeId e : g.incident(v)) {
      if (removed_edge[e]) continue;
      VertexId w = g.edge(e).other(v);
      if (!seen[w]) {
        seen[w] = 1;
        queue.push(w);
      }
    }
  }
  VertexSet out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (seen[v]) out.insert(v);
  return out;
}

}  // namespace

bool connected(const Graph& g, const VertexSet& x, const VertexSet& y,
               const std::vector<char>& removed_edge) {
  if (x.empty() || y.empty()) throw Error("connected: empty terminal set");
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<VertexId> queue;
  for (VertexId v : x) {
    if (v < 0 || v >= g.vertex_count()) throw Error("connected: vertex out of range");
    seen[v] = 1;
    queue.push(v);
  }
  for (VertexId v : y)
    if (v < 0 || v >= g.vertex_count()) throw Error("connected: vertex out of range");
  for (VertexId v : y)
    if (seen[v]) return true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (EdgeId e : g.incident(v)) {
      if (removed_edge[e]) continue;
      VertexId w = g.edge(e).other(v);
      if (!seen[w]) {
        if (y.count(w)) return true;
        seen[w] = 1;
        queue.push(w);
      }
    }
  }
  return false;
}

bool connected(const Graph& g, const VertexSet& x, const VertexSet& y, const EdgeSet& removed) {
  std::vector<char> flags(g.edge_count(), 0);
  for (EdgeId e : removed) {
    if (e < 0 || e >= g.edge_count()) throw Error("connected: edge out of range");
    flags[e] = 1;
  }
  return connected(g, x, y, flags);
}

VertexSet reachable_set(const Graph& g, const VertexSet& x, const EdgeSet& removed) {
  std::vector<char> flags(g.edge_count(), 0);
  for (EdgeId e : removed) flags[e] = 1;
  return reach_from(g, x, flags);
}

namespace {

struct BridgeDfs {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<EdgeId> bridges;
  int timer = 0;

  explicit BridgeDfs(const Graph& graph) : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

  void run(VertexId root) {
    // Iterative DFS; skips the arrival edge id once (not the parent vertex),
    // so a parallel pair is correctly treated as a cycle.
    struct Frame {
      VertexId v;
      EdgeId via;
      size_t next = 0;
      bool via_skipped = false;
    };
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.via && !f.via_skipped) {
          f.via_skipped = true;
          continue;
        }
        VertexId w = g.edge(e).other(f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        VertexId v = f.v;
        EdgeId via = f.via;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) bridges.push_back(via);
        }
      }
    }
  }
};

}  // namespace

ConnectivityReport two_edge_connectivity(const Graph& g) {
  ConnectivityReport report;
  if (g.vertex_count() == 0) {
    report.connected = false;
    report.two_edge_connected = false;
    return report;
  }
  BridgeDfs dfs(g);
  dfs.run(0);
  report.connected = std::none_of(dfs.disc.begin(), dfs.disc.end(), [](int d) { return d == -1; });
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (dfs.disc[v] == -1) dfs.run(v);
  std::sort(dfs.bridges.begin(), dfs.bridges.end());
  report.bridges = std::move(dfs.bridges);
  report.two_edge_connected = report.connected && report.bridges.empty();
  return report;
}

bool is_2_edge_connected(const Graph& g) { return two_edge_connectivity(g).two_edge_connected; }

EdgeSubgraphView edge_subgraph(const Graph& g, const EdgeSet& keep) {
  EdgeSubgraphView view;
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  for (EdgeId e : keep) {
    if (e < 0 || e >= g.edge_count()) throw Error("edge_subgraph: edge out of range");
    const Edge& edge = g.edge(e);
    edges.emplace_back(edge.u, edge.v, edge.weight);
    view.edge_origin.push_back(e);
  }
  view.graph = Graph(g.vertex_count(), edges);
  return view;
}

}  // namespace relnet

