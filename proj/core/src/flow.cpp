#include "relnet/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace relnet {

namespace {

// Residual pair trick for undirected unit edges: arc 2e runs u->v, arc 2e+1
// runs v->u, residuals start at (1, 1) and always sum to 2. State (0,2)
// means the edge carries flow u->v, (2,0) means v->u, (1,1) means unused.
struct UnitFlowNetwork {
  const Graph& g;
  std::vector<int> res;

  explicit UnitFlowNetwork(const Graph& graph) : g(graph), res(2 * graph.edge_count(), 1) {}

  VertexId arc_head(int arc, VertexId tail) const { return g.edge(arc >> 1).other(tail); }

  bool augment(VertexId s, VertexId t) {
    std::vector<int> parent_arc(g.vertex_count(), -2);
    std::queue<VertexId> queue;
    parent_arc[s] = -1;
    queue.push(s);
    while (!queue.empty() && parent_arc[t] == -2) {
      VertexId v = queue.front();
      queue.pop();
      for (EdgeId e : g.incident(v)) {
        int arc = 2 * e + (g.edge(e).u == v ? 0 : 1);
        if (res[arc] == 0) continue;
        VertexId w = g.edge(e).other(v);
        if (parent_arc[w] == -2) {
          parent_arc[w] = arc;
          queue.push(w);
        }
      }
    }
    if (parent_arc[t] == -2) return false;
    VertexId v = t;
    while (v != s) {
      int arc = parent_arc[v];
      res[arc] -= 1;
      res[arc ^ 1] += 1;
      VertexId tail = g.edge(arc >> 1).u;
      if ((arc & 1) != 0) tail = g.edge(arc >> 1).v;
      v = tail;
    }
    return true;
  }

  VertexSet residual_reachable(VertexId s) const {
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexId> queue;
    seen[s] = 1;
    queue.push(s);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      for (EdgeId e : g.incident(v)) {
        int arc = 2 * e + (g.edge(e).u == v ? 0 : 1);
        if (res[arc] == 0) continue;
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
};

}  // namespace

FlowResult max_flow(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.empty() || y.empty()) throw Error("max_flow: empty terminal set");
  for (VertexId v : x)
    if (y.count(v)) throw Error("max_flow: terminal sets intersect");

  ContractionView view = contract(g, {x, y});
  VertexId s = view.vertex_image[*x.begin()];
  VertexId t = view.vertex_image[*y.begin()];
  const Graph& h = view.graph;

  UnitFlowNetwork network(h);
  int value = 0;
  while (network.augment(s, t)) ++value;

  FlowResult result;
  result.value = value;
  VertexSet side = network.residual_reachable(s);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (side.count(view.vertex_image[v])) result.source_side.insert(v);
  for (EdgeId he = 0; he < h.edge_count(); ++he) {
    EdgeId orig = view.edge_origin[he];
    int fwd = network.res[2 * he];
    int bwd = network.res[2 * he + 1];
    if (fwd != bwd) {
      result.edge_usage[orig] = 1;
      bool toward_hv = (fwd == 0);
      // Map the direction back to the original edge orientation.
      const Edge& oe = g.edge(orig);
      const Edge& hedge = h.edge(he);
      bool orig_u_maps_to_tail = (view.vertex_image[oe.u] == hedge.u);
      result.toward_v[orig] = orig_u_maps_to_tail ? toward_hv : !toward_hv;
    }
    bool cross = (side.count(h.edge(he).u) > 0) != (side.count(h.edge(he).v) > 0);
    if (cross) result.min_cut.insert(orig);
  }
  return result;
}

int lambda(const Graph& g, VertexId s, VertexId t) { return max_flow(g, {s}, {t}).value; }

int lambda_sets(const Graph& g, const VertexSet& x, const VertexSet& y) {
  return max_flow(g, x, y).value;
}

namespace {

// Four residual arcs per undirected edge so that each direction has its own
// cost-w forward arc and cost(-w) reverse arc: ids 4e (u->v), 4e+1 (v->u,
// reverse of 4e), 4e+2 (v->u), 4e+3 (u->v, reverse of 4e+2).
struct CostFlowNetwork {
  const Graph& g;
  std::vector<int> cap;
  std::vector<double> cost;
  std::vector<double> potential;

  explicit CostFlowNetwork(const Graph& graph)
      : g(graph), cap(4 * graph.edge_count(), 0), cost(4 * graph.edge_count(), 0.0),
        potential(graph.vertex_count(), 0.0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      double w = g.edge(e).weight;
      cap[4 * e] = 1;
      cost[4 * e] = w;
      cost[4 * e + 1] = -w;
      cap[4 * e + 2] = 1;
      cost[4 * e + 2] = w;
      cost[4 * e + 3] = -w;
    }
  }

  VertexId tail_of(int arc) const {
    const Edge& e = g.edge(arc >> 2);
    int slot = arc & 3;  // 0: u->v, 1: v->u (rev), 2: v->u, 3: u->v (rev)
    return (slot == 1 || slot == 2) ? e.v : e.u;
  }

  VertexId head_of(int arc) const {
    const Edge& e = g.edge(arc >> 2);
    return e.other(tail_of(arc));
  }

  // Deterministic Dijkstra over reduced costs: pops in (dist, vertex id)
  // order, relaxes only on strict improvement, scans arcs in ascending id.
  bool push_one(VertexId s, VertexId t) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.vertex_count(), inf);
    std::vector<int> parent_arc(g.vertex_count(), -1);
    std::vector<char> done(g.vertex_count(), 0);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[s] = 0.0;
    queue.push({0.0, s});
    while (!queue.empty()) {
      auto [d, v] = queue.top();
      queue.pop();
      if (done[v]) continue;
      done[v] = 1;
      for (EdgeId e : g.incident(v)) {
        for (int k = 0; k < 4; ++k) {
          int arc = 4 * e + k;
          if (cap[arc] == 0 || tail_of(arc) != v) continue;
          VertexId w = head_of(arc);
          if (done[w]) continue;
          double reduced = cost[arc] + potential[v] - potential[w];
          double cand = dist[v] + reduced;
          if (cand < dist[w] - 1e-12) {
            dist[w] = cand;
            parent_arc[w] = arc;
            queue.push({cand, w});
          }
        }
      }
    }
    if (dist[t] == inf) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (dist[v] < inf) potential[v] += dist[v];
    for (VertexId v = t; v != s;) {
      int arc = parent_arc[v];
      cap[arc] -= 1;
      cap[arc ^ 1] += 1;
      v = tail_of(arc);
    }
    return true;
  }

  EdgeSet used_edges() const {
    EdgeSet out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      int fwd = 1 - cap[4 * e];
      int bwd = 1 - cap[4 * e + 2];
      if (fwd != bwd) out.insert(e);  // equal means unused or cancelling
    }
    return out;
  }
};

}  // namespace

std::optional<Solution> min_cost_flow(const Graph& g, VertexId x, VertexId y, int flow_value) {
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
    throw Error("min_cost_flow: vertex out of range");
  if (x == y) throw Error("min_cost_flow: terminals coincide");
  if (flow_value < 1) throw Error("min_cost_flow: flow value must be >= 1");
  CostFlowNetwork network(g);
  for (int i = 0; i < flow_value; ++i)
    if (!network.push_one(x, y)) return std::nullopt;
  return g.solution_for(network.used_edges());
}

std::optional<Solution> shortest_path(const Graph& g, VertexId x, VertexId y) {
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
    throw Error("shortest_path: vertex out of range");
  if (x == y) return Solution{};
  return min_cost_flow(g, x, y, 1);
}

std::optional<Solution> min_cost_flow_sets(const Graph& g, const VertexSet& x, const VertexSet& y,
                                           int flow_value) {
  if (x.empty() || y.empty()) throw Error("min_cost_flow_sets: empty terminal set");
  for (VertexId v : x)
    if (y.count(v)) throw Error("min_cost_flow_sets: terminal sets intersect");
  ContractionView view = contract(g, {x, y});
  auto inner = min_cost_flow(view.graph, view.vertex_image[*x.begin()],
                             view.vertex_image[*y.begin()], flow_value);
  if (!inner) return std::nullopt;
  EdgeSet edges;
  for (EdgeId e : inner->edges) edges.insert(view.edge_origin[e]);
  return g.solution_for(std::move(edges));
}

}  // namespace relnet
