#include "relnet/rsnd3.hpp"

#include <algorithm>

#include "relnet/cactus.hpp"
#include "relnet/flow.hpp"
#include "relnet/snd.hpp"

namespace relnet {

DemandClassification classify_demand(const Graph& g, const Demand& demand) {
  if (demand.k > 3) throw Error("classify_demand: k > 3 is routed to the single-demand solver");
  if (demand.k < 1) throw Error("classify_demand: k must be >= 1");
  if (demand.s == demand.t) throw Error("classify_demand: s and t coincide");
  DemandClassification out;
  out.demand = demand;
  out.lambda = lambda(g, demand.s, demand.t);
  out.relative = out.lambda < demand.k;
  return out;
}

namespace {

Graph with_zero_weights(const Graph& g, const EdgeSet& zeroed) {
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  for (const Edge& e : g.edges())
    edges.emplace_back(e.u, e.v, zeroed.count(e.id) ? 0.0 : e.weight);
  return Graph(g.vertex_count(), edges);
}

std::vector<Demand> normalize_demands(const Graph& g, const std::vector<Demand>& demands) {
  std::vector<Demand> out;
  for (const Demand& d : demands) {
    if (d.s == d.t) throw Error("solve_3rsnd: demand with s = t");
    if (d.k < 1 || d.k > 3) throw Error("solve_3rsnd: demand requirement must be in [1, 3]");
    if (d.s < 0 || d.s >= g.vertex_count() || d.t < 0 || d.t >= g.vertex_count())
      throw Error("solve_3rsnd: demand vertex out of range");
    out.push_back(Demand{std::min(d.s, d.t), std::max(d.s, d.t), d.k});
  }
  std::sort(out.begin(), out.end());
  std::vector<Demand> merged;
  for (const Demand& d : out) {
    if (!merged.empty() && merged.back().s == d.s && merged.back().t == d.t)
      merged.back().k = std::max(merged.back().k, d.k);
    else
      merged.push_back(d);
  }
  return merged;
}

}  // namespace

Solution solve_3rsnd(const Graph& g, const std::vector<Demand>& demands) {
  ConnectivityReport report = two_edge_connectivity(g);
  if (!report.two_edge_connected) throw Error("solve_3rsnd: graph is not 2-edge-connected");
  std::vector<Demand> merged = normalize_demands(g, demands);
  if (merged.empty()) return Solution{};

  CactusModel cactus = build_cactus(g);
  EdgeSet forced;
  std::vector<Demand> ordinary;
  for (const Demand& d : merged) {
    if (d.k < 3) {
      ordinary.push_back(d);  // 2-edge-connected input: 1- and 2-demands are ordinary
      continue;
    }
    auto chain = st_chain(cactus, d.s, d.t);
    if (!chain) {
      ordinary.push_back(d);
      continue;
    }
    forced.insert(chain->forced_edges.begin(), chain->forced_edges.end());
    for (const Demand& star : chain_star_demands(*chain)) ordinary.push_back(star);
  }

  EdgeSet result = forced;
  if (!ordinary.empty()) {
    Graph reduced = with_zero_weights(g, forced);
    Solution snd = solve_snd_jain(reduced, ordinary);
    result.insert(snd.edges.begin(), snd.edges.end());
  }
  return g.solution_for(std::move(result));
}

Solution solve_sd3_componentwise(const Graph& g, VertexId s, VertexId t) {
  ConnectivityReport report = two_edge_connectivity(g);
  if (!report.two_edge_connected)
    throw Error("solve_sd3_componentwise: graph is not 2-edge-connected");
  if (s == t) throw Error("solve_sd3_componentwise: s and t coincide");

  if (lambda(g, s, t) >= 3) {
    auto flow = min_cost_flow(g, s, t, 3);
    if (!flow) throw Error("solve_sd3_componentwise: internal error, flow below lambda");
    return *flow;
  }

  CactusModel cactus = build_cactus(g);
  auto chain = st_chain(cactus, s, t);
  if (!chain) throw Error("solve_sd3_componentwise: internal error, chain missing");

  EdgeSet result = chain->forced_edges;
  for (const ComponentInstance& inst : extract_components(g, *chain)) {
    if (inst.kind == ComponentInstance::Kind::NonCentral) {
      auto flow = min_cost_flow(inst.graph, inst.attach_u, inst.attach_v, 2);
      if (!flow)
        throw Error("solve_sd3_componentwise: non-central component lacks 2 disjoint paths");
      for (EdgeId e : flow->edges) result.insert(inst.edge_origin[e]);
      continue;
    }
    // Central component: subset 3-edge-connectivity on R via the SND solver,
    // with the terminal attachment edges treated as cost 0.
    if (inst.terminals.size() < 2) continue;
    EdgeSet zero;
    for (EdgeId e : inst.graph.incident(inst.s)) zero.insert(e);
    for (EdgeId e : inst.graph.incident(inst.t)) zero.insert(e);
    Graph reduced = with_zero_weights(inst.graph, zero);
    VertexId center = *inst.terminals.begin();
    std::vector<Demand> star;
    for (VertexId v : inst.terminals)
      if (v != center) star.push_back(Demand{center, v, 3});
    Solution sec = solve_snd_jain(reduced, star);
    for (EdgeId e : sec.edges) {
      EdgeId orig = inst.edge_origin[e];
      if (orig >= 0) result.insert(orig);
    }
  }
  return g.solution_for(std::move(result));
}

}  // namespace relnet
