#include "relnet/cactus.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "relnet/flow.hpp"

namespace relnet {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ThreeClassPartition three_classes(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw Error("three_classes: empty graph");
  if (static_cast<int>(reachable_set(g, {0}, EdgeSet{}).size()) != n)
    throw Error("three_classes: graph is disconnected");

  Dsu dsu(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (dsu.find(u) == dsu.find(v)) continue;  // resolved by transitivity
      if (lambda(g, u, v) >= 3) dsu.unite(u, v);
    }

  ThreeClassPartition partition;
  partition.class_of.assign(n, -1);
  std::map<int, int> index_of_root;
  for (VertexId v = 0; v < n; ++v) {
    int root = dsu.find(v);
    auto [it, inserted] = index_of_root.emplace(root, static_cast<int>(partition.classes.size()));
    if (inserted) partition.classes.emplace_back();
    partition.classes[it->second].insert(v);
    partition.class_of[v] = it->second;
  }
  // Ascending scan already orders classes by smallest member.
  return partition;
}

namespace {

// Blocks of the cactus multigraph. In a bridgeless cactus every block is a
// cycle, so the blocks are exactly the cactus cycles.
struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> blocks;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

  void dfs(VertexId v, EdgeId via) {
    disc[v] = low[v] = timer++;
    bool via_skipped = false;
    for (EdgeId e : g.incident(v)) {
      if (e == via && !via_skipped) {
        via_skipped = true;
        continue;
      }
      VertexId w = g.edge(e).other(v);
      if (disc[w] == -1) {
        edge_stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<EdgeId> block;
          for (;;) {
            EdgeId top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

// Orders a block's edges by walking the cycle, starting at the smallest
// vertex along its smallest incident block edge.
std::vector<EdgeId> order_cycle(const Graph& g, std::vector<EdgeId> block) {
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : block) {
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  for (auto& [v, list] : at) {
    if (list.size() != 2) throw Error("cactus: block is not a cycle");
    std::sort(list.begin(), list.end());
  }
  VertexId start = at.begin()->first;
  std::vector<EdgeId> ordered;
  std::set<EdgeId> used;
  VertexId v = start;
  EdgeId e = at[start][0];
  for (;;) {
    ordered.push_back(e);
    used.insert(e);
    v = g.edge(e).other(v);
    if (v == start) break;
    const auto& list = at[v];
    e = used.count(list[0]) ? list[1] : list[0];
  }
  if (ordered.size() != block.size()) throw Error("cactus: block walk failed");
  return ordered;
}

}  // namespace

CactusModel build_cactus(const Graph& g) {
  ConnectivityReport report = two_edge_connectivity(g);
  if (!report.two_edge_connected) {
    std::string msg = "build_cactus: graph is not 2-edge-connected; bridges:";
    if (!report.connected) msg = "build_cactus: graph is disconnected";
    for (EdgeId b : report.bridges) msg += " " + std::to_string(b);
    throw Error(msg);
  }

  CactusModel model;
  model.classes = three_classes(g);
  std::vector<VertexSet> parts(model.classes.classes.begin(), model.classes.classes.end());
  ContractionView view = contract(g, parts);
  // contract() numbers parts by smallest member, matching the class order.
  model.node_for_vertex.assign(g.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) model.node_for_vertex[v] = view.vertex_image[v];
  for (size_t c = 0; c < model.classes.classes.size(); ++c) {
    VertexId member = *model.classes.classes[c].begin();
    if (model.node_for_vertex[member] != static_cast<int>(c))
      throw Error("build_cactus: class/node numbering mismatch");
  }
  model.cactus_graph = view.graph;
  model.edge_origin = view.edge_origin;
  for (EdgeId ce = 0; ce < model.cactus_graph.edge_count(); ++ce) {
    const Edge& orig = g.edge(model.edge_origin[ce]);
    model.original_endpoints.emplace_back(orig.u, orig.v);
  }

  if (model.cactus_graph.edge_count() > 0) {
    BlockFinder finder(model.cactus_graph);
    finder.dfs(0, -1);
    for (auto& block : finder.blocks)
      model.cycles.push_back(order_cycle(model.cactus_graph, std::move(block)));
  }
  model.cycle_of_edge.assign(model.cactus_graph.edge_count(), -1);
  for (size_t c = 0; c < model.cycles.size(); ++c)
    for (EdgeId e : model.cycles[c]) {
      if (model.cycle_of_edge[e] != -1) throw Error("cactus: edge on two cycles");
      model.cycle_of_edge[e] = static_cast<int>(c);
    }
  return model;
}

namespace {

// Path in the block-cut tree between the blocks containing two cactus nodes;
// returns the block indices along it, in order.
std::vector<int> chain_blocks(const CactusModel& model, int ns, int nt) {
  const int num_cycles = static_cast<int>(model.cycles.size());
  std::vector<std::vector<int>> blocks_of_node(model.cactus_graph.vertex_count());
  for (int c = 0; c < num_cycles; ++c) {
    std::set<int> nodes;
    for (EdgeId e : model.cycles[c]) {
      nodes.insert(model.cactus_graph.edge(e).u);
      nodes.insert(model.cactus_graph.edge(e).v);
    }
    for (int v : nodes) blocks_of_node[v].push_back(c);
  }
  // Tree nodes: 0..num_cycles-1 blocks, then one node per cactus vertex.
  const int total = num_cycles + model.cactus_graph.vertex_count();
  std::vector<std::vector<int>> adj(total);
  for (int v = 0; v < model.cactus_graph.vertex_count(); ++v)
    for (int c : blocks_of_node[v]) {
      adj[c].push_back(num_cycles + v);
      adj[num_cycles + v].push_back(c);
    }
  int source = num_cycles + ns;
  int target = num_cycles + nt;
  std::vector<int> prev(total, -2);
  std::queue<int> queue;
  prev[source] = -1;
  queue.push(source);
  while (!queue.empty() && prev[target] == -2) {
    int v = queue.front();
    queue.pop();
    for (int w : adj[v])
      if (prev[w] == -2) {
        prev[w] = v;
        queue.push(w);
      }
  }
  if (prev[target] == -2) throw Error("st_chain: cactus is disconnected");
  std::vector<int> path_blocks;
  for (int v = target; v != -1; v = prev[v])
    if (v < num_cycles) path_blocks.push_back(v);
  std::reverse(path_blocks.begin(), path_blocks.end());
  return path_blocks;
}

}  // namespace

std::optional<StChain> st_chain(const CactusModel& cactus, VertexId s, VertexId t) {
  if (s == t) throw Error("st_chain: s and t coincide");
  int ns = cactus.node_for_vertex.at(s);
  int nt = cactus.node_for_vertex.at(t);
  if (ns == nt) return std::nullopt;  // lambda(s,t) >= 3: ordinary demand

  StChain chain;
  chain.s = s;
  chain.t = t;
  chain.cycles = chain_blocks(cactus, ns, nt);

  std::map<int, std::vector<EdgeId>> attach;  // cactus node -> cactus chain edges
  std::map<int, int> cycles_hit;              // cactus node -> number of chain cycles
  for (int c : chain.cycles) {
    std::set<int> nodes_on_cycle;
    for (EdgeId ce : cactus.cycles[c]) {
      chain.forced_edges.insert(cactus.edge_origin[ce]);
      const Edge& edge = cactus.cactus_graph.edge(ce);
      attach[edge.u].push_back(ce);
      attach[edge.v].push_back(ce);
      nodes_on_cycle.insert(edge.u);
      nodes_on_cycle.insert(edge.v);
    }
    for (int v : nodes_on_cycle) cycles_hit[v] += 1;
  }

  for (auto& [node, cactus_edges] : attach) {
    RelevantClass rc;
    rc.class_index = node;
    rc.members = cactus.classes.classes.at(node);
    for (EdgeId ce : cactus_edges) {
      rc.attachment_edges.push_back(cactus.edge_origin[ce]);
      auto [ou, ov] = cactus.original_endpoints[ce];
      rc.attachment_nodes.insert(rc.members.count(ou) ? ou : ov);
    }
    std::sort(rc.attachment_edges.begin(), rc.attachment_edges.end());
    rc.is_central = (node == ns) || (node == nt) || cycles_hit[node] >= 2;
    if (rc.members.count(s)) rc.attachment_nodes.insert(s);
    if (rc.members.count(t)) rc.attachment_nodes.insert(t);
    chain.relevant_classes.push_back(std::move(rc));
  }
  return chain;
}

std::vector<Demand> chain_star_demands(const StChain& chain) {
  std::vector<Demand> out;
  for (const RelevantClass& rc : chain.relevant_classes) {
    if (rc.attachment_nodes.size() < 2) continue;
    VertexId center = *rc.attachment_nodes.begin();
    for (VertexId v : rc.attachment_nodes)
      if (v != center) out.push_back(Demand{center, v, 3});
  }
  return out;
}

std::optional<std::vector<Demand>> ordinary_demand_set(const Graph& g, VertexId s, VertexId t) {
  CactusModel cactus = build_cactus(g);
  auto chain = st_chain(cactus, s, t);
  if (!chain) return std::nullopt;
  return chain_star_demands(*chain);
}

std::vector<ComponentInstance> extract_components(const Graph& g, const StChain& chain) {
  std::vector<ComponentInstance> out;
  for (const RelevantClass& rc : chain.relevant_classes) {
    EdgeSet attachment(rc.attachment_edges.begin(), rc.attachment_edges.end());
    if (!rc.is_central) {
      if (attachment.size() != 2) throw Error("extract_components: non-central attachment arity");
      VertexSet u_candidates;
      for (EdgeId e : attachment) {
        const Edge& edge = g.edge(e);
        u_candidates.insert(rc.members.count(edge.u) ? edge.u : edge.v);
      }
      if (u_candidates.size() < 2) continue;  // both attachment edges meet one vertex
      VertexSet comp = reachable_set(g, {*rc.members.begin()}, attachment);
      SubgraphView view = induced_subgraph(g, comp);
      ComponentInstance inst;
      inst.kind = ComponentInstance::Kind::NonCentral;
      inst.class_index = rc.class_index;
      inst.graph = view.graph;
      inst.edge_origin = view.edge_origin;
      auto it = u_candidates.begin();
      inst.attach_u = view.vertex_image[*it];
      inst.attach_v = view.vertex_image[*std::next(it)];
      out.push_back(std::move(inst));
      continue;
    }

    if (attachment.size() < 2 || attachment.size() > 4)
      throw Error("extract_components: central attachment arity");
    bool contains_s = rc.members.count(chain.s) > 0;
    bool contains_t = rc.members.count(chain.t) > 0;
    std::vector<VertexSet> parts;
    int s_part = -1, t_part = -1;
    if (!contains_s) {
      s_part = static_cast<int>(parts.size());
      parts.push_back(reachable_set(g, {chain.s}, attachment));
    }
    if (!contains_t) {
      t_part = static_cast<int>(parts.size());
      parts.push_back(reachable_set(g, {chain.t}, attachment));
    }
    for (const VertexSet& part : parts)
      if (part.count(*rc.members.begin()))
        throw Error("extract_components: contracted side touches the class");

    ContractionView view = contract(g, parts);
    VertexId s_node = contains_s ? view.vertex_image[chain.s] : view.vertex_image[*parts[s_part].begin()];
    VertexId t_node = contains_t ? view.vertex_image[chain.t] : view.vertex_image[*parts[t_part].begin()];

    std::vector<std::tuple<VertexId, VertexId, double>> edges;
    std::vector<EdgeId> origin;
    for (EdgeId e = 0; e < view.graph.edge_count(); ++e) {
      const Edge& edge = view.graph.edge(e);
      edges.emplace_back(edge.u, edge.v, edge.weight);
      origin.push_back(view.edge_origin[e]);
    }
    int n = view.graph.vertex_count();
    VertexId s_final = s_node, t_final = t_node;
    if (contains_s) {
      VertexId fresh = n++;
      edges.emplace_back(fresh, s_node, 0.0);
      edges.emplace_back(fresh, s_node, 0.0);
      origin.push_back(-1);
      origin.push_back(-1);
      s_final = fresh;
    }
    if (contains_t) {
      VertexId fresh = n++;
      edges.emplace_back(fresh, t_node, 0.0);
      edges.emplace_back(fresh, t_node, 0.0);
      origin.push_back(-1);
      origin.push_back(-1);
      t_final = fresh;
    }
    ComponentInstance inst;
    inst.kind = ComponentInstance::Kind::Central;
    inst.class_index = rc.class_index;
    inst.graph = Graph(n, edges);
    inst.edge_origin = std::move(origin);
    inst.s = s_final;
    inst.t = t_final;
    for (EdgeId e : inst.graph.incident(s_final)) inst.terminals.insert(inst.graph.edge(e).other(s_final));
    for (EdgeId e : inst.graph.incident(t_final)) inst.terminals.insert(inst.graph.edge(e).other(t_final));
    if (inst.graph.incident(s_final).size() != 2 || inst.graph.incident(t_final).size() != 2)
      throw Error("extract_components: central terminal degree is not 2");
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace relnet
