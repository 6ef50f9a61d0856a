#include "relnet/separators.hpp"

#include <algorithm>
#include <queue>

#include "relnet/flow.hpp"

namespace relnet {

namespace {

// Unit-capacity flow between vertex sets with deletable edges; supports the
// farthest-cut queries the branching enumeration needs. Residual pair trick
// as in the flow engine.
struct SepFlow {
  const Graph& g;
  const std::vector<char>& deleted;
  std::vector<int> res;

  SepFlow(const Graph& graph, const std::vector<char>& deleted_flags)
      : g(graph), deleted(deleted_flags), res(2 * graph.edge_count(), 1) {}

  int run(const std::vector<char>& is_src, const std::vector<char>& is_sink, int limit) {
    int value = 0;
    while (value <= limit && augment(is_src, is_sink)) ++value;
    return value;
  }

  bool augment(const std::vector<char>& is_src, const std::vector<char>& is_sink) {
    std::vector<int> parent_arc(g.vertex_count(), -2);
    std::queue<VertexId> queue;
    VertexId reached = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (is_src[v]) {
        parent_arc[v] = -1;
        queue.push(v);
        if (is_sink[v]) throw Error("separator flow: source and sink overlap");
      }
    while (!queue.empty() && reached == -1) {
      VertexId v = queue.front();
      queue.pop();
      for (EdgeId e : g.incident(v)) {
        if (deleted[e]) continue;
        int arc = 2 * e + (g.edge(e).u == v ? 0 : 1);
        if (res[arc] == 0) continue;
        VertexId w = g.edge(e).other(v);
        if (parent_arc[w] == -2) {
          parent_arc[w] = arc;
          if (is_sink[w]) {
            reached = w;
            break;
          }
          queue.push(w);
        }
      }
    }
    if (reached == -1) return false;
    for (VertexId v = reached; parent_arc[v] != -1;) {
      int arc = parent_arc[v];
      res[arc] -= 1;
      res[arc ^ 1] += 1;
      const Edge& e = g.edge(arc >> 1);
      v = (arc & 1) ? e.v : e.u;
    }
    return true;
  }

  // Vertices from which some sink is reachable in the residual network; the
  // complement is the maximal source side over all minimum cuts.
  std::vector<char> residual_reaches_sink(const std::vector<char>& is_sink) const {
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexId> queue;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (is_sink[v]) {
        seen[v] = 1;
        queue.push(v);
      }
    while (!queue.empty()) {
      VertexId w = queue.front();
      queue.pop();
      for (EdgeId e : g.incident(w)) {
        if (deleted[e]) continue;
        // Traverse residual arcs backwards: arc v -> w usable iff res > 0.
        VertexId v = g.edge(e).other(w);
        int arc = 2 * e + (g.edge(e).u == v ? 0 : 1);
        if (res[arc] == 0 || seen[v]) continue;
        seen[v] = 1;
        queue.push(v);
      }
    }
    return seen;
  }
};

}  // namespace

std::vector<ImportantSeparator> enumerate_important_separators(const Graph& g, const VertexSet& x,
                                                               const VertexSet& y, int max_size) {
  if (x.empty() || y.empty()) throw Error("important separators: empty terminal set");
  for (VertexId v : x)
    if (y.count(v)) throw Error("important separators: X and Y intersect");
  if (max_size < 0) return {};

  // Branching enumeration in the mirrored orientation (source set = Y), then
  // a definition-level filter over the collected candidates.
  struct Rec {
    const Graph& g;
    std::vector<char> deleted;
    std::vector<char> src;
    std::vector<char> sink;
    std::vector<EdgeSet> out;

    void collect(int budget) {
      if (budget < 0) return;
      SepFlow flow(g, deleted);
      int value = flow.run(src, sink, budget);
      if (value > budget) return;
      std::vector<char> reaches_sink = flow.residual_reaches_sink(sink);
      EdgeSet cut;
      EdgeId branch_edge = -1;
      VertexId far_endpoint = -1;
      for (const Edge& e : g.edges()) {
        if (deleted[e.id]) continue;
        bool cu = reaches_sink[e.u] == 0;
        bool cv = reaches_sink[e.v] == 0;
        if (cu != cv) {
          cut.insert(e.id);
          if (branch_edge == -1) {
            branch_edge = e.id;
            far_endpoint = cu ? e.v : e.u;
          }
        }
      }
      out.push_back(cut);
      if (branch_edge == -1) return;

      deleted[branch_edge] = 1;
      size_t before = out.size();
      collect(budget - 1);
      for (size_t i = before; i < out.size(); ++i) out[i].insert(branch_edge);
      deleted[branch_edge] = 0;

      if (!sink[far_endpoint]) {
        src[far_endpoint] = 1;
        collect(budget);
        src[far_endpoint] = 0;
      }
    }
  } rec{g, std::vector<char>(g.edge_count(), 0), std::vector<char>(g.vertex_count(), 0),
        std::vector<char>(g.vertex_count(), 0), {}};
  for (VertexId v : y) rec.src[v] = 1;
  for (VertexId v : x) rec.sink[v] = 1;
  rec.collect(max_size);

  std::vector<EdgeSet> unique;
  std::sort(rec.out.begin(), rec.out.end());
  rec.out.erase(std::unique(rec.out.begin(), rec.out.end()), rec.out.end());
  for (EdgeSet& s : rec.out)
    if (static_cast<int>(s.size()) <= max_size) unique.push_back(std::move(s));

  struct Candidate {
    EdgeSet edges;
    VertexSet reach;
  };
  std::vector<Candidate> cands;
  for (EdgeSet& s : unique) {
    if (connected(g, x, y, s)) continue;  // not a separator (defensive)
    VertexSet reach = reachable_set(g, x, s);
    cands.push_back({std::move(s), std::move(reach)});
  }
  std::vector<ImportantSeparator> result;
  for (const Candidate& c : cands) {
    bool minimal = true;
    for (EdgeId e : c.edges) {
      EdgeSet smaller = c.edges;
      smaller.erase(e);
      if (!connected(g, x, y, smaller)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    bool dominated = false;
    for (const Candidate& other : cands) {
      if (other.edges.size() <= c.edges.size() && other.reach != c.reach &&
          std::includes(c.reach.begin(), c.reach.end(), other.reach.begin(), other.reach.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.push_back(ImportantSeparator{c.edges, c.reach});
  }
  std::sort(result.begin(), result.end(),
            [](const ImportantSeparator& a, const ImportantSeparator& b) {
              if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
              return a.edges < b.edges;
            });
  return result;
}

std::optional<ImportantSeparator> find_important_separator(const Graph& g, const VertexSet& x,
                                                           const VertexSet& y, int size) {
  if (size < 1) throw Error("find_important_separator: size must be >= 1");
  for (const ImportantSeparator& sep : enumerate_important_separators(g, x, y, size))
    if (static_cast<int>(sep.edges.size()) == size) return sep;
  return std::nullopt;
}

HChain build_h_chain(const Graph& g, const VertexSet& x, const VertexSet& y, int h) {
  if (h < 1) throw Error("build_h_chain: level must be >= 1");
  if (x.empty() || y.empty()) throw Error("build_h_chain: empty terminal set");
  for (VertexId v : x)
    if (y.count(v)) throw Error("build_h_chain: X and Y intersect");
  if (h > 1 && lambda_sets(g, x, y) < h)
    throw Error("build_h_chain: an (X,Y)-separator smaller than the level exists");
  if (h == 1 && !connected(g, x, y, EdgeSet{}))
    throw Error("build_h_chain: X and Y are disconnected");

  HChain chain;
  chain.level = h;
  VertexSet rest;
  for (VertexId v = 0; v < g.vertex_count(); ++v) rest.insert(v);
  VertexSet cur = x;
  for (;;) {
    bool overlap = false;
    for (VertexId v : cur)
      if (y.count(v)) overlap = true;
    std::optional<ImportantSeparator> sep;
    SubgraphView view = induced_subgraph(g, rest);
    if (!overlap) {
      VertexSet cur_local, y_local;
      for (VertexId v : cur) cur_local.insert(view.vertex_image[v]);
      for (VertexId v : y) y_local.insert(view.vertex_image[v]);
      sep = find_important_separator(view.graph, cur_local, y_local, h);
    }
    if (!sep) {
      chain.components.push_back(rest);
      chain.left_boundary.push_back(cur);
      chain.right_boundary.push_back(y);
      break;
    }
    EdgeSet sep_root;
    for (EdgeId e : sep->edges) sep_root.insert(view.edge_origin[e]);
    VertexSet comp, next_cur, right;
    for (VertexId v : sep->reachable) comp.insert(view.vertex_origin[v]);
    for (EdgeId e : sep_root) {
      const Edge& edge = g.edge(e);
      if (comp.count(edge.u)) {
        right.insert(edge.u);
        next_cur.insert(edge.v);
      } else {
        right.insert(edge.v);
        next_cur.insert(edge.u);
      }
    }
    chain.components.push_back(comp);
    chain.left_boundary.push_back(cur);
    chain.right_boundary.push_back(right);
    chain.separators.push_back(sep_root);
    VertexSet new_rest;
    for (VertexId v : rest)
      if (!comp.count(v)) new_rest.insert(v);
    rest = std::move(new_rest);
    cur = std::move(next_cur);
  }
  return chain;
}

HierarchicalDecomposition build_hierarchy(const Graph& g, VertexId s, VertexId t, int k) {
  return build_hierarchy(g, s, t, k, true);
}

HierarchicalDecomposition build_hierarchy(const Graph& g, VertexId s, VertexId t, int k,
                                          bool require_2ec) {
  if (k < 2) throw Error("build_hierarchy: k must be >= 2");
  if (s == t) throw Error("build_hierarchy: s and t coincide");
  if (require_2ec) {
    ConnectivityReport report = two_edge_connectivity(g);
    if (!report.two_edge_connected) throw Error("build_hierarchy: graph is not 2-edge-connected");
  }
  HierarchicalDecomposition decomp;
  decomp.k = k;
  decomp.s = s;
  decomp.t = t;
  HierarchyNode root;
  root.level = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) root.vertices.insert(v);
  root.left_boundary = {s};
  root.right_boundary = {t};
  decomp.nodes.push_back(std::move(root));

  for (size_t i = 0; i < decomp.nodes.size(); ++i) {
    if (decomp.nodes[i].level >= k - 1) continue;
    {
      // A component whose boundaries share a vertex admits no separator at
      // all; it stays a leaf.
      bool overlap = false;
      for (VertexId v : decomp.nodes[i].left_boundary)
        if (decomp.nodes[i].right_boundary.count(v)) overlap = true;
      if (overlap) continue;
    }
    const int h = decomp.nodes[i].level + 1;
    const HierarchyNode parent = decomp.nodes[i];  // copy: nodes vector grows
    SubgraphView view = induced_subgraph(g, parent.vertices);
    VertexSet x_local, y_local;
    for (VertexId v : parent.left_boundary) x_local.insert(view.vertex_image[v]);
    for (VertexId v : parent.right_boundary) y_local.insert(view.vertex_image[v]);
    HChain chain = build_h_chain(view.graph, x_local, y_local, h);

    size_t count = chain.components.size();
    for (size_t c = 0; c < count; ++c) {
      HierarchyNode node;
      node.level = h;
      node.parent = static_cast<int>(i);
      for (VertexId v : chain.components[c]) node.vertices.insert(view.vertex_origin[v]);
      for (VertexId v : chain.left_boundary[c]) node.left_boundary.insert(view.vertex_origin[v]);
      for (VertexId v : chain.right_boundary[c]) node.right_boundary.insert(view.vertex_origin[v]);
      if (c == 0) {
        node.left_separator = parent.left_separator;
      } else {
        for (EdgeId e : chain.separators[c - 1]) node.left_separator.insert(view.edge_origin[e]);
      }
      if (c + 1 == count) {
        node.right_separator = parent.right_separator;
      } else {
        for (EdgeId e : chain.separators[c]) node.right_separator.insert(view.edge_origin[e]);
      }
      decomp.nodes[i].children.push_back(static_cast<int>(decomp.nodes.size()));
      decomp.nodes.push_back(std::move(node));
    }
    for (const EdgeSet& sep : chain.separators)
      for (EdgeId e : sep) decomp.all_separator_edges.insert(view.edge_origin[e]);
  }
  return decomp;
}

}  // namespace relnet
