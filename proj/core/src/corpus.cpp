#include "relnet/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace relnet {

namespace fixtures {

namespace {
Graph unit_graph(int n, std::vector<std::pair<int, int>> pairs) {
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  for (auto [u, v] : pairs) edges.emplace_back(u, v, 1.0);
  return Graph(n, edges);
}
}  // namespace

Graph c4() { return unit_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph c5() { return unit_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
Graph c6() { return unit_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}); }
Graph k4() { return unit_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph diamond() { return unit_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph two_k4() {
  return unit_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                        {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                        {0, 4}, {3, 7}});
}

Graph lolly() { return unit_graph(4, {{0, 1}, {1, 2}, {1, 2}, {2, 3}}); }
Graph bowtie() { return unit_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }
Graph theta() { return unit_graph(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}); }

Graph two_triangles() {
  return unit_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {2, 5}});
}

Graph two_diamonds() {
  return unit_graph(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                        {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7},
                        {3, 4}, {0, 7}});
}

Graph wheel5() {
  return unit_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

Graph cube() {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit) {
      int w = v ^ (1 << bit);
      if (v < w) pairs.emplace_back(v, w);
    }
  return unit_graph(8, pairs);
}

std::vector<std::pair<std::string, Graph>> named_two_edge_connected() {
  return {
      {"c4", c4()},         {"c5", c5()},
      {"c6", c6()},         {"k4", k4()},
      {"diamond", diamond()}, {"two_k4", two_k4()},
      {"bowtie", bowtie()}, {"theta", theta()},
      {"two_triangles", two_triangles()}, {"two_diamonds", two_diamonds()},
      {"wheel5", wheel5()}, {"cube", cube()},
  };
}

}  // namespace fixtures

namespace {

std::vector<std::pair<int, int>> pair_slots(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  return slots;
}

Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& slots, uint32_t mask) {
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  for (size_t i = 0; i < slots.size(); ++i)
    if (mask & (1u << i)) edges.emplace_back(slots[i].first, slots[i].second, 1.0);
  return Graph(n, edges);
}

}  // namespace

void for_each_two_edge_connected(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 3 || n > 7) throw Error("for_each_two_edge_connected: n must be in [3, 7]");
  auto slots = pair_slots(n);
  uint32_t total = 1u << slots.size();
  for (uint32_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_mask(n, slots, mask);
    if (g.edge_count() < n) continue;  // 2-edge-connected needs >= n edges
    if (is_2_edge_connected(g)) fn(g);
  }
}

long long count_two_edge_connected(int n) {
  long long count = 0;
  for_each_two_edge_connected(n, [&](const Graph&) { ++count; });
  return count;
}

std::vector<Graph> two_edge_connected_iso_classes(int n) {
  if (n < 3 || n > 7) throw Error("two_edge_connected_iso_classes: n must be in [3, 7]");
  auto slots = pair_slots(n);
  std::map<std::pair<int, int>, int> slot_index;
  for (size_t i = 0; i < slots.size(); ++i) slot_index[slots[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do { perms.push_back(perm); } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<uint32_t> canon_masks;
  uint32_t total = 1u << slots.size();
  std::vector<char> seen(total, 0);
  for (uint32_t mask = 0; mask < total; ++mask) {
    if (seen[mask]) continue;
    Graph g = graph_from_mask(n, slots, mask);
    if (g.edge_count() < n || !is_2_edge_connected(g)) continue;
    uint32_t canon = mask;
    for (const auto& p : perms) {
      uint32_t relabeled = 0;
      for (size_t i = 0; i < slots.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        int a = p[slots[i].first], b = p[slots[i].second];
        if (a > b) std::swap(a, b);
        relabeled |= 1u << slot_index[{a, b}];
      }
      seen[relabeled] = 1;
      canon = std::min(canon, relabeled);
    }
    canon_masks.push_back(canon);
  }
  std::sort(canon_masks.begin(), canon_masks.end());
  std::vector<Graph> out;
  out.reserve(canon_masks.size());
  for (uint32_t mask : canon_masks) out.push_back(graph_from_mask(n, slots, mask));
  return out;
}

Graph random_two_edge_connected_multigraph(Rng& rng, int max_n, int max_m) {
  if (max_n < 4) throw Error("random_two_edge_connected_multigraph: max_n must be >= 4");
  for (;;) {
    int n = 4 + static_cast<int>(rng.below(static_cast<uint32_t>(max_n - 3)));
    int span = std::max(1, max_m - n + 1);
    int m = n + static_cast<int>(rng.below(static_cast<uint32_t>(span)));
    std::vector<std::tuple<VertexId, VertexId, double>> edges;
    // Seed with a random cycle through all vertices so most samples survive
    // the 2-edge-connectivity filter.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(static_cast<uint32_t>(i + 1))]);
    for (int i = 0; i < n; ++i) {
      double w = 1.0 + rng.below(9);
      edges.emplace_back(order[i], order[(i + 1) % n], w);
    }
    while (static_cast<int>(edges.size()) < m) {
      int u = static_cast<int>(rng.below(static_cast<uint32_t>(n)));
      int v = static_cast<int>(rng.below(static_cast<uint32_t>(n)));
      if (u == v) continue;
      edges.emplace_back(u, v, 1.0 + rng.below(9));
    }
    Graph g(n, edges);
    if (is_2_edge_connected(g)) return g;
  }
}

Graph random_connected_graph(Rng& rng, int max_n, int max_m) {
  for (;;) {
    int n = 3 + static_cast<int>(rng.below(static_cast<uint32_t>(std::max(1, max_n - 2))));
    int lo = n - 1;
    int span = std::max(1, max_m - lo + 1);
    int m = lo + static_cast<int>(rng.below(static_cast<uint32_t>(span)));
    std::vector<std::tuple<VertexId, VertexId, double>> edges;
    for (int v = 1; v < n; ++v) {
      int u = static_cast<int>(rng.below(static_cast<uint32_t>(v)));
      edges.emplace_back(u, v, 1.0 + rng.below(9));
    }
    while (static_cast<int>(edges.size()) < m) {
      int u = static_cast<int>(rng.below(static_cast<uint32_t>(n)));
      int v = static_cast<int>(rng.below(static_cast<uint32_t>(n)));
      if (u == v) continue;
      edges.emplace_back(u, v, 1.0 + rng.below(9));
    }
    Graph g(n, edges);
    if (connected(g, {0}, {n - 1}, EdgeSet{}) &&
        static_cast<int>(reachable_set(g, {0}, EdgeSet{}).size()) == n)
      return g;
  }
}

}  // namespace relnet
