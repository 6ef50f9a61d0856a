#include "relnet/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "relnet/flow.hpp"
#include "relnet/sdk.hpp"

namespace relnet {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
  return r;
}

// Lexicographic combinations of {0..m-1}, size fixed. fn returns false to stop.
template <typename Fn>
bool for_each_combination(int m, int size, Fn&& fn) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  if (size > m) return true;
  for (;;) {
    if (!fn(idx)) return false;
    int i = size - 1;
    while (i >= 0 && idx[i] == m - size + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool subset_connected(const Graph& g, const std::vector<char>& member, VertexId start) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  int visited = 1;
  int want = 0;
  for (char c : member) want += c;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.edge(e).other(v);
      if (member[w] && !seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == want;
}

}  // namespace

FeasibilityReport feasible_by_fault_enumeration(const Graph& g, const EdgeSet& h,
                                                const std::vector<SetDemand>& demands,
                                                const OracleCaps& caps) {
  const int m = g.edge_count();
  for (EdgeId e : h)
    if (e < 0 || e >= m) throw Error("fault enumeration: solution edge out of range");

  std::vector<char> not_in_h(m, 1);
  for (EdgeId e : h) not_in_h[e] = 0;

  FeasibilityReport report;
  for (const SetDemand& demand : demands) {
    long long total = 0;
    for (int j = 0; j < demand.d; ++j) total += binomial(m, j);
    if (total > caps.max_fault_sets)
      throw CapExceeded("fault enumeration: " + std::to_string(total) + " fault sets exceed cap");

    std::vector<char> removed_g(m, 0);
    std::vector<char> removed_h = not_in_h;
    for (int size = 0; size < demand.d; ++size) {
      bool ok = for_each_combination(m, size, [&](const std::vector<int>& idx) {
        ++report.checked_fault_sets;
        for (int e : idx) removed_g[e] = 1, removed_h[e] = 1;
        bool bad = connected(g, demand.x, demand.y, removed_g) &&
                   !connected(g, demand.x, demand.y, removed_h);
        if (bad) {
          EdgeSet faults(idx.begin(), idx.end());
          report.feasible = false;
          report.witness = Witness{demand, std::move(faults)};
        }
        for (int e : idx) removed_g[e] = 0, removed_h[e] = not_in_h[e];
        return !bad;
      });
      if (!ok) return report;
    }
  }
  return report;
}

FeasibilityReport feasible_by_fault_enumeration(const Graph& g, const EdgeSet& h,
                                                const std::vector<Demand>& demands,
                                                const OracleCaps& caps) {
  std::vector<SetDemand> set_demands;
  set_demands.reserve(demands.size());
  for (const Demand& d : demands) set_demands.push_back(SetDemand{{d.s}, {d.t}, d.k});
  return feasible_by_fault_enumeration(g, h, set_demands, caps);
}

FeasibilityReport feasible_by_cut_cover(const Graph& g, const EdgeSet& h, const Demand& demand,
                                        const OracleCaps& caps) {
  const int n = g.vertex_count();
  if (demand.s == demand.t) throw Error("cut cover: s and t coincide");
  long long subsets = 1LL << std::max(0, n - 2);
  if (subsets > caps.max_vertex_subsets)
    throw CapExceeded("cut cover: 2^(n-2) vertex subsets exceed cap");

  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v)
    if (v != demand.s && v != demand.t) others.push_back(v);

  FeasibilityReport report;
  std::vector<char> in_h(g.edge_count(), 0);
  for (EdgeId e : h) in_h[e] = 1;
  std::vector<char> member(n, 0);
  for (uint64_t mask = 0; mask < static_cast<uint64_t>(subsets); ++mask) {
    std::fill(member.begin(), member.end(), 0);
    member[demand.s] = 1;
    for (size_t i = 0; i < others.size(); ++i)
      if (mask & (1ull << i)) member[others[i]] = 1;
    ++report.checked_fault_sets;

    if (!subset_connected(g, member, demand.s)) continue;
    std::vector<char> complement(n, 0);
    for (VertexId v = 0; v < n; ++v) complement[v] = !member[v];
    if (!subset_connected(g, complement, demand.t)) continue;

    int d_g = 0, d_h = 0;
    EdgeSet h_cross;
    for (const Edge& e : g.edges()) {
      if (member[e.u] != member[e.v]) {
        ++d_g;
        if (in_h[e.id]) {
          ++d_h;
          h_cross.insert(e.id);
        }
      }
    }
    if (d_h < std::min(demand.k, d_g)) {
      report.feasible = false;
      report.witness = Witness{SetDemand{{demand.s}, {demand.t}, demand.k}, std::move(h_cross)};
      return report;
    }
  }
  return report;
}

bool satisfies_snd(const Graph& g, const EdgeSet& h, const std::vector<Demand>& demands) {
  EdgeSubgraphView view = edge_subgraph(g, h);
  for (const Demand& d : demands)
    if (lambda(view.graph, d.s, d.t) < d.k) return false;
  return true;
}

namespace {

struct CutConstraint {
  uint64_t mask = 0;
  int rhs = 0;
};

// Necessary conditions for relative feasibility: over every G-minimal st-set
// A, any feasible H must keep d_H(A) >= min(k, d_G(A)).
std::vector<CutConstraint> necessary_cut_constraints(const Graph& g,
                                                     const std::vector<Demand>& demands,
                                                     const OracleCaps& caps) {
  const int n = g.vertex_count();
  long long subsets = 1LL << std::max(0, n - 2);
  if (subsets > caps.max_vertex_subsets)
    throw CapExceeded("exact optimum: vertex subset enumeration exceeds cap");
  std::map<uint64_t, int> best;
  std::vector<char> member(n, 0), complement(n, 0);
  for (const Demand& demand : demands) {
    std::vector<VertexId> others;
    for (VertexId v = 0; v < n; ++v)
      if (v != demand.s && v != demand.t) others.push_back(v);
    for (uint64_t mask = 0; mask < static_cast<uint64_t>(subsets); ++mask) {
      std::fill(member.begin(), member.end(), 0);
      member[demand.s] = 1;
      for (size_t i = 0; i < others.size(); ++i)
        if (mask & (1ull << i)) member[others[i]] = 1;
      if (!subset_connected(g, member, demand.s)) continue;
      for (VertexId v = 0; v < n; ++v) complement[v] = !member[v];
      if (!subset_connected(g, complement, demand.t)) continue;
      uint64_t cut = 0;
      int d_g = 0;
      for (const Edge& e : g.edges())
        if (member[e.u] != member[e.v]) {
          cut |= 1ull << e.id;
          ++d_g;
        }
      int rhs = std::min(demand.k, d_g);
      if (rhs <= 0) continue;
      auto [it, inserted] = best.emplace(cut, rhs);
      if (!inserted) it->second = std::max(it->second, rhs);
    }
  }
  std::vector<CutConstraint> out;
  out.reserve(best.size());
  for (auto& [mask, rhs] : best) out.push_back({mask, rhs});
  return out;
}

struct ExactSearch {
  const Graph& g;
  const std::vector<Demand>& demands;
  const OracleCaps& caps;
  std::vector<CutConstraint> constraints;
  std::vector<EdgeId> order;  // branching order: weight desc, id asc
  double best_weight;
  uint64_t best_mask = 0;

  ExactSearch(const Graph& graph, const std::vector<Demand>& ds, const OracleCaps& c)
      : g(graph), demands(ds), caps(c) {
    constraints = necessary_cut_constraints(g, demands, caps);
    order.resize(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      return g.edge(a).weight > g.edge(b).weight;
    });
    best_weight = g.total_weight() + 1.0;
  }

  bool prune(uint64_t chosen, uint64_t available, double weight) const {
    if (weight >= best_weight) return true;
    double needed = 0.0;
    for (const CutConstraint& c : constraints) {
      if (std::popcount(available & c.mask) < c.rhs) return true;
      int deficit = c.rhs - std::popcount(chosen & c.mask);
      if (deficit <= 0) continue;
      // Cheapest completion for this single constraint is a valid bound.
      std::vector<double> weights;
      uint64_t candidates = (available & ~chosen) & c.mask;
      while (candidates) {
        int e = std::countr_zero(candidates);
        candidates &= candidates - 1;
        weights.push_back(g.edge(e).weight);
      }
      std::sort(weights.begin(), weights.end());
      double add = 0.0;
      for (int i = 0; i < deficit; ++i) add += weights[i];
      needed = std::max(needed, add);
    }
    return weight + needed >= best_weight;
  }

  void run(size_t pos, uint64_t chosen, uint64_t available, double weight) {
    if (prune(chosen, available, weight)) return;
    if (pos == order.size()) {
      EdgeSet edges;
      uint64_t rest = chosen;
      while (rest) {
        edges.insert(std::countr_zero(rest));
        rest &= rest - 1;
      }
      if (feasible_by_fault_enumeration(g, edges, demands, caps).feasible && weight < best_weight) {
        best_weight = weight;
        best_mask = chosen;
      }
      return;
    }
    uint64_t bit = 1ull << order[pos];
    run(pos + 1, chosen | bit, available, weight + g.edge(order[pos]).weight);
    run(pos + 1, chosen, available & ~bit, weight);
  }
};

}  // namespace

Solution exact_optimum(const Graph& g, const std::vector<Demand>& demands, const OracleCaps& caps) {
  if (g.edge_count() > 62 || (1LL << g.edge_count()) > caps.max_edge_subsets)
    throw CapExceeded("exact optimum: 2^m edge subsets exceed cap");
  ExactSearch search(g, demands, caps);
  uint64_t all = g.edge_count() == 0 ? 0 : (~0ull >> (64 - g.edge_count()));
  search.run(0, 0, all, 0.0);
  EdgeSet edges;
  uint64_t rest = search.best_mask;
  while (rest) {
    edges.insert(std::countr_zero(rest));
    rest &= rest - 1;
  }
  return g.solution_for(std::move(edges));
}

std::vector<ImportantSeparator> brute_force_important_separators(const Graph& g, const VertexSet& x,
                                                                 const VertexSet& y, int d,
                                                                 const OracleCaps& caps) {
  if (g.edge_count() > caps.sep_max_edges)
    throw CapExceeded("brute-force separators: edge count exceeds cap");
  if (d > caps.sep_max_size) throw CapExceeded("brute-force separators: size bound exceeds cap");
  for (VertexId v : x)
    if (y.count(v)) throw Error("brute-force separators: X and Y intersect");

  const int m = g.edge_count();
  struct Candidate {
    EdgeSet edges;
    VertexSet reach;
  };
  std::vector<Candidate> separators;
  for (int size = 0; size <= d; ++size) {
    for_each_combination(m, size, [&](const std::vector<int>& idx) {
      EdgeSet s(idx.begin(), idx.end());
      if (!connected(g, x, y, s)) separators.push_back({std::move(s), {}});
      return true;
    });
  }
  for (Candidate& c : separators) c.reach = reachable_set(g, x, c.edges);

  std::vector<ImportantSeparator> out;
  for (const Candidate& c : separators) {
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
    for (const Candidate& other : separators) {
      if (other.edges.size() <= c.edges.size() && other.reach != c.reach &&
          std::includes(c.reach.begin(), c.reach.end(), other.reach.begin(), other.reach.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(ImportantSeparator{c.edges, c.reach});
  }
  std::sort(out.begin(), out.end(), [](const ImportantSeparator& a, const ImportantSeparator& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

std::pair<bool, bool> check_structure_theorem(const Graph& g, const EdgeSet& h, VertexId s,
                                              VertexId t, int k, const OracleCaps& caps) {
  bool lhs = feasible_by_fault_enumeration(g, h, std::vector<Demand>{{s, t, k}}, caps).feasible;

  HierarchicalDecomposition decomp = build_hierarchy(g, s, t, k);
  bool rhs = std::includes(h.begin(), h.end(), decomp.all_separator_edges.begin(),
                           decomp.all_separator_edges.end());
  for (size_t i = 0; rhs && i < decomp.nodes.size(); ++i) {
    const HierarchyNode& node = decomp.nodes[i];
    SubgraphView comp = induced_subgraph(g, node.vertices);
    EdgeSet h_comp;
    for (EdgeId ce = 0; ce < comp.graph.edge_count(); ++ce)
      if (h.count(comp.edge_origin[ce])) h_comp.insert(ce);

    GroupDemandSet demands = group_demands(g, decomp, static_cast<int>(i), k);
    std::vector<SetDemand> mapped;
    for (const SetDemand& sd : demands.flatten()) {
      SetDemand local;
      local.d = sd.d;
      for (VertexId v : sd.x) local.x.insert(comp.vertex_image[v]);
      for (VertexId v : sd.y) local.y.insert(comp.vertex_image[v]);
      mapped.push_back(std::move(local));
    }
    if (!feasible_by_fault_enumeration(comp.graph, h_comp, mapped, caps).feasible) rhs = false;
  }
  return {lhs, rhs};
}

}  // namespace relnet
