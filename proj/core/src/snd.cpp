#include "relnet/snd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>

#include "relnet/flow.hpp"
#include "simplex.hpp"

namespace relnet {

CutRequirement CutRequirement::snd(std::vector<Demand> demands) {
  CutRequirement req;
  req.kind = Kind::Snd;
  req.demands = std::move(demands);
  return req;
}

CutRequirement CutRequirement::kefts_residual(int k, EdgeSet chosen) {
  CutRequirement req;
  req.kind = Kind::KeftsResidual;
  req.k = k;
  req.chosen = std::move(chosen);
  return req;
}

namespace {

constexpr double kHalfSlack = 1e-7;  // rounding threshold guard at the 1/2 boundary

// Max flow with fractional capacities, Edmonds-Karp on the undirected
// residual-pair representation. Only used by the separation oracle.
struct FracFlow {
  const Graph& g;
  std::vector<double> res;

  FracFlow(const Graph& graph, const std::vector<double>& caps)
      : g(graph), res(2 * graph.edge_count()) {
    for (EdgeId e = 0; e < graph.edge_count(); ++e) res[2 * e] = res[2 * e + 1] = caps[e];
  }

  double run(VertexId s, VertexId t) {
    double total = 0.0;
    for (;;) {
      std::vector<int> parent_arc(g.vertex_count(), -2);
      std::queue<VertexId> queue;
      parent_arc[s] = -1;
      queue.push(s);
      while (!queue.empty() && parent_arc[t] == -2) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId e : g.incident(v)) {
          int arc = 2 * e + (g.edge(e).u == v ? 0 : 1);
          if (res[arc] <= 1e-11) continue;
          VertexId w = g.edge(e).other(v);
          if (parent_arc[w] == -2) {
            parent_arc[w] = arc;
            queue.push(w);
          }
        }
      }
      if (parent_arc[t] == -2) return total;
      double bottleneck = std::numeric_limits<double>::infinity();
      for (VertexId v = t; parent_arc[v] != -1;) {
        int arc = parent_arc[v];
        bottleneck = std::min(bottleneck, res[arc]);
        v = (arc & 1) ? g.edge(arc >> 1).v : g.edge(arc >> 1).u;
      }
      for (VertexId v = t; parent_arc[v] != -1;) {
        int arc = parent_arc[v];
        res[arc] -= bottleneck;
        res[arc ^ 1] += bottleneck;
        v = (arc & 1) ? g.edge(arc >> 1).v : g.edge(arc >> 1).u;
      }
      total += bottleneck;
    }
  }

  VertexSet source_side(VertexId s) const {
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexId> queue;
    seen[s] = 1;
    queue.push(s);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      for (EdgeId e : g.incident(v)) {
        int arc = 2 * e + (g.edge(e).u == v ? 0 : 1);
        if (res[arc] <= 1e-11) continue;
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

struct RoundingEngine {
  const Graph& g;
  const CutRequirement& req;
  EdgeSet fixed;
  std::vector<VertexSet> pool;

  RoundingEngine(const Graph& graph, const CutRequirement& requirement, EdgeSet initial)
      : g(graph), req(requirement), fixed(std::move(initial)) {}

  int base_requirement(const VertexSet& a) const {
    if (req.kind == CutRequirement::Kind::Snd) {
      int best = 0;
      for (const Demand& d : req.demands) {
        bool sa = a.count(d.s) > 0, ta = a.count(d.t) > 0;
        if (sa != ta) best = std::max(best, d.k);
      }
      return best;
    }
    int d_g = 0;
    for (const Edge& e : g.edges())
      if ((a.count(e.u) > 0) != (a.count(e.v) > 0)) ++d_g;
    return std::min(req.k, d_g);
  }

  std::vector<double> capacities(const std::vector<double>& x_free) const {
    std::vector<double> caps(g.edge_count(), 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      caps[e] = fixed.count(e) ? 1.0 : x_free[e];
    return caps;
  }

  // Exact separation, deterministic order: smallest demand index (snd) or
  // smallest free edge id (kefts residual).
  std::vector<VertexSet> separate(const std::vector<double>& x_free) const {
    std::vector<double> caps = capacities(x_free);
    std::vector<VertexSet> violated;
    if (req.kind == CutRequirement::Kind::Snd) {
      for (const Demand& d : req.demands) {
        FracFlow flow(g, caps);
        double value = flow.run(d.s, d.t);
        if (value < d.k - kHalfSlack) violated.push_back(flow.source_side(d.s));
      }
    } else {
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (fixed.count(e)) continue;
        FracFlow flow(g, caps);
        double value = flow.run(g.edge(e).u, g.edge(e).v);
        if (value < req.k - kHalfSlack) violated.push_back(flow.source_side(g.edge(e).u));
      }
    }
    return violated;
  }

  bool add_to_pool(const std::vector<VertexSet>& cuts) {
    bool added = false;
    for (const VertexSet& a : cuts) {
      if (std::find(pool.begin(), pool.end(), a) == pool.end()) {
        pool.push_back(a);
        added = true;
      }
    }
    return added;
  }

  std::vector<double> solve_lp() const {
    detail::CoverLp lp;
    lp.costs.assign(g.edge_count(), 0.0);
    std::vector<char> free_var(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (fixed.count(e)) continue;
      free_var[e] = 1;
      lp.costs[e] = g.edge(e).weight;
    }
    for (const VertexSet& a : pool) {
      int rhs = base_requirement(a);
      std::vector<int> vars;
      for (const Edge& e : g.edges()) {
        if ((a.count(e.u) > 0) == (a.count(e.v) > 0)) continue;
        if (fixed.count(e.id))
          --rhs;
        else
          vars.push_back(e.id);
      }
      if (rhs > 0) {
        if (vars.empty()) throw Error("iterative rounding: unsatisfiable cut");
        lp.rows.emplace_back(std::move(vars), static_cast<double>(rhs));
      }
    }
    std::vector<double> x = detail::solve_cover_lp(lp);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (!free_var[e]) x[e] = 0.0;
    return x;
  }

  EdgeSet run() {
    const std::vector<double> zeros(g.edge_count(), 0.0);
    for (;;) {
      if (separate(zeros).empty()) break;  // fixed edges already cover the requirement
      std::vector<double> x_hat;
      for (;;) {
        x_hat = pool.empty() ? zeros : solve_lp();
        std::vector<VertexSet> cuts = separate(x_hat);
        if (cuts.empty()) break;
        if (!add_to_pool(cuts))
          throw Error("iterative rounding: separation returned only known cuts");
      }
      EdgeSet picked;
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!fixed.count(e) && x_hat[e] >= 0.5 - kHalfSlack) picked.insert(e);
      if (picked.empty())
        throw Error("iterative rounding: no edge at or above 1/2 in a basic solution");
      fixed.insert(picked.begin(), picked.end());
    }
    return fixed;
  }
};

}  // namespace

Solution solve_snd_jain(const Graph& g, const std::vector<Demand>& demands) {
  std::vector<Demand> cleaned;
  for (const Demand& d : demands) {
    if (d.s == d.t) throw Error("solve_snd_jain: demand with s = t");
    if (d.k < 1) throw Error("solve_snd_jain: demand with k < 1");
    Demand norm{std::min(d.s, d.t), std::max(d.s, d.t), d.k};
    cleaned.push_back(norm);
  }
  std::sort(cleaned.begin(), cleaned.end());
  cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
  // Keep only the largest requirement per pair.
  std::vector<Demand> merged;
  for (const Demand& d : cleaned) {
    if (!merged.empty() && merged.back().s == d.s && merged.back().t == d.t)
      merged.back().k = std::max(merged.back().k, d.k);
    else
      merged.push_back(d);
  }
  for (const Demand& d : merged)
    if (lambda(g, d.s, d.t) < d.k)
      throw Error("solve_snd_jain: demand is not ordinary (lambda < k)");
  if (merged.empty()) return Solution{};

  CutRequirement req = CutRequirement::snd(merged);
  RoundingEngine engine(g, req, EdgeSet{});
  EdgeSet edges = engine.run();

  EdgeSubgraphView check = edge_subgraph(g, edges);
  for (const Demand& d : merged)
    if (lambda(check.graph, d.s, d.t) < d.k)
      throw Error("solve_snd_jain: internal error, output violates a demand");
  return g.solution_for(std::move(edges));
}

EdgeSet kefts_forced_edges(const Graph& g, int k) {
  if (k < 1) throw Error("kefts_forced_edges: k must be >= 1");
  const int n = g.vertex_count();
  EdgeSet forced;
  if (n <= 12) {
    // All cuts of size <= k by enumerating sides containing vertex 0.
    std::vector<char> member(n, 0);
    for (uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
      member[0] = 1;
      for (int v = 1; v < n; ++v) member[v] = (mask >> (v - 1)) & 1;
      if (std::count(member.begin(), member.end(), char(1)) == n) continue;
      EdgeSet cut;
      for (const Edge& e : g.edges())
        if (member[e.u] != member[e.v]) cut.insert(e.id);
      if (static_cast<int>(cut.size()) <= k) forced.insert(cut.begin(), cut.end());
    }
  } else {
    // Exact probe: an edge lies in a cut of size <= k iff lambda(u, v) <= k.
    for (const Edge& e : g.edges())
      if (lambda(g, e.u, e.v) <= k) forced.insert(e.id);
  }
  return forced;
}

Solution solve_kefts(const Graph& g, int k) {
  if (k < 1) throw Error("solve_kefts: k must be >= 1");
  if (g.vertex_count() == 0) return Solution{};
  if (static_cast<int>(reachable_set(g, {0}, EdgeSet{}).size()) != g.vertex_count())
    throw Error("solve_kefts: graph is disconnected");

  EdgeSet forced = kefts_forced_edges(g, k);
  CutRequirement req = CutRequirement::kefts_residual(k, forced);
  RoundingEngine engine(g, req, forced);
  EdgeSet edges = engine.run();

  // Post-hoc verification by direct cut enumeration where cheap.
  if (g.vertex_count() <= 16) {
    const int n = g.vertex_count();
    std::vector<char> member(n, 0);
    for (uint64_t mask = 0; mask + 1 < (1ull << (n - 1)); ++mask) {
      member[0] = 1;
      for (int v = 1; v < n; ++v) member[v] = (mask >> (v - 1)) & 1;
      int d_g = 0, d_h = 0;
      for (const Edge& e : g.edges())
        if (member[e.u] != member[e.v]) {
          ++d_g;
          if (edges.count(e.id)) ++d_h;
        }
      if (d_h < std::min(k, d_g))
        throw Error("solve_kefts: internal error, output misses a cut requirement");
    }
  }
  return g.solution_for(std::move(edges));
}

namespace {

bool in_family(const Graph& g, const CutRequirement& req, const VertexSet& a) {
  if (a.empty() || static_cast<int>(a.size()) >= g.vertex_count()) return false;
  if (req.kind == CutRequirement::Kind::Snd) return true;
  for (const Edge& e : g.edges()) {
    if (req.chosen.count(e.id)) continue;
    if ((a.count(e.u) > 0) != (a.count(e.v) > 0)) return true;
  }
  return false;
}

int family_value(const Graph& g, const CutRequirement& req, const VertexSet& a) {
  if (req.kind == CutRequirement::Kind::Snd) {
    int best = 0;
    for (const Demand& d : req.demands) {
      bool sa = a.count(d.s) > 0, ta = a.count(d.t) > 0;
      if (sa != ta) best = std::max(best, d.k);
    }
    return best;
  }
  int d_f = 0;
  for (EdgeId e : req.chosen) {
    const Edge& edge = g.edge(e);
    if ((a.count(edge.u) > 0) != (a.count(edge.v) > 0)) ++d_f;
  }
  return req.k - d_f;
}

}  // namespace

SupermodularityCheck check_weak_supermodularity(const Graph& g, const CutRequirement& req,
                                                const VertexSet& a, const VertexSet& b) {
  if (!in_family(g, req, a) || !in_family(g, req, b))
    throw Error("check_weak_supermodularity: set outside the requirement family");

  VertexSet inter, uni, a_minus, b_minus;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(inter, inter.end()));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(uni, uni.end()));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(a_minus, a_minus.end()));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::inserter(b_minus, b_minus.end()));

  // Orientation: the covering requirement must not drop when uncrossing, so
  // the combined values bound f(A) + f(B) from above. (For k - d_F this is
  // the standard supermodularity of the negated submodular cut function.)
  int fa = family_value(g, req, a), fb = family_value(g, req, b);
  if (in_family(g, req, inter) && in_family(g, req, uni) &&
      fa + fb <= family_value(g, req, inter) + family_value(g, req, uni))
    return SupermodularityCheck::Supermodular;
  if (in_family(g, req, a_minus) && in_family(g, req, b_minus) &&
      fa + fb <= family_value(g, req, a_minus) + family_value(g, req, b_minus))
    return SupermodularityCheck::CoSupermodular;
  return SupermodularityCheck::Violation;
}

}  // namespace relnet
