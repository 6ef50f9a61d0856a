#include <doctest.h>

#include "relnet/corpus.hpp"
#include "relnet/flow.hpp"
#include "relnet/oracle.hpp"
#include "relnet/snd.hpp"
#include "support.hpp"

using namespace relnet;
using namespace relnet::testing;

namespace {

Graph zero_weight_bridges_two_k4() {
  Graph base = fixtures::two_k4();
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  for (const Edge& e : base.edges()) edges.emplace_back(e.u, e.v, e.id >= 12 ? 0.0 : e.weight);
  return Graph(8, edges);
}

}  // namespace

TEST_CASE("solve_snd_jain on forced fixtures") {
  Solution c4 = solve_snd_jain(fixtures::c4(), {{0, 2, 2}});
  CHECK(c4.edges.size() == 4);
  CHECK(c4.weight == doctest::Approx(4.0));

  Solution k4 = solve_snd_jain(fixtures::k4(), {{0, 1, 1}});
  CHECK(k4.weight == doctest::Approx(1.0));

  CHECK_THROWS_AS(solve_snd_jain(fixtures::c4(), {{0, 2, 3}}), Error);  // not ordinary
}

TEST_CASE("solve_snd_jain stays within twice the exact optimum") {
  // The reduced TwoK4 instance: bridge-pair edges at cost 0, demand stars
  // over both attachment sets. Oracle optimum is 10 (five unit edges per
  // block; traffic may route across the free bridges).
  Graph g = zero_weight_bridges_two_k4();
  std::vector<Demand> stars{{0, 1, 3}, {0, 3, 3}, {4, 5, 3}, {4, 7, 3}};
  Solution opt = exact_optimum(g, stars);
  CHECK(opt.weight == doctest::Approx(10.0));
  Solution jain = solve_snd_jain(g, stars);
  CHECK(satisfies_snd(g, jain.edges, stars));
  CHECK(jain.weight <= 2.0 * opt.weight + kWeightTol);
}

TEST_CASE("solve_snd_jain empirical ratio on random ordinary instances") {
  Rng rng(77);
  int done = 0;
  while (done < 10) {
    Graph g = random_two_edge_connected_multigraph(rng, 6, 11);
    VertexId s = 0, t = g.vertex_count() - 1;
    int lam = lambda(g, s, t);
    std::vector<Demand> demands{{s, t, std::min(lam, 1 + static_cast<int>(rng.below(3)))}};
    Solution approx = solve_snd_jain(g, demands);
    CHECK(satisfies_snd(g, approx.edges, demands));
    Solution opt = exact_optimum(g, demands);
    CHECK(approx.weight <= 2.0 * opt.weight + kWeightTol);
    ++done;
  }
}

TEST_CASE("kefts forced edges") {
  CHECK(kefts_forced_edges(fixtures::c4(), 2) == all_edges(fixtures::c4()));
  CHECK(kefts_forced_edges(fixtures::k4(), 2).empty());  // K4 has no cut of size <= 2
  CHECK(kefts_forced_edges(fixtures::k4(), 3) == all_edges(fixtures::k4()));
}

TEST_CASE("solve_kefts fixture values") {
  Solution c4_two = solve_kefts(fixtures::c4(), 2);
  CHECK(c4_two.edges == all_edges(fixtures::c4()));

  Solution k4_three = solve_kefts(fixtures::k4(), 3);
  CHECK(k4_three.edges == all_edges(fixtures::k4()));

  Solution c4_one = solve_kefts(fixtures::c4(), 1);
  CHECK(c4_one.weight <= 2.0 * 3.0 + kWeightTol);  // spanning connectivity, exact optimum 3
  VertexSet everyone{0, 1, 2, 3};
  EdgeSubgraphView h = edge_subgraph(fixtures::c4(), c4_one.edges);
  CHECK(reachable_set(h.graph, {0}, EdgeSet{}) == everyone);
}

TEST_CASE("solve_kefts covers min(k, d_G) on random graphs within ratio 2") {
  Rng rng(123);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = random_two_edge_connected_multigraph(rng, 6, 10);
    int k = 1 + static_cast<int>(rng.below(3));
    Solution sol = solve_kefts(g, k);
    const int n = g.vertex_count();
    // Feasibility: brute-force cut check over all sides containing vertex 0.
    for (uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
      int d_g = 0, d_h = 0;
      for (const Edge& e : g.edges()) {
        bool cu = (e.u == 0) || (mask & (1u << (e.u - 1)));
        bool cv = (e.v == 0) || (mask & (1u << (e.v - 1)));
        if (cu != cv) {
          ++d_g;
          if (sol.edges.count(e.id)) ++d_h;
        }
      }
      CHECK(d_h >= std::min(k, d_g));
    }
    // Ratio 2 against an exhaustive search over edge subsets.
    if (g.edge_count() <= 12) {
      double best = g.total_weight();
      for (uint32_t hmask = 0; hmask < (1u << g.edge_count()); ++hmask) {
        double w = 0.0;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
          if (hmask & (1u << e)) w += g.edge(e).weight;
        if (w >= best) continue;
        bool ok = true;
        for (uint32_t mask = 0; ok && mask + 1 < (1u << (n - 1)); ++mask) {
          int d_g = 0, d_h = 0;
          for (const Edge& e : g.edges()) {
            bool cu = (e.u == 0) || (mask & (1u << (e.u - 1)));
            bool cv = (e.v == 0) || (mask & (1u << (e.v - 1)));
            if (cu != cv) {
              ++d_g;
              if (hmask & (1u << e.id)) ++d_h;
            }
          }
          if (d_h < std::min(k, d_g)) ok = false;
        }
        if (ok) best = w;
      }
      CHECK(sol.weight <= 2.0 * best + kWeightTol);
    }
  }
}

TEST_CASE("weak supermodularity checks") {
  Graph c4 = fixtures::c4();
  CutRequirement c4_req = CutRequirement::kefts_residual(2, EdgeSet{});
  CHECK(check_weak_supermodularity(c4, c4_req, {0, 1}, {1, 2}) ==
        SupermodularityCheck::Supermodular);

  Graph k4 = fixtures::k4();
  CutRequirement k4_req = CutRequirement::kefts_residual(3, EdgeSet{});
  CHECK(check_weak_supermodularity(k4, k4_req, {0}, {0, 1}) ==
        SupermodularityCheck::Supermodular);

  CHECK_THROWS_AS(check_weak_supermodularity(c4, c4_req, VertexSet{}, {1, 2}), Error);
}

TEST_CASE("no weak supermodularity violations on random probes") {
  Rng rng(321);
  auto in_family = [](const Graph& g, const EdgeSet& chosen, const VertexSet& a) {
    if (a.empty() || static_cast<int>(a.size()) >= g.vertex_count()) return false;
    for (const Edge& e : g.edges()) {
      if (chosen.count(e.id)) continue;
      if ((a.count(e.u) > 0) != (a.count(e.v) > 0)) return true;
    }
    return false;
  };
  int probes = 0;
  while (probes < 200) {
    Graph g = random_two_edge_connected_multigraph(rng, 7, 12);
    int k = 1 + static_cast<int>(rng.below(3));
    EdgeSet forced = kefts_forced_edges(g, k);
    CutRequirement req = CutRequirement::kefts_residual(k, forced);
    uint32_t am = 1 + rng.below((1u << g.vertex_count()) - 2);
    uint32_t bm = 1 + rng.below((1u << g.vertex_count()) - 2);
    VertexSet a, b;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (am & (1u << v)) a.insert(v);
      if (bm & (1u << v)) b.insert(v);
    }
    if (!in_family(g, forced, a) || !in_family(g, forced, b)) continue;
    CHECK(check_weak_supermodularity(g, req, a, b) != SupermodularityCheck::Violation);
    ++probes;
  }
}
