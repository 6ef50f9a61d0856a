#include <doctest.h>

#include "relnet/corpus.hpp"
#include "relnet/flow.hpp"
#include "relnet/oracle.hpp"

using namespace relnet;

namespace {

// Witness replay: the reported fault set must reproduce the violation.
void check_witness(const Graph& g, const EdgeSet& h, const FeasibilityReport& report) {
  REQUIRE(report.witness.has_value());
  const Witness& w = *report.witness;
  CHECK(connected(g, w.demand.x, w.demand.y, w.faults));
  EdgeSet h_removed = w.faults;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!h.count(e)) h_removed.insert(e);
  CHECK_FALSE(connected(g, w.demand.x, w.demand.y, h_removed));
}

EdgeSet all_edges(const Graph& g) {
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.insert(e);
  return out;
}

}  // namespace

TEST_CASE("fault enumeration accepts and rejects with replayable witnesses") {
  Graph c4 = fixtures::c4();
  CHECK(feasible_by_fault_enumeration(c4, all_edges(c4), std::vector<Demand>{{0, 2, 3}}).feasible);

  EdgeSet partial{0, 1, 2};
  auto report = feasible_by_fault_enumeration(c4, partial, std::vector<Demand>{{0, 2, 3}});
  CHECK_FALSE(report.feasible);
  check_witness(c4, partial, report);

  // Accepts generalized group demands: full H satisfies (X, Y, 2), the
  // 3-edge path does not (losing e0 strands vertex 0 in H only).
  auto group_ok = feasible_by_fault_enumeration(c4, all_edges(c4),
                                                std::vector<SetDemand>{{{0}, {2, 3}, 2}});
  CHECK(group_ok.feasible);
  auto group_bad = feasible_by_fault_enumeration(c4, partial,
                                                 std::vector<SetDemand>{{{0}, {2, 3}, 2}});
  CHECK_FALSE(group_bad.feasible);
  check_witness(c4, partial, group_bad);

  OracleCaps tiny;
  tiny.max_fault_sets = 2;
  CHECK_THROWS_AS(
      feasible_by_fault_enumeration(c4, partial, std::vector<Demand>{{0, 2, 3}}, tiny),
      CapExceeded);
}

TEST_CASE("cut cover matches the hand-checked C4 example") {
  Graph c4 = fixtures::c4();
  CHECK(feasible_by_cut_cover(c4, all_edges(c4), {0, 2, 3}).feasible);
  auto report = feasible_by_cut_cover(c4, EdgeSet{0, 1, 2}, {0, 2, 3});
  CHECK_FALSE(report.feasible);
  check_witness(c4, EdgeSet{0, 1, 2}, report);
}

TEST_CASE("fault enumeration and cut cover always agree") {
  Rng rng(2024);
  int trials = 0;
  while (trials < 200) {
    Graph g = random_connected_graph(rng, 7, 12);
    EdgeSet h;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (rng.below(4) != 0) h.insert(e);
    VertexId s = static_cast<VertexId>(rng.below(g.vertex_count()));
    VertexId t = static_cast<VertexId>(rng.below(g.vertex_count()));
    if (s == t) continue;
    int k = 1 + static_cast<int>(rng.below(4));
    Demand d{s, t, k};
    bool via_faults = feasible_by_fault_enumeration(g, h, std::vector<Demand>{d}).feasible;
    bool via_cuts = feasible_by_cut_cover(g, h, d).feasible;
    CHECK(via_faults == via_cuts);
    ++trials;
  }
}

TEST_CASE("exact optimum on the fixture corpus") {
  CHECK(exact_optimum(fixtures::c4(), {{0, 2, 2}}).weight == doctest::Approx(4.0));
  CHECK(exact_optimum(fixtures::c4(), {{0, 2, 1}}).weight == doctest::Approx(2.0));
  CHECK(exact_optimum(fixtures::c4(), {{0, 2, 3}}).weight == doctest::Approx(4.0));

  // Oracle-computed optima; 5 = cheapest subgraph of K4 with three disjoint
  // 0-3 paths (terminal degrees force five edges), 12 = both K4 blocks minus
  // one non-terminal edge each plus the two bridge-pair edges.
  CHECK(exact_optimum(fixtures::k4(), {{0, 3, 3}}).weight == doctest::Approx(5.0));
  Solution two = exact_optimum(fixtures::two_k4(), {{1, 5, 3}});
  CHECK(two.weight == doctest::Approx(12.0));
  CHECK(two.edges.count(12));
  CHECK(two.edges.count(13));

  CHECK(feasible_by_fault_enumeration(fixtures::two_k4(), two.edges,
                                      std::vector<Demand>{{1, 5, 3}})
            .feasible);

  OracleCaps tiny;
  tiny.max_edge_subsets = 8;
  CHECK_THROWS_AS(exact_optimum(fixtures::c4(), {{0, 2, 2}}, tiny), CapExceeded);
}

TEST_CASE("exact optimum output is always feasible") {
  Rng rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = random_two_edge_connected_multigraph(rng, 6, 10);
    VertexId s = 0, t = g.vertex_count() - 1;
    int k = 1 + static_cast<int>(rng.below(3));
    Solution opt = exact_optimum(g, {{s, t, k}});
    CHECK(feasible_by_fault_enumeration(g, opt.edges, std::vector<Demand>{{s, t, k}}).feasible);
  }
}

TEST_CASE("brute-force important separators follow the definition") {
  auto lolly = brute_force_important_separators(fixtures::lolly(), {0}, {3}, 2);
  REQUIRE(lolly.size() == 1);
  CHECK(lolly[0].edges == EdgeSet{0});
  CHECK(lolly[0].reachable == VertexSet{0});

  auto two = brute_force_important_separators(fixtures::two_k4(), {1}, {5}, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].edges == EdgeSet{12, 13});
  CHECK(two[0].reachable == VertexSet{0, 1, 2, 3});

  CHECK(brute_force_important_separators(fixtures::k4(), {0}, {3}, 2).empty());

  OracleCaps tiny;
  tiny.sep_max_edges = 3;
  CHECK_THROWS_AS(brute_force_important_separators(fixtures::c4(), {0}, {2}, 2, tiny),
                  CapExceeded);
}
