#include <doctest.h>

#include <algorithm>

#include "relnet/cactus.hpp"
#include "relnet/corpus.hpp"
#include "relnet/flow.hpp"
#include "relnet/oracle.hpp"
#include "support.hpp"

using namespace relnet;
using namespace relnet::testing;

TEST_CASE("three_classes on fixtures") {
  ThreeClassPartition k4 = three_classes(fixtures::k4());
  REQUIRE(k4.classes.size() == 1);
  CHECK(k4.classes[0] == VertexSet{0, 1, 2, 3});

  ThreeClassPartition c4 = three_classes(fixtures::c4());
  CHECK(c4.classes.size() == 4);

  ThreeClassPartition two = three_classes(fixtures::two_k4());
  REQUIRE(two.classes.size() == 2);
  CHECK(two.classes[0] == VertexSet{0, 1, 2, 3});
  CHECK(two.classes[1] == VertexSet{4, 5, 6, 7});

  // Brute-force pairwise check of the partition relation.
  const Graph g = fixtures::two_k4();
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      bool same = two.class_of[u] == two.class_of[v];
      CHECK(same == (lambda(g, u, v) >= 3));
    }
}

TEST_CASE("build_cactus on fixtures") {
  CactusModel c4 = build_cactus(fixtures::c4());
  CHECK(c4.cactus_graph.vertex_count() == 4);
  REQUIRE(c4.cycles.size() == 1);
  CHECK(c4.cycles[0].size() == 4);

  CactusModel two = build_cactus(fixtures::two_k4());
  CHECK(two.cactus_graph.vertex_count() == 2);
  REQUIRE(two.cycles.size() == 1);
  EdgeSet cycle_edges;
  for (EdgeId ce : two.cycles[0]) cycle_edges.insert(two.edge_origin[ce]);
  CHECK(cycle_edges == EdgeSet{12, 13});

  CactusModel k4 = build_cactus(fixtures::k4());
  CHECK(k4.cactus_graph.vertex_count() == 1);
  CHECK(k4.cycles.empty());

  CHECK_THROWS_AS(build_cactus(fixtures::lolly()), Error);
}

TEST_CASE("same-cycle pairs are exactly the 2-cuts") {
  auto check_graph = [](const Graph& g) {
    CactusModel model = build_cactus(g);
    std::vector<EdgeSet> cactus_pairs;
    for (const auto& cycle : model.cycles)
      for (size_t i = 0; i < cycle.size(); ++i)
        for (size_t j = i + 1; j < cycle.size(); ++j)
          cactus_pairs.push_back({model.edge_origin[cycle[i]], model.edge_origin[cycle[j]]});
    std::sort(cactus_pairs.begin(), cactus_pairs.end());
    std::vector<EdgeSet> brute = brute_force_two_cuts(g);
    std::sort(brute.begin(), brute.end());
    CHECK(cactus_pairs == brute);
  };
  check_graph(fixtures::c4());
  check_graph(fixtures::two_k4());
  check_graph(fixtures::k4());
  check_graph(fixtures::bowtie());
  check_graph(fixtures::two_triangles());
  check_graph(fixtures::wheel5());

  Rng rng(5);
  for (int trial = 0; trial < 15; ++trial)
    check_graph(random_two_edge_connected_multigraph(rng, 7, 12));
}

TEST_CASE("st_chain on TwoK4 and C4; ordinary demands signal") {
  CactusModel two = build_cactus(fixtures::two_k4());
  auto chain = st_chain(two, 1, 5);
  REQUIRE(chain);
  CHECK(chain->cycles.size() == 1);
  CHECK(chain->forced_edges == EdgeSet{12, 13});
  REQUIRE(chain->relevant_classes.size() == 2);
  const RelevantClass& a = chain->relevant_classes[0];
  const RelevantClass& b = chain->relevant_classes[1];
  CHECK(a.attachment_nodes == VertexSet{0, 1, 3});
  CHECK(a.is_central);
  CHECK(b.attachment_nodes == VertexSet{4, 5, 7});
  CHECK(b.is_central);

  CactusModel c4 = build_cactus(fixtures::c4());
  auto chain_c4 = st_chain(c4, 0, 2);
  REQUIRE(chain_c4);
  CHECK(chain_c4->cycles.size() == 1);
  CHECK(chain_c4->forced_edges == EdgeSet{0, 1, 2, 3});
  CHECK(chain_c4->relevant_classes.size() == 4);
  int central = 0;
  for (const RelevantClass& rc : chain_c4->relevant_classes)
    if (rc.is_central) ++central;
  // The classes holding s and t are central; the two singleton way stations
  // sit on a single chain cycle and are not.
  CHECK(central == 2);

  CactusModel k4 = build_cactus(fixtures::k4());
  CHECK_FALSE(st_chain(k4, 0, 3).has_value());
}

TEST_CASE("extract_components satisfies the (A,B) audit") {
  const Graph two = fixtures::two_k4();
  CactusModel cactus = build_cactus(two);
  auto chain = st_chain(cactus, 1, 5);
  REQUIRE(chain);
  auto comps = extract_components(two, *chain);
  REQUIRE(comps.size() == 2);
  for (const ComponentInstance& inst : comps) {
    CHECK(inst.kind == ComponentInstance::Kind::Central);
    CHECK(inst.terminals.size() == 3);
    CHECK(passes_ab_audit(inst));
    CHECK(inst.graph.vertex_count() == 6);  // K4 block + contracted side + fresh terminal
  }

  const Graph c4 = fixtures::c4();
  CactusModel c4_model = build_cactus(c4);
  auto c4_chain = st_chain(c4_model, 0, 2);
  REQUIRE(c4_chain);
  auto c4_comps = extract_components(c4, *c4_chain);
  int central = 0;
  for (const ComponentInstance& inst : c4_comps)
    if (inst.kind == ComponentInstance::Kind::Central) {
      ++central;
      CHECK(inst.graph.edge_count() == 4);  // 4-cycle with a fresh terminal
      CHECK(passes_ab_audit(inst));
    }
  CHECK(central == 2);
}

TEST_CASE("degenerate non-central classes impose nothing") {
  // Bowtie, demand (1,2): the shared vertex forms a relevant class whose two
  // attachment edges meet at one vertex; it is dropped from the instances.
  const Graph g = fixtures::bowtie();
  CactusModel cactus = build_cactus(g);
  auto chain = st_chain(cactus, 1, 2);
  REQUIRE(chain);
  auto comps = extract_components(g, *chain);
  for (const ComponentInstance& inst : comps)
    if (inst.kind == ComponentInstance::Kind::NonCentral)
      CHECK(inst.attach_u != inst.attach_v);
  auto demands = ordinary_demand_set(g, 1, 2);
  REQUIRE(demands);
  CHECK(demands->empty());
  // Forced edges alone must already be feasible here.
  CHECK(feasible_by_fault_enumeration(g, chain->forced_edges, std::vector<Demand>{{1, 2, 3}})
            .feasible);
}

TEST_CASE("ordinary_demand_set fixture values") {
  auto two = ordinary_demand_set(fixtures::two_k4(), 1, 5);
  REQUIRE(two);
  std::vector<Demand> expected{{0, 1, 3}, {0, 3, 3}, {4, 5, 3}, {4, 7, 3}};
  CHECK(*two == expected);

  auto c4 = ordinary_demand_set(fixtures::c4(), 0, 2);
  REQUIRE(c4);
  CHECK(c4->empty());

  CHECK_FALSE(ordinary_demand_set(fixtures::k4(), 0, 3).has_value());
}

TEST_CASE("reduction equivalence: relative feasibility vs ordinary demand stars") {
  // For every H containing the forced edges, fault-level feasibility of
  // (s,t,3) must coincide with lambda_H >= 3 on every generated demand.
  auto check_fixture = [](const Graph& g, VertexId s, VertexId t) {
    auto chain = st_chain(build_cactus(g), s, t);
    REQUIRE(chain);
    auto stars = ordinary_demand_set(g, s, t);
    REQUIRE(stars);
    std::vector<EdgeId> optional_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (!chain->forced_edges.count(e)) optional_edges.push_back(e);
    REQUIRE(optional_edges.size() <= 12);
    for (uint32_t mask = 0; mask < (1u << optional_edges.size()); ++mask) {
      EdgeSet h = chain->forced_edges;
      for (size_t i = 0; i < optional_edges.size(); ++i)
        if (mask & (1u << i)) h.insert(optional_edges[i]);
      bool lhs =
          feasible_by_fault_enumeration(g, h, std::vector<Demand>{{s, t, 3}}).feasible;
      bool rhs = satisfies_snd(g, h, *stars);
      CHECK(lhs == rhs);
    }
  };
  check_fixture(fixtures::two_triangles(), 1, 4);
  check_fixture(fixtures::bowtie(), 1, 3);
  check_fixture(fixtures::c5(), 0, 2);
}

TEST_CASE("component conditions match feasibility (chain lemma)") {
  const Graph g = fixtures::two_triangles();
  auto cactus = build_cactus(g);
  auto chain = st_chain(cactus, 1, 4);
  REQUIRE(chain);
  auto comps = extract_components(g, *chain);
  std::vector<EdgeId> optional_edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!chain->forced_edges.count(e)) optional_edges.push_back(e);
  for (uint32_t mask = 0; mask < (1u << optional_edges.size()); ++mask) {
    EdgeSet h = chain->forced_edges;
    for (size_t i = 0; i < optional_edges.size(); ++i)
      if (mask & (1u << i)) h.insert(optional_edges[i]);
    bool lhs = feasible_by_fault_enumeration(g, h, std::vector<Demand>{{1, 4, 3}}).feasible;

    bool rhs = true;
    for (const ComponentInstance& inst : comps) {
      EdgeSet h_inst;
      for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
        EdgeId orig = inst.edge_origin[e];
        if (orig < 0 || h.count(orig)) h_inst.insert(e);
      }
      if (inst.kind == ComponentInstance::Kind::NonCentral) {
        EdgeSubgraphView view = edge_subgraph(inst.graph, h_inst);
        if (lambda(view.graph, inst.attach_u, inst.attach_v) < 2) rhs = false;
      } else {
        if (!feasible_by_fault_enumeration(inst.graph, h_inst,
                                           std::vector<Demand>{{inst.s, inst.t, 3}})
                 .feasible)
          rhs = false;
      }
    }
    CHECK(lhs == rhs);
  }
}
