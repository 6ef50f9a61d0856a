#include <doctest.h>

#include "relnet/corpus.hpp"
#include "relnet/graph.hpp"

using namespace relnet;

TEST_CASE("build_graph constructs fixtures and rejects bad input") {
  Graph c4 = fixtures::c4();
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.edge(0).u == 0);
  CHECK(c4.edge(3).v == 0);

  Graph k4 = fixtures::k4();
  CHECK(k4.edge_count() == 6);

  CHECK_THROWS_AS(build_graph(3, {{0, 1, 1.0}, {1, 1, 1.0}}), Error);   // self-loop
  CHECK_THROWS_AS(build_graph(2, {{0, 3, 1.0}}), Error);               // out of range
  CHECK_THROWS_AS(build_graph(2, {{0, 1, -2.0}}), Error);              // negative weight
}

TEST_CASE("delta counts parallel edges and rejects degenerate sets") {
  Graph c4 = fixtures::c4();
  CHECK(delta(c4, {0}) == EdgeSet{0, 3});
  Graph k4 = fixtures::k4();
  CHECK(delta(k4, {0, 1}).size() == 4);
  CHECK_THROWS_AS(delta(c4, {0, 1, 2, 3}), Error);
  CHECK_THROWS_AS(delta(c4, VertexSet{}), Error);

  Graph lolly = fixtures::lolly();
  CHECK(delta(lolly, {0, 1}) == EdgeSet{1, 2});  // the doubled edge counts twice
}

TEST_CASE("induced_subgraph keeps exactly the inside edges with an id map") {
  Graph c4 = fixtures::c4();
  SubgraphView v = induced_subgraph(c4, {0, 1});
  CHECK(v.graph.edge_count() == 1);
  CHECK(v.edge_origin[0] == 0);

  Graph k4 = fixtures::k4();
  CHECK(induced_subgraph(k4, {0, 1, 2}).graph.edge_count() == 3);

  Graph two = fixtures::two_k4();
  SubgraphView left = induced_subgraph(two, {0, 1, 2, 3});
  CHECK(left.graph.edge_count() == 6);
  CHECK(left.graph.vertex_count() == 4);

  CHECK_THROWS_AS(induced_subgraph(c4, VertexSet{}), Error);
}

TEST_CASE("contract merges parts, drops loops, keeps parallels") {
  Graph c4 = fixtures::c4();
  ContractionView v = contract(c4, {VertexSet{0, 1}});
  CHECK(v.graph.vertex_count() == 3);
  CHECK(v.graph.edge_count() == 3);
  CHECK(std::vector<EdgeId>(v.edge_origin) == std::vector<EdgeId>{1, 2, 3});

  Graph two = fixtures::two_k4();
  ContractionView w = contract(two, {VertexSet{4, 5, 6, 7}});
  CHECK(w.graph.vertex_count() == 5);
  CHECK(w.graph.edge_count() == 8);  // K4 plus the two bridge-pair edges

  Graph k4 = fixtures::k4();
  ContractionView z = contract(k4, {VertexSet{0, 1}, VertexSet{2, 3}});
  CHECK(z.graph.vertex_count() == 2);
  CHECK(z.graph.edge_count() == 4);

  CHECK_THROWS_AS(contract(c4, {VertexSet{0, 1}, VertexSet{1, 2}}), Error);
}

TEST_CASE("connected answers path-existence under removals") {
  Graph c4 = fixtures::c4();
  CHECK(connected(c4, {0}, {2}, EdgeSet{0}));
  CHECK_FALSE(connected(c4, {0}, {2}, EdgeSet{0, 2}));
  CHECK(connected(c4, {0}, {2}, EdgeSet{}));
}

TEST_CASE("two_edge_connectivity flags bridges; parallel pairs are safe") {
  CHECK(is_2_edge_connected(fixtures::c4()));
  ConnectivityReport lolly = two_edge_connectivity(fixtures::lolly());
  CHECK_FALSE(lolly.two_edge_connected);
  CHECK(lolly.bridges == std::vector<EdgeId>{0, 3});

  Graph isolated(2, {});
  CHECK_FALSE(is_2_edge_connected(isolated));
  CHECK_FALSE(two_edge_connectivity(isolated).connected);
}

TEST_CASE("cut symmetry: delta(A) = delta(V \\ A)") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(rng, 7, 12);
    uint32_t mask = 1 + rng.below((1u << g.vertex_count()) - 2);
    VertexSet a, b;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      (mask & (1u << v)) ? (void)a.insert(v) : (void)b.insert(v);
    if (a.empty() || b.empty()) continue;
    CHECK(delta(g, a) == delta(g, b));
  }
}

TEST_CASE("contract then induce round-trips edge identities") {
  Graph two = fixtures::two_k4();
  ContractionView v = contract(two, {VertexSet{4, 5, 6, 7}});
  for (EdgeId e = 0; e < v.graph.edge_count(); ++e) {
    const Edge& mapped = v.graph.edge(e);
    const Edge& orig = two.edge(v.edge_origin[e]);
    CHECK(v.vertex_image[orig.u] == mapped.u);
    CHECK(v.vertex_image[orig.v] == mapped.v);
  }
}

TEST_CASE("connected with no removals agrees with plain traversal") {
  Rng rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_connected_graph(rng, 7, 11);
    VertexId x = static_cast<VertexId>(rng.below(g.vertex_count()));
    VertexSet reach = reachable_set(g, {x}, EdgeSet{});
    for (VertexId y = 0; y < g.vertex_count(); ++y)
      CHECK(connected(g, {x}, {y}, EdgeSet{}) == (reach.count(y) > 0));
  }
}

TEST_CASE("bridges match single-edge disconnection of their endpoints") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(rng, 7, 11);
    ConnectivityReport report = two_edge_connectivity(g);
    for (const Edge& e : g.edges()) {
      bool disconnects = !connected(g, {e.u}, {e.v}, EdgeSet{e.id});
      bool is_bridge =
          std::find(report.bridges.begin(), report.bridges.end(), e.id) != report.bridges.end();
      CHECK(disconnects == is_bridge);
    }
  }
}
