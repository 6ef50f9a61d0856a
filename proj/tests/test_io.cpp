#include <doctest.h>

#include "relnet/corpus.hpp"
#include "relnet/io.hpp"

using namespace relnet;

TEST_CASE("graph text round trip") {
  Graph two = fixtures::two_k4();
  std::string text = format_graph_text(two);
  Graph parsed = parse_graph_text(text);
  CHECK(parsed.vertex_count() == two.vertex_count());
  CHECK(parsed.edge_count() == two.edge_count());
  for (EdgeId e = 0; e < two.edge_count(); ++e) {
    CHECK(parsed.edge(e).u == two.edge(e).u);
    CHECK(parsed.edge(e).v == two.edge(e).v);
    CHECK(parsed.edge(e).weight == doctest::Approx(two.edge(e).weight));
  }

  CHECK_THROWS_AS(parse_graph_text("2 1\n0 0 1.0\n"), ParseError);   // self-loop
  CHECK_THROWS_AS(parse_graph_text("2 1\n0 3 1.0\n"), ParseError);   // out of range
  CHECK_THROWS_AS(parse_graph_text("2 2\n0 1 1.0\n"), ParseError);   // missing line
  CHECK_THROWS_AS(parse_graph_text("nonsense\n"), ParseError);
}

TEST_CASE("demand parsing merges duplicates keeping the largest k") {
  auto a = parse_demands("1 5 3\n");
  REQUIRE(a.size() == 1);
  CHECK(a[0] == Demand{1, 5, 3});

  auto b = parse_demands("0 2 2\n0 2 3\n");
  REQUIRE(b.size() == 1);
  CHECK(b[0] == Demand{0, 2, 3});

  CHECK_THROWS_AS(parse_demands("0 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_demands("0 1\n"), ParseError);

  auto c = parse_demands("# comment\n\n5 1 2\n");
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Demand{1, 5, 2});  // normalized orientation
}

TEST_CASE("solution JSON is deterministic and self-consistent") {
  Graph c4 = fixtures::c4();
  Solution sol = c4.solution_for(EdgeSet{0, 2, 3});
  std::string once = solution_json("3rsnd", c4, sol);
  std::string twice = solution_json("3rsnd", c4, sol);
  CHECK(once == twice);
  CHECK(once.find("\"schema\": 1") != std::string::npos);
  CHECK(parse_solution_edges(once) == sol.edges);
}

TEST_CASE("decomposition JSON artifacts include the advertised fields") {
  Graph two = fixtures::two_k4();
  CactusModel cactus = build_cactus(two);
  auto chain = st_chain(cactus, 1, 5);
  std::string cj = cactus_json(two, cactus, chain);
  CHECK(cj.find("\"classes\"") != std::string::npos);
  CHECK(cj.find("\"cycles\"") != std::string::npos);
  CHECK(cj.find("\"forced_edges\"") != std::string::npos);
  CHECK(cj.find("\"central\"") != std::string::npos);

  HierarchicalDecomposition decomp = build_hierarchy(two, 1, 5, 3);
  std::string hj = hierarchy_json(decomp);
  CHECK(hj.find("\"components\"") != std::string::npos);
  CHECK(hj.find("\"separator_edges\"") != std::string::npos);
  CHECK(hj.find("\"left_boundary\"") != std::string::npos);
}
