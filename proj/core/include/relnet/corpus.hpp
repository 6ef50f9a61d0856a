#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "relnet/graph.hpp"

namespace relnet {

/// Deterministic generator (splitmix64). Used instead of <random> engines so
/// outputs are identical across platforms and standard-library versions.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint32_t below(uint32_t bound) { return static_cast<uint32_t>(next() % bound); }
};

namespace fixtures {

Graph c4();
Graph c5();
Graph c6();
Graph k4();
Graph diamond();       // K4 minus one edge
Graph two_k4();        // two K4 blocks joined by the bridge-pair edges b0 = 12, b1 = 13
Graph lolly();         // path 0-1=2-3 with a doubled middle edge
Graph bowtie();        // two triangles sharing vertex 0
Graph theta();         // vertices 0,1 joined by three length-2 paths
Graph two_triangles(); // two triangles joined by a 2-edge "bridge pair"
Graph two_diamonds();  // two diamond blocks joined by a 2-edge "bridge pair"
Graph wheel5();        // 4-cycle rim plus hub
Graph cube();          // Q3, 3-regular on 8 vertices

/// Fixture list used by the acceptance suite for separator / structure tests.
std::vector<std::pair<std::string, Graph>> named_two_edge_connected();

}  // namespace fixtures

/// Calls fn for every labeled simple graph on n vertices that is connected
/// and bridge-free (unit weights, edges in lexicographic pair order).
void for_each_two_edge_connected(int n, const std::function<void(const Graph&)>& fn);

long long count_two_edge_connected(int n);

/// One canonical representative per isomorphism class of connected
/// bridge-free simple graphs on exactly n vertices (n <= 7).
std::vector<Graph> two_edge_connected_iso_classes(int n);

/// Random 2-edge-connected weighted multigraph with 4 <= n <= max_n,
/// n <= m <= max_m, integer weights in [1, 9]. Deterministic in rng state.
Graph random_two_edge_connected_multigraph(Rng& rng, int max_n, int max_m);

/// Random connected (not necessarily 2-edge-connected) graph, unit or random
/// weights; used by the cut-cover equivalence experiment.
Graph random_connected_graph(Rng& rng, int max_n, int max_m);

}  // namespace relnet
