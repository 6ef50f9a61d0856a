#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "relnet/graph.hpp"
#include "relnet/separators.hpp"
#include "relnet/types.hpp"

namespace relnet {

/// Hard enumeration limits. Oracles refuse (CapExceeded) rather than sample.
struct OracleCaps {
  long long max_fault_sets = 2'000'000;       // per demand
  long long max_vertex_subsets = 1LL << 18;
  long long max_edge_subsets = 1LL << 16;
  int sep_max_edges = 16;
  int sep_max_size = 4;
};

struct Witness {
  SetDemand demand;
  EdgeSet faults;
};

struct FeasibilityReport {
  bool feasible = true;
  std::optional<Witness> witness;
  long long checked_fault_sets = 0;
};

/// Exhaustive check of Definition-level relative feasibility: for every
/// demand and every fault set F with |F| < k, connectivity in G \ F must
/// imply connectivity in H \ F. The witness, when present, replays.
FeasibilityReport feasible_by_fault_enumeration(const Graph& g, const EdgeSet& h,
                                                const std::vector<Demand>& demands,
                                                const OracleCaps& caps = {});

/// Generalized (X, Y, d) demands, used by the structure-theorem tests.
FeasibilityReport feasible_by_fault_enumeration(const Graph& g, const EdgeSet& h,
                                                const std::vector<SetDemand>& demands,
                                                const OracleCaps& caps = {});

/// Independent characterization: d_H(A) >= min(k, d_G(A)) over all G-minimal
/// st-sets A (both G[A] and G[V \ A] connected).
FeasibilityReport feasible_by_cut_cover(const Graph& g, const EdgeSet& h, const Demand& demand,
                                        const OracleCaps& caps = {});

/// Classical SND satisfaction: lambda_H(s, t) >= k for every demand.
bool satisfies_snd(const Graph& g, const EdgeSet& h, const std::vector<Demand>& demands);

/// Minimum-weight relatively feasible edge set, by weight-pruned exhaustive
/// search; accepted candidates are verified by fault enumeration.
Solution exact_optimum(const Graph& g, const std::vector<Demand>& demands,
                       const OracleCaps& caps = {});

/// Literal Definition filter over all edge subsets of size <= d.
std::vector<ImportantSeparator> brute_force_important_separators(const Graph& g, const VertexSet& x,
                                                                 const VertexSet& y, int d,
                                                                 const OracleCaps& caps = {});

/// lhs = fault-enumeration feasibility of (s, t, k);
/// rhs = all separator edges present and every component of the hierarchical
/// decomposition satisfies its generated demands (fault-enumerated on the
/// component subgraphs). The two sides must always agree.
std::pair<bool, bool> check_structure_theorem(const Graph& g, const EdgeSet& h, VertexId s,
                                              VertexId t, int k, const OracleCaps& caps = {});

}  // namespace relnet
