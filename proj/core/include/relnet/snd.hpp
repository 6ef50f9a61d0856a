#pragma once

#include <vector>

#include "relnet/graph.hpp"
#include "relnet/types.hpp"

namespace relnet {

/// Cut requirement covered by the iterative-rounding engine. `Snd` evaluates
/// to the largest requirement among separated demands; `KeftsResidual` with a
/// chosen edge set F evaluates to k - d_F(A) on the family of cuts with at
/// least one non-F edge.
struct CutRequirement {
  enum class Kind { Snd, KeftsResidual };
  Kind kind = Kind::Snd;
  std::vector<Demand> demands;  // Snd
  int k = 0;                    // KeftsResidual
  EdgeSet chosen;               // KeftsResidual: F

  static CutRequirement snd(std::vector<Demand> demands);
  static CutRequirement kefts_residual(int k, EdgeSet chosen);
};

enum class SupermodularityCheck { Supermodular, CoSupermodular, Violation };

/// Evaluates the supermodular and co-supermodular inequalities on the
/// requirement's family; a Violation fails the test suite.
SupermodularityCheck check_weak_supermodularity(const Graph& g, const CutRequirement& req,
                                                const VertexSet& a, const VertexSet& b);

/// Iterative-rounding 2-approximation for ordinary SND demands: cutting-plane
/// LP (self-contained simplex), rounding every edge at or above 1/2, residual
/// updates until all demands are covered. Demands must be ordinary:
/// lambda_G(s, t) >= k.
Solution solve_snd_jain(const Graph& g, const std::vector<Demand>& demands);

/// Edges lying in some cut of G with at most k edges; all belong to every
/// feasible k-EFTS solution.
EdgeSet kefts_forced_edges(const Graph& g, int k);

/// 2-approximation for k-EFTS: forced edges plus iterative rounding over the
/// weakly F-supermodular residual k - d_F(A).
Solution solve_kefts(const Graph& g, int k);

}  // namespace relnet
