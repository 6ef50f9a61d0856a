#pragma once

#include <utility>
#include <vector>

namespace relnet::detail {

/// min c.x subject to sum_{e in row} x_e >= rhs and 0 <= x <= 1.
/// Dense two-phase tableau simplex with Bland's rule, tolerance 1e-9.
struct CoverLp {
  std::vector<double> costs;                              // per variable
  std::vector<std::pair<std::vector<int>, double>> rows;  // (variable ids, rhs > 0)
};

/// Returns an optimal basic solution; throws relnet::Error when infeasible
/// (which indicates a caller bug for the covering LPs solved here).
std::vector<double> solve_cover_lp(const CoverLp& lp);

}  // namespace relnet::detail
