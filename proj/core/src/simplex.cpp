#include "simplex.hpp"

#include <algorithm>
#include <cmath>

#include "relnet/types.hpp"

namespace relnet::detail {

namespace {

constexpr double kTol = 1e-9;

// Full-tableau simplex over rows [0, nr) with basis tracking. Bland's rule
// on both the entering and the leaving choice, so no cycling.
struct Tableau {
  int rows = 0;
  int cols = 0;  // excluding rhs
  std::vector<std::vector<double>> a;  // rows x (cols + 1)
  std::vector<int> basis;              // basic variable per row
  std::vector<double> objective;       // cols + 1 (reduced costs, then -value)
  std::vector<char> banned;            // columns not allowed to enter

  void pivot(int row, int col) {
    double p = a[row][col];
    for (int j = 0; j <= cols; ++j) a[row][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == row || std::abs(a[i][col]) < 1e-14) continue;
      double f = a[i][col];
      for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[row][j];
    }
    double f = objective[col];
    if (std::abs(f) > 1e-14)
      for (int j = 0; j <= cols; ++j) objective[j] -= f * a[row][j];
    basis[row] = col;
  }

  // Returns false when unbounded (never expected for these LPs).
  bool optimize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (banned[j]) continue;
        if (objective[j] < -kTol) {
          enter = j;
          break;  // Bland: smallest index
        }
      }
      if (enter == -1) return true;
      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < rows; ++i) {
        if (a[i][enter] <= kTol) continue;
        double ratio = a[i][cols] / a[i][enter];
        if (leave == -1 || ratio < best_ratio - kTol ||
            (ratio < best_ratio + kTol && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == -1) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

std::vector<double> solve_cover_lp(const CoverLp& lp) {
  const int nv = static_cast<int>(lp.costs.size());
  const int nr = static_cast<int>(lp.rows.size());
  // Columns: x (nv), upper-bound slacks (nv), surpluses (nr), artificials (nr).
  Tableau t;
  t.rows = nv + nr;
  t.cols = 2 * nv + 2 * nr;
  t.a.assign(t.rows, std::vector<double>(t.cols + 1, 0.0));
  t.basis.assign(t.rows, -1);
  t.banned.assign(t.cols, 0);

  for (int e = 0; e < nv; ++e) {  // x_e + ub_e = 1
    t.a[e][e] = 1.0;
    t.a[e][nv + e] = 1.0;
    t.a[e][t.cols] = 1.0;
    t.basis[e] = nv + e;
  }
  for (int r = 0; r < nr; ++r) {  // sum x - surplus + artificial = rhs
    int row = nv + r;
    for (int e : lp.rows[r].first) t.a[row][e] += 1.0;
    t.a[row][2 * nv + r] = -1.0;
    t.a[row][2 * nv + nr + r] = 1.0;
    t.a[row][t.cols] = lp.rows[r].second;
    if (lp.rows[r].second < 0) throw Error("simplex: negative rhs");
    t.basis[row] = 2 * nv + nr + r;
  }

  // Phase 1: minimize the artificial sum.
  t.objective.assign(t.cols + 1, 0.0);
  for (int r = 0; r < nr; ++r) t.objective[2 * nv + nr + r] = 1.0;
  for (int r = 0; r < nr; ++r) {
    int row = nv + r;
    for (int j = 0; j <= t.cols; ++j) t.objective[j] -= t.a[row][j];
  }
  if (!t.optimize()) throw Error("simplex: phase 1 unbounded");
  if (-t.objective[t.cols] > 1e-7) throw Error("simplex: LP infeasible");

  // Drive leftover artificials out of the basis where possible.
  for (int i = 0; i < t.rows; ++i) {
    if (t.basis[i] < 2 * nv + nr) continue;
    int col = -1;
    for (int j = 0; j < 2 * nv + nr; ++j)
      if (std::abs(t.a[i][j]) > kTol) {
        col = j;
        break;
      }
    if (col != -1) t.pivot(i, col);
  }
  for (int r = 0; r < nr; ++r) t.banned[2 * nv + nr + r] = 1;

  // Phase 2: true objective.
  t.objective.assign(t.cols + 1, 0.0);
  for (int e = 0; e < nv; ++e) t.objective[e] = lp.costs[e];
  for (int i = 0; i < t.rows; ++i) {
    int b = t.basis[i];
    double f = t.objective[b];
    if (std::abs(f) > 1e-14)
      for (int j = 0; j <= t.cols; ++j) t.objective[j] -= f * t.a[i][j];
  }
  if (!t.optimize()) throw Error("simplex: phase 2 unbounded");

  std::vector<double> x(nv, 0.0);
  for (int i = 0; i < t.rows; ++i)
    if (t.basis[i] < nv) x[t.basis[i]] = t.a[i][t.cols];
  for (double& v : x) v = std::clamp(v, 0.0, 1.0);
  return x;
}

}  // namespace relnet::detail
