#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>

namespace relnet {

using VertexId = int;
using EdgeId = int;
using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

/// Absolute tolerance used for all weight comparisons across solvers.
inline constexpr double kWeightTol = 1e-9;

/// A connectivity demand (s, t, k): after any fault set F with |F| < k,
/// s and t must stay connected in H whenever they are connected in G \ F.
struct Demand {
  VertexId s = -1;
  VertexId t = -1;
  int k = 0;
  auto operator<=>(const Demand&) const = default;
};

/// Set-to-set demand (X, Y, d) as used by the structure-theorem machinery:
/// a path from some x in X to some y in Y must survive any |F| < d faults
/// that leave such a path in the base graph.
struct SetDemand {
  VertexSet x;
  VertexSet y;
  int d = 0;
  auto operator<=>(const SetDemand&) const = default;
};

struct Solution {
  EdgeSet edges;
  double weight = 0.0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, long line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// Thrown when a brute-force oracle would exceed its configured enumeration
/// cap. Oracles refuse instead of sampling.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace relnet
