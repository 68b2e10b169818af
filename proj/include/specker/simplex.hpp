#pragma once

#include <vector>

#include "specker/rational.hpp"

namespace specker {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Outcome of an exact LP solve in standard form:
///   minimize c.x  subject to  A x = b, x >= 0.
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  RatVec x;          // primal solution when Optimal
  Rat objective;     // c.x when Optimal
  // Farkas certificate when Infeasible: y.A <= 0 componentwise and y.b > 0,
  // which no x >= 0 with A x = b can satisfy.
  RatVec farkas;
};

/// Two-phase primal simplex over exact rationals, Bland's rule (deterministic,
/// cycle-free). Sized for desk-scale problems; rows of A may be linearly
/// dependent.
LpResult solve_lp(const RatMat& A, const RatVec& b, const RatVec& c);

/// Feasibility-only convenience (c = 0).
LpResult lp_feasible(const RatMat& A, const RatVec& b);

}  // namespace specker
