#pragma once

#include <array>
#include <string>
#include <vector>

#include "specker/correlation.hpp"

namespace specker {

/// One of the 12 extreme points of the no-disturbance polytope.
struct Vertex {
  enum class Kind { Deterministic, Indeterministic };
  int id = 0;  // 0..7 deterministic (lexicographic outcome assignment), 8..11 indeterministic
  Kind kind = Kind::Deterministic;
  CorrelationVector cv;
};

/// The 12 vertices in id order. Deterministic ids 0..7 carry the outcome
/// assignment (X1,X2,X3) read as a binary number.
const std::array<Vertex, 12>& vertices();

/// Facets of the KS-noncontextual subpolytope: the three positivity chains
/// plus the four R-inequalities.
struct FacetReport {
  bool inside = false;
  std::vector<std::string> violated;  // e.g. "chain(12)", "R3<=2", "R0<=0"
};
FacetReport in_ks_polytope(const SixParams& s);

/// Exact convex weights over the 12 vertices reproducing the vector.
/// Canonical choice: lexicographically smallest weight vector in id order.
struct ConvexDecomposition {
  std::array<Rat, 12> weights{};
};
ConvexDecomposition decompose(const CorrelationVector& cv);

/// True iff the (valid) vector is one of the polytope's extreme points.
bool is_extremal(const CorrelationVector& cv);

}  // namespace specker
