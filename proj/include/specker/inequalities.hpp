#pragma once

#include <string>
#include <vector>

#include "specker/correlation.hpp"

namespace specker {

/// The four linear forms in the anticorrelation probabilities.
struct RValues {
  Rat r0, r1, r2, r3;
  const Rat& operator[](int i) const {
    switch (i) {
      case 0: return r0;
      case 1: return r1;
      case 2: return r2;
      default: return r3;
    }
  }
};

/// R3 = w12+w23+w13; R0 = w12-w23-w13; R1 = w23-w12-w13; R2 = w13-w12-w23.
RValues evaluate(const SixParams& s);

/// Violated Kochen-Specker inequalities among {R3 > 2, Ri > 0}. Strict
/// comparison, exact arithmetic: boundary points are not violations.
/// At most one can appear for any valid statistics (mutual exclusivity).
std::vector<int> check_ks(const RValues& r);

/// Violated noncontextuality inequalities for the given predictability:
/// R3 > 3 - eta0 (LSW) and Ri > 1 - eta0.
std::vector<int> check_nc(const RValues& r, const Rat& eta0);

std::string inequality_label(int i);  // "R0".."R3"

/// Flips the named measurement's outcome in every pair containing it.
/// An involution; maps the vertex set to itself.
CorrelationVector relabel(const CorrelationVector& cv, int measurement);

}  // namespace specker
