#include "specker/inequalities.hpp"

#include <stdexcept>

namespace specker {

RValues evaluate(const SixParams& s) {
  RValues r;
  r.r3 = s.w12 + s.w23 + s.w13;
  r.r0 = s.w12 - s.w23 - s.w13;
  r.r1 = s.w23 - s.w12 - s.w13;
  r.r2 = s.w13 - s.w12 - s.w23;
  return r;
}

std::vector<int> check_ks(const RValues& r) {
  std::vector<int> out;
  if (r.r0 > 0) out.push_back(0);
  if (r.r1 > 0) out.push_back(1);
  if (r.r2 > 0) out.push_back(2);
  if (r.r3 > 2) out.push_back(3);
  return out;
}

std::vector<int> check_nc(const RValues& r, const Rat& eta0) {
  if (eta0 < 0 || eta0 > 1) throw std::invalid_argument("eta0 must lie in [0,1]");
  std::vector<int> out;
  Rat side = 1 - eta0;
  if (r.r0 > side) out.push_back(0);
  if (r.r1 > side) out.push_back(1);
  if (r.r2 > side) out.push_back(2);
  if (r.r3 > 3 - eta0) out.push_back(3);
  return out;
}

std::string inequality_label(int i) { return "R" + std::to_string(i); }

CorrelationVector relabel(const CorrelationVector& cv, int measurement) {
  if (measurement < 1 || measurement > 3) {
    throw std::invalid_argument("measurement index must be 1, 2 or 3");
  }
  CorrelationVector out = cv;
  for (Pair p : kPairs) {
    if (pair_first(p) == measurement) {
      for (int xj = 0; xj < 2; ++xj) std::swap(out.at(p, 0, xj), out.at(p, 1, xj));
    } else if (pair_second(p) == measurement) {
      for (int xi = 0; xi < 2; ++xi) std::swap(out.at(p, xi, 0), out.at(p, xi, 1));
    }
  }
  return out;
}

}  // namespace specker
