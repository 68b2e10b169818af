#include "specker/polytope.hpp"

#include <stdexcept>

#include "specker/simplex.hpp"

namespace specker {

namespace {

CorrelationVector deterministic_vertex(int x1, int x2, int x3) {
  CorrelationVector cv;
  cv.at(Pair::M12, x1, x2) = 1;
  cv.at(Pair::M23, x2, x3) = 1;
  cv.at(Pair::M13, x1, x3) = 1;
  return cv;
}

// diag: half weight on (0,0) and (1,1); otherwise on (0,1) and (1,0).
void fill_half(CorrelationVector& cv, Pair p, bool diag) {
  Rat half(1, 2);
  if (diag) {
    cv.at(p, 0, 0) = half;
    cv.at(p, 1, 1) = half;
  } else {
    cv.at(p, 0, 1) = half;
    cv.at(p, 1, 0) = half;
  }
}

std::array<Vertex, 12> build_vertices() {
  std::array<Vertex, 12> vs;
  for (int k = 0; k < 8; ++k) {
    vs[k].id = k;
    vs[k].kind = Vertex::Kind::Deterministic;
    vs[k].cv = deterministic_vertex((k >> 2) & 1, (k >> 1) & 1, k & 1);
  }
  // v8: 12 anti-diagonal, 23 and 13 diagonal; v9: 23 anti; v10: 13 anti;
  // v11: all three anti-diagonal (the OS box).
  const bool diag12[4] = {false, true, true, false};
  const bool diag23[4] = {true, false, true, false};
  const bool diag13[4] = {true, true, false, false};
  for (int k = 0; k < 4; ++k) {
    Vertex& v = vs[8 + k];
    v.id = 8 + k;
    v.kind = Vertex::Kind::Indeterministic;
    fill_half(v.cv, Pair::M12, diag12[k]);
    fill_half(v.cv, Pair::M23, diag23[k]);
    fill_half(v.cv, Pair::M13, diag13[k]);
  }
  return vs;
}

// Equality system expressing "weights over the 12 vertices reproduce cv":
// 12 entry equations plus the weight-sum row.
void decomposition_system(const CorrelationVector& cv, RatMat& A, RatVec& b) {
  const auto& vs = vertices();
  A.assign(13, RatVec(12, Rat(0)));
  b.assign(13, Rat(0));
  int row = 0;
  for (Pair p : kPairs) {
    for (int idx = 0; idx < 4; ++idx) {
      for (int k = 0; k < 12; ++k) A[row][k] = vs[k].cv.table(p)[idx];
      b[row] = cv.table(p)[idx];
      ++row;
    }
  }
  for (int k = 0; k < 12; ++k) A[row][k] = 1;
  b[row] = 1;
}

}  // namespace

const std::array<Vertex, 12>& vertices() {
  static const std::array<Vertex, 12> vs = build_vertices();
  return vs;
}

FacetReport in_ks_polytope(const SixParams& s) {
  FacetReport report;
  for (Pair p : violated_chains(s)) {
    report.violated.push_back("chain(" + pair_label(p) + ")");
  }
  Rat r3 = s.w12 + s.w23 + s.w13;
  Rat r0 = s.w12 - s.w23 - s.w13;
  Rat r1 = s.w23 - s.w12 - s.w13;
  Rat r2 = s.w13 - s.w12 - s.w23;
  if (r3 > 2) report.violated.push_back("R3<=2");
  if (r0 > 0) report.violated.push_back("R0<=0");
  if (r1 > 0) report.violated.push_back("R1<=0");
  if (r2 > 0) report.violated.push_back("R2<=0");
  report.inside = report.violated.empty();
  return report;
}

ConvexDecomposition decompose(const CorrelationVector& cv) {
  validate_or_throw(cv);
  RatMat A;
  RatVec b;
  decomposition_system(cv, A, b);

  // Lexicographically smallest weight vector: minimize w0, pin it, then w1, ...
  ConvexDecomposition out;
  for (int k = 0; k < 12; ++k) {
    RatVec c(A[0].size(), Rat(0));
    c[k] = 1;
    LpResult r = solve_lp(A, b, c);
    if (r.status != LpResult::Status::Optimal) {
      throw std::logic_error(
          "decompose: no vertex decomposition for a validated vector (internal bug)");
    }
    out.weights[k] = r.objective;
    // Pin weight k with an extra equality row.
    RatVec pin(A[0].size(), Rat(0));
    pin[k] = 1;
    A.push_back(pin);
    b.push_back(r.objective);
  }
  return out;
}

bool is_extremal(const CorrelationVector& cv) {
  validate_or_throw(cv);
  const auto& vs = vertices();
  int self = -1;
  for (const auto& v : vs) {
    if (v.cv == cv) {
      self = v.id;
      break;
    }
  }
  // Every valid point decomposes over the 12 vertices, so a point that is not
  // itself a vertex is a mixture of others.
  if (self < 0) return false;

  // Extremal iff every decomposition puts full weight on the vertex itself.
  RatMat A;
  RatVec b;
  decomposition_system(cv, A, b);
  RatVec c(12, Rat(0));
  c[self] = 1;
  LpResult r = solve_lp(A, b, c);
  if (r.status != LpResult::Status::Optimal) {
    throw std::logic_error("is_extremal: decomposition LP failed (internal bug)");
  }
  return r.objective == 1;
}

}  // namespace specker
