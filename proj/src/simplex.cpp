#include "specker/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace specker {

namespace {

// Dense tableau state: T = B^{-1} [A | I_art], rhs = B^{-1} b', basis indices.
struct Tableau {
  RatMat T;                // m x ncols
  RatVec rhs;              // m
  std::vector<int> basis;  // m, column index of basic variable per row
  int m, ncols;

  void pivot(int row, int col) {
    Rat piv = T[row][col];
    for (int j = 0; j < ncols; ++j) T[row][j] /= piv;
    rhs[row] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      Rat f = T[i][col];
      if (f == 0) continue;
      for (int j = 0; j < ncols; ++j) T[i][j] -= f * T[row][j];
      rhs[i] -= f * rhs[row];
    }
    basis[row] = col;
  }
};

// Runs primal simplex with Bland's rule on columns [0, nvars) of the tableau,
// minimizing the given costs (cost 0 assumed for columns >= costs.size()).
// Returns false when unbounded.
bool run_simplex(Tableau& t, const RatVec& costs, int nvars) {
  auto cost_of = [&](int j) -> Rat {
    return j < static_cast<int>(costs.size()) ? costs[j] : Rat(0);
  };
  while (true) {
    // Reduced costs; Bland: enter the lowest-index negative one.
    int enter = -1;
    for (int j = 0; j < nvars; ++j) {
      Rat rc = cost_of(j);
      for (int i = 0; i < t.m; ++i) {
        if (t.T[i][j] != 0) rc -= cost_of(t.basis[i]) * t.T[i][j];
      }
      if (rc < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;  // optimal
    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < t.m; ++i) {
      if (t.T[i][enter] <= 0) continue;
      Rat ratio = t.rhs[i] / t.T[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded
    t.pivot(leave, enter);
  }
}

}  // namespace

LpResult solve_lp(const RatMat& A, const RatVec& b, const RatVec& c) {
  const int m = static_cast<int>(A.size());
  const int n = m > 0 ? static_cast<int>(A[0].size()) : static_cast<int>(c.size());
  assert(static_cast<int>(b.size()) == m);
  assert(static_cast<int>(c.size()) == n);

  // Flip rows so rhs >= 0; remember signs for the Farkas certificate.
  std::vector<int> sign(m, 1);
  Tableau t;
  t.m = m;
  t.ncols = n + m;  // original columns + one artificial per row
  t.T.assign(m, RatVec(t.ncols, Rat(0)));
  t.rhs.assign(m, Rat(0));
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    sign[i] = (b[i] < 0) ? -1 : 1;
    for (int j = 0; j < n; ++j) t.T[i][j] = sign[i] * A[i][j];
    t.rhs[i] = sign[i] * b[i];
    t.T[i][n + i] = 1;
    t.basis[i] = n + i;
  }

  // Phase 1: minimize the sum of artificials.
  RatVec phase1_cost(t.ncols, Rat(0));
  for (int i = 0; i < m; ++i) phase1_cost[n + i] = 1;
  bool ok = run_simplex(t, phase1_cost, t.ncols);
  assert(ok);  // phase 1 objective bounded below by 0
  (void)ok;

  Rat infeas = 0;
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] >= n) infeas += t.rhs[i];
  }

  LpResult res;
  if (infeas > 0) {
    // Farkas vector from the phase-1 duals: y_i = sum_k cB[k] * (B^{-1})[k][i],
    // where B^{-1} sits in the artificial columns; undo the row sign flips.
    res.status = LpResult::Status::Infeasible;
    res.farkas.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) {
      Rat y = 0;
      for (int k = 0; k < m; ++k) {
        if (t.basis[k] >= n) y += t.T[k][n + i];
      }
      res.farkas[i] = sign[i] * y;
    }
    return res;
  }

  // Drive any zero-valued artificial out of the basis; rows that cannot be
  // pivoted are redundant and harmless to leave in place (rhs is 0 and all
  // original coefficients are 0 there).
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    for (int j = 0; j < n; ++j) {
      if (t.T[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 over original columns only.
  if (!run_simplex(t, c, n)) {
    res.status = LpResult::Status::Unbounded;
    return res;
  }
  res.status = LpResult::Status::Optimal;
  res.x.assign(n, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs[i];
  }
  res.objective = 0;
  for (int j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

LpResult lp_feasible(const RatMat& A, const RatVec& b) {
  RatVec c(A.empty() ? 0 : A[0].size(), Rat(0));
  return solve_lp(A, b, c);
}

}  // namespace specker
