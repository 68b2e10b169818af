#include "specker/finebridge.hpp"

#include <algorithm>

#include "specker/simplex.hpp"

namespace specker {

namespace {

std::string join_stats_issues(const StatsReport& r) {
  std::string s = "invalid scenario stats:";
  for (const auto& i : r.issues) s += " [" + i + "]";
  return s;
}

constexpr long long kJointSizeGuard = 1000000;

}  // namespace

InvalidStats::InvalidStats(StatsReport r)
    : std::runtime_error(join_stats_issues(r)), report(std::move(r)) {}

JointResult find_joint(const MarginalScenario& sc, const ScenarioStats& stats) {
  StatsReport sr = validate_stats(sc, stats);
  if (!sr.ok()) throw InvalidStats(std::move(sr));
  long long n = sc.joint_size();
  if (n > kJointSizeGuard) {
    throw std::invalid_argument("product outcome space exceeds the 10^6 size guard");
  }

  // Variables: one per joint outcome. One equality row per (context, outcome).
  int rows = 0;
  for (int c = 0; c < sc.n_contexts(); ++c) rows += static_cast<int>(sc.context_size(c));
  RatMat A(rows, RatVec(n, Rat(0)));
  RatVec b(rows);
  int row = 0;
  for (int c = 0; c < sc.n_contexts(); ++c) {
    for (long long k = 0; k < sc.context_size(c); ++k, ++row) {
      b[row] = stats.dists[c][k];
    }
  }
  for (long long j = 0; j < n; ++j) {
    auto tuple = sc.joint_outcome(j);
    int base = 0;
    for (int c = 0; c < sc.n_contexts(); ++c) {
      std::vector<int> sub;
      sub.reserve(sc.contexts[c].size());
      for (int m : sc.contexts[c]) sub.push_back(tuple[m]);
      A[base + sc.context_index(c, sub)][j] = 1;
      base += static_cast<int>(sc.context_size(c));
    }
  }

  LpResult lp = lp_feasible(A, b);
  JointResult out;
  if (lp.status == LpResult::Status::Optimal) {
    out.feasible = true;
    out.joint.p = std::move(lp.x);
  } else {
    out.feasible = false;
    out.certificate = std::move(lp.farkas);
  }
  return out;
}

JointResult find_joint(const CorrelationVector& cv) {
  return find_joint(specker_scenario(), stats_from_correlation(cv));
}

Interval specker_p000_interval(const SixParams& s) {
  // Pairwise cell probabilities in terms of the six parameters.
  Rat a12 = (s.p1 + s.p2 - s.w12) / 2;  // p(00|M12)
  Rat b12 = (s.w12 + s.p1 - s.p2) / 2;  // p(01|M12)
  Rat c12 = (s.w12 - s.p1 + s.p2) / 2;  // p(10|M12)
  Rat a23 = (s.p2 + s.p3 - s.w23) / 2;  // p(00|M23)
  Rat a13 = (s.p1 + s.p3 - s.w13) / 2;  // p(00|M13)
  Rat d13 = (s.w13 - s.p1 + s.p3) / 2;  // p(10|M13)

  // Each reconstructed p(X1X2X3) is t + const or const - t; [0,1] bounds on
  // each give lower/upper bounds on t = p(000).
  Rat lo(0), hi(1);
  auto minus_t = [&](const Rat& c) {  // p = c - t in [0,1]
    lo = std::max(lo, Rat(c - 1));
    hi = std::min(hi, c);
  };
  auto plus_t = [&](const Rat& c) {  // p = c + t in [0,1]
    lo = std::max(lo, Rat(-c));
    hi = std::min(hi, Rat(1 - c));
  };
  minus_t(a12);                          // p(001)
  minus_t(a13);                          // p(010)
  minus_t(a23);                          // p(100)
  plus_t(b12 - a13);                     // p(011)
  plus_t(c12 - a23);                     // p(101)
  plus_t(d13 - a23);                     // p(110)
  minus_t(1 - a12 - b12 - c12 - d13 + a23);  // p(111)
  hi = std::min(hi, std::min(s.p1, std::min(s.p2, s.p3)));

  Interval iv;
  if (lo <= hi) {
    iv.empty = false;
    iv.lo = lo;
    iv.hi = hi;
  }
  return iv;
}

JointDistribution specker_joint_from_p000(const SixParams& s, const Rat& p000) {
  Interval iv = specker_p000_interval(s);
  if (!iv.contains(p000)) {
    throw std::invalid_argument("p000 outside the feasible interval");
  }
  Rat a12 = (s.p1 + s.p2 - s.w12) / 2;
  Rat b12 = (s.w12 + s.p1 - s.p2) / 2;
  Rat c12 = (s.w12 - s.p1 + s.p2) / 2;
  Rat a23 = (s.p2 + s.p3 - s.w23) / 2;
  Rat a13 = (s.p1 + s.p3 - s.w13) / 2;
  Rat d13 = (s.w13 - s.p1 + s.p3) / 2;

  JointDistribution joint;
  joint.p.assign(8, Rat(0));
  joint.p[0] = p000;                                // 000
  joint.p[1] = a12 - p000;                          // 001
  joint.p[2] = a13 - p000;                          // 010
  joint.p[3] = b12 - a13 + p000;                    // 011
  joint.p[4] = a23 - p000;                          // 100
  joint.p[5] = c12 - a23 + p000;                    // 101
  joint.p[6] = d13 - a23 + p000;                    // 110
  joint.p[7] = 1 - a12 - b12 - c12 - d13 + a23 - p000;  // 111
  return joint;
}

FiniteOntologicalModel deterministic_model_from_joint(const MarginalScenario& sc,
                                                      const JointDistribution& joint) {
  FiniteOntologicalModel model;
  model.scenario = sc;
  for (long long idx = 0; idx < sc.joint_size(); ++idx) {
    if (joint.p[idx] == 0) continue;
    OnticState st;
    st.weight = joint.p[idx];
    auto tuple = sc.joint_outcome(idx);
    for (int m = 0; m < sc.n_measurements(); ++m) {
      std::vector<Rat> r(sc.measurements[m].outcomes, Rat(0));
      r[tuple[m]] = 1;
      st.responses.push_back(std::move(r));
    }
    model.states.push_back(std::move(st));
  }
  model.deterministic = true;
  model.factorizable = true;
  return model;
}

bool factorizability_check(const FiniteOntologicalModel& model) {
  for (const auto& st : model.states) {
    for (const auto& [c, dist] : st.joint_responses) {
      if (dist != product_response(model.scenario, st, c)) return false;
    }
  }
  return true;
}

JointDistribution joint_from_factorizable(const FiniteOntologicalModel& model) {
  if (!factorizability_check(model)) {
    throw NotFactorizable("a joint response function deviates from the product of singles");
  }
  const auto& sc = model.scenario;
  long long n = sc.joint_size();
  if (n > kJointSizeGuard) {
    throw std::invalid_argument("product outcome space exceeds the 10^6 size guard");
  }
  JointDistribution joint;
  joint.p.assign(n, Rat(0));
  for (const auto& st : model.states) {
    for (long long idx = 0; idx < n; ++idx) {
      auto tuple = sc.joint_outcome(idx);
      Rat prod = st.weight;
      for (int m = 0; m < sc.n_measurements() && prod != 0; ++m) {
        prod *= st.responses[m][tuple[m]];
      }
      joint.p[idx] += prod;
    }
  }
  return joint;
}

}  // namespace specker
