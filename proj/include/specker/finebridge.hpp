#pragma once

#include "specker/ontmodel.hpp"
#include "specker/scenario.hpp"

namespace specker {

/// Result of the joint-distribution marginal problem: either a joint whose
/// marginals reproduce every context distribution, or a Farkas certificate
/// c with c.stats > 0 while c.(marginals of any joint) <= 0.
struct JointResult {
  bool feasible = false;
  JointDistribution joint;
  std::vector<Rat> certificate;  // one entry per (context, outcome) row
};

struct InvalidStats : std::runtime_error {
  explicit InvalidStats(StatsReport r);
  StatsReport report;
};

/// Exact LP feasibility over the full product outcome space. Refuses
/// scenarios with product space larger than 10^6 points.
JointResult find_joint(const MarginalScenario& sc, const ScenarioStats& stats);

/// Convenience for Specker's scenario.
JointResult find_joint(const CorrelationVector& cv);

/// Exact interval of p(000) values for which all eight reconstructed
/// three-outcome probabilities lie in [0,1], intersected with
/// [0, min(p1,p2,p3)]. Nonempty iff the point admits a joint distribution.
struct Interval {
  bool empty = true;
  Rat lo, hi;
  bool contains(const Rat& t) const { return !empty && lo <= t && t <= hi; }
};
Interval specker_p000_interval(const SixParams& s);

/// Closed-form joint for Specker's scenario from a chosen p(000) in the
/// interval; indexing matches specker_scenario().joint_index.
JointDistribution specker_joint_from_p000(const SixParams& s, const Rat& p000);

/// Lambda-space = support of the joint, deterministic response functions
/// given by the outcome assignment.
FiniteOntologicalModel deterministic_model_from_joint(const MarginalScenario& sc,
                                                      const JointDistribution& joint);

struct NotFactorizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// True iff every joint response equals the product of singles for every
/// state and context.
bool factorizability_check(const FiniteOntologicalModel& model);

/// p(k_1..k_N) = sum_lambda mu(lambda) prod_i xi(k_i|M_i;lambda).
/// Throws NotFactorizable when an explicit joint response deviates from the
/// product.
JointDistribution joint_from_factorizable(const FiniteOntologicalModel& model);

}  // namespace specker
