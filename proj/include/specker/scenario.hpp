#pragma once

#include <string>
#include <vector>

#include "specker/correlation.hpp"

namespace specker {

struct Measurement {
  std::string name;
  int outcomes = 2;
};

/// General marginal scenario: N finite-outcome measurements plus a family of
/// jointly measurable subsets (contexts), as 0-based measurement indices.
struct MarginalScenario {
  std::vector<Measurement> measurements;
  std::vector<std::vector<int>> contexts;

  int n_measurements() const { return static_cast<int>(measurements.size()); }
  int n_contexts() const { return static_cast<int>(contexts.size()); }

  /// Size of a context's product outcome set.
  long long context_size(int c) const;
  /// Size of the full product outcome set (may overflow desk scale; callers
  /// guard before materializing joints).
  long long joint_size() const;

  /// Row-major flat index over the full product space, measurement 0 most
  /// significant. `outcome` has one entry per measurement.
  long long joint_index(const std::vector<int>& outcome) const;
  std::vector<int> joint_outcome(long long index) const;

  /// Row-major flat index over a context's product space, in the context's
  /// listed member order.
  long long context_index(int c, const std::vector<int>& outcome) const;
  std::vector<int> context_outcome(int c, long long index) const;
};

/// Observed distribution per context, flat-indexed as above.
struct ScenarioStats {
  std::vector<std::vector<Rat>> dists;
};

struct StatsReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

/// Structural checks plus normalization and generalized no-disturbance
/// (overlapping contexts agree on shared marginals).
StatsReport validate_stats(const MarginalScenario& sc, const ScenarioStats& stats);

/// Full joint distribution over the product outcome set.
struct JointDistribution {
  std::vector<Rat> p;
};

/// Marginalizes a joint onto every context of the scenario.
ScenarioStats marginals_of_joint(const MarginalScenario& sc, const JointDistribution& joint);

/// Specker's scenario: three binary measurements, contexts {12},{23},{13}.
MarginalScenario specker_scenario();
ScenarioStats stats_from_correlation(const CorrelationVector& cv);
CorrelationVector correlation_from_stats(const ScenarioStats& stats);

}  // namespace specker
