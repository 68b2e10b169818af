#include "specker/scenario.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace specker {

long long MarginalScenario::context_size(int c) const {
  long long sz = 1;
  for (int m : contexts[c]) sz *= measurements[m].outcomes;
  return sz;
}

long long MarginalScenario::joint_size() const {
  long long sz = 1;
  for (const auto& m : measurements) sz *= m.outcomes;
  return sz;
}

long long MarginalScenario::joint_index(const std::vector<int>& outcome) const {
  long long idx = 0;
  for (size_t i = 0; i < measurements.size(); ++i) {
    idx = idx * measurements[i].outcomes + outcome[i];
  }
  return idx;
}

std::vector<int> MarginalScenario::joint_outcome(long long index) const {
  std::vector<int> out(measurements.size());
  for (int i = static_cast<int>(measurements.size()) - 1; i >= 0; --i) {
    out[i] = static_cast<int>(index % measurements[i].outcomes);
    index /= measurements[i].outcomes;
  }
  return out;
}

long long MarginalScenario::context_index(int c, const std::vector<int>& outcome) const {
  long long idx = 0;
  for (size_t k = 0; k < contexts[c].size(); ++k) {
    idx = idx * measurements[contexts[c][k]].outcomes + outcome[k];
  }
  return idx;
}

std::vector<int> MarginalScenario::context_outcome(int c, long long index) const {
  std::vector<int> out(contexts[c].size());
  for (int k = static_cast<int>(contexts[c].size()) - 1; k >= 0; --k) {
    out[k] = static_cast<int>(index % measurements[contexts[c][k]].outcomes);
    index /= measurements[contexts[c][k]].outcomes;
  }
  return out;
}

namespace {

// Marginal of a context distribution onto a sorted subset of its members.
std::map<std::vector<int>, Rat> marginal_onto(const MarginalScenario& sc, int c,
                                              const std::vector<Rat>& dist,
                                              const std::vector<int>& subset) {
  std::map<std::vector<int>, Rat> out;
  for (long long idx = 0; idx < sc.context_size(c); ++idx) {
    auto tuple = sc.context_outcome(c, idx);
    std::vector<int> key;
    key.reserve(subset.size());
    for (int m : subset) {
      auto it = std::find(sc.contexts[c].begin(), sc.contexts[c].end(), m);
      key.push_back(tuple[it - sc.contexts[c].begin()]);
    }
    out[key] += dist[idx];
  }
  return out;
}

}  // namespace

StatsReport validate_stats(const MarginalScenario& sc, const ScenarioStats& stats) {
  StatsReport report;
  if (sc.measurements.empty()) report.issues.push_back("scenario has no measurements");
  for (const auto& m : sc.measurements) {
    if (m.outcomes < 1) report.issues.push_back("measurement '" + m.name + "' has empty outcome set");
  }
  for (int c = 0; c < sc.n_contexts(); ++c) {
    if (sc.contexts[c].empty()) report.issues.push_back("context " + std::to_string(c) + " is empty");
    for (int m : sc.contexts[c]) {
      if (m < 0 || m >= sc.n_measurements()) {
        report.issues.push_back("context " + std::to_string(c) + " references unknown measurement");
      }
    }
  }
  if (!report.ok()) return report;
  if (static_cast<int>(stats.dists.size()) != sc.n_contexts()) {
    report.issues.push_back("stats must supply one distribution per context");
    return report;
  }
  for (int c = 0; c < sc.n_contexts(); ++c) {
    if (static_cast<long long>(stats.dists[c].size()) != sc.context_size(c)) {
      report.issues.push_back("context " + std::to_string(c) + " has wrong distribution size");
      continue;
    }
    Rat sum = 0;
    for (const Rat& q : stats.dists[c]) {
      if (q < 0) report.issues.push_back("negative probability in context " + std::to_string(c));
      sum += q;
    }
    if (sum != 1) report.issues.push_back("context " + std::to_string(c) + " is not normalized");
  }
  if (!report.ok()) return report;

  // Generalized no-disturbance: shared marginals of overlapping contexts agree.
  for (int a = 0; a < sc.n_contexts(); ++a) {
    for (int b = a + 1; b < sc.n_contexts(); ++b) {
      std::vector<int> shared;
      for (int m : sc.contexts[a]) {
        if (std::find(sc.contexts[b].begin(), sc.contexts[b].end(), m) != sc.contexts[b].end()) {
          shared.push_back(m);
        }
      }
      if (shared.empty()) continue;
      std::sort(shared.begin(), shared.end());
      auto ma = marginal_onto(sc, a, stats.dists[a], shared);
      auto mb = marginal_onto(sc, b, stats.dists[b], shared);
      if (ma != mb) {
        report.issues.push_back("contexts " + std::to_string(a) + " and " + std::to_string(b) +
                                " disagree on their shared marginal");
      }
    }
  }
  return report;
}

ScenarioStats marginals_of_joint(const MarginalScenario& sc, const JointDistribution& joint) {
  ScenarioStats stats;
  stats.dists.resize(sc.n_contexts());
  for (int c = 0; c < sc.n_contexts(); ++c) {
    stats.dists[c].assign(sc.context_size(c), Rat(0));
  }
  for (long long idx = 0; idx < sc.joint_size(); ++idx) {
    if (joint.p[idx] == 0) continue;
    auto tuple = sc.joint_outcome(idx);
    for (int c = 0; c < sc.n_contexts(); ++c) {
      std::vector<int> sub;
      sub.reserve(sc.contexts[c].size());
      for (int m : sc.contexts[c]) sub.push_back(tuple[m]);
      stats.dists[c][sc.context_index(c, sub)] += joint.p[idx];
    }
  }
  return stats;
}

MarginalScenario specker_scenario() {
  MarginalScenario sc;
  sc.measurements = {{"M1", 2}, {"M2", 2}, {"M3", 2}};
  sc.contexts = {{0, 1}, {1, 2}, {0, 2}};
  return sc;
}

ScenarioStats stats_from_correlation(const CorrelationVector& cv) {
  ScenarioStats stats;
  stats.dists.resize(3);
  for (Pair p : kPairs) {
    auto& d = stats.dists[static_cast<int>(p)];
    d.assign(4, Rat(0));
    for (int idx = 0; idx < 4; ++idx) d[idx] = cv.table(p)[idx];
  }
  return stats;
}

CorrelationVector correlation_from_stats(const ScenarioStats& stats) {
  if (stats.dists.size() != 3) throw std::invalid_argument("not Specker-scenario stats");
  CorrelationVector cv;
  for (Pair p : kPairs) {
    for (int idx = 0; idx < 4; ++idx) cv.table(p)[idx] = stats.dists[static_cast<int>(p)][idx];
  }
  return cv;
}

}  // namespace specker
