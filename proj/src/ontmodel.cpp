#include "specker/ontmodel.hpp"

#include <stdexcept>

namespace specker {

ModelReport validate_model(const FiniteOntologicalModel& model) {
  ModelReport report;
  const auto& sc = model.scenario;
  Rat total = 0;
  for (size_t s = 0; s < model.states.size(); ++s) {
    const auto& st = model.states[s];
    std::string tag = "state " + std::to_string(s);
    if (st.weight < 0) report.issues.push_back(tag + ": negative weight");
    total += st.weight;
    if (static_cast<int>(st.responses.size()) != sc.n_measurements()) {
      report.issues.push_back(tag + ": wrong number of response functions");
      continue;
    }
    for (int m = 0; m < sc.n_measurements(); ++m) {
      Rat sum = 0;
      if (static_cast<int>(st.responses[m].size()) != sc.measurements[m].outcomes) {
        report.issues.push_back(tag + ": response size mismatch for " + sc.measurements[m].name);
        continue;
      }
      for (const Rat& q : st.responses[m]) {
        if (q < 0 || q > 1) report.issues.push_back(tag + ": response outside [0,1]");
        sum += q;
      }
      if (sum != 1) report.issues.push_back(tag + ": response for " + sc.measurements[m].name +
                                            " not normalized");
    }
    for (const auto& [c, dist] : st.joint_responses) {
      if (c < 0 || c >= sc.n_contexts()) {
        report.issues.push_back(tag + ": joint response for unknown context");
        continue;
      }
      if (static_cast<long long>(dist.size()) != sc.context_size(c)) {
        report.issues.push_back(tag + ": joint response size mismatch");
        continue;
      }
      Rat sum = 0;
      for (const Rat& q : dist) {
        if (q < 0) report.issues.push_back(tag + ": negative joint response entry");
        sum += q;
      }
      if (sum != 1) report.issues.push_back(tag + ": joint response not normalized");
      // Measurement noncontextuality: marginals of the joint response must
      // reproduce the single responses.
      for (size_t k = 0; k < sc.contexts[c].size(); ++k) {
        int m = sc.contexts[c][k];
        std::vector<Rat> marg(sc.measurements[m].outcomes, Rat(0));
        for (long long idx = 0; idx < sc.context_size(c); ++idx) {
          marg[sc.context_outcome(c, idx)[k]] += dist[idx];
        }
        if (marg != st.responses[m]) {
          report.issues.push_back(tag + ": joint response marginal differs from single response of " +
                                  sc.measurements[m].name);
        }
      }
    }
  }
  if (total != 1) report.issues.push_back("weights do not sum to 1");
  return report;
}

std::vector<Rat> product_response(const MarginalScenario& sc, const OnticState& st, int context) {
  long long sz = sc.context_size(context);
  std::vector<Rat> out(sz, Rat(1));
  for (long long idx = 0; idx < sz; ++idx) {
    auto tuple = sc.context_outcome(context, idx);
    for (size_t k = 0; k < sc.contexts[context].size(); ++k) {
      out[idx] *= st.responses[sc.contexts[context][k]][tuple[k]];
    }
  }
  return out;
}

std::vector<Rat> context_response(const MarginalScenario& sc, const OnticState& st, int context) {
  auto it = st.joint_responses.find(context);
  if (it != st.joint_responses.end()) return it->second;
  return product_response(sc, st, context);
}

bool is_deterministic(const FiniteOntologicalModel& model) {
  for (const auto& st : model.states) {
    for (const auto& resp : st.responses) {
      for (const Rat& q : resp) {
        if (q != 0 && q != 1) return false;
      }
    }
    for (const auto& [c, dist] : st.joint_responses) {
      if (dist != product_response(model.scenario, st, c)) return false;
    }
  }
  return true;
}

ScenarioStats stats_from_model(const FiniteOntologicalModel& model) {
  const auto& sc = model.scenario;
  ScenarioStats stats;
  stats.dists.resize(sc.n_contexts());
  for (int c = 0; c < sc.n_contexts(); ++c) {
    stats.dists[c].assign(sc.context_size(c), Rat(0));
    for (const auto& st : model.states) {
      auto resp = context_response(sc, st, c);
      for (long long idx = 0; idx < sc.context_size(c); ++idx) {
        stats.dists[c][idx] += st.weight * resp[idx];
      }
    }
  }
  return stats;
}

CorrelationVector correlation_from_model(const FiniteOntologicalModel& model) {
  return correlation_from_stats(stats_from_model(model));
}

std::array<Rat, 2> single_response(const Rat& eta, int bit) {
  if (eta < 0 || eta > 1) throw std::invalid_argument("eta must lie in [0,1]");
  std::array<Rat, 2> out{(1 - eta) / 2, (1 - eta) / 2};
  out[bit] += eta;
  return out;
}

std::array<Rat, 4> pairwise_response(const PairwiseResponseDecomposition& d) {
  for (const Rat* q : {&d.alpha, &d.beta, &d.gamma, &d.delta, &d.epsilon}) {
    if (*q < 0) throw InvalidDecomposition("negative coefficient");
  }
  if (d.alpha + d.beta != d.eta || d.alpha + d.gamma != d.eta) {
    throw InvalidDecomposition("alpha+beta = alpha+gamma = eta fails");
  }
  if (d.gamma + d.delta + d.epsilon != 1 - d.eta ||
      d.beta + d.delta + d.epsilon != 1 - d.eta) {
    throw InvalidDecomposition("complementary constraint fails");
  }
  Rat half(1, 2);
  std::array<Rat, 4> t{Rat(0), Rat(0), Rat(0), Rat(0)};
  auto cell = [&](int xi, int xj) -> Rat& { return t[2 * xi + xj]; };
  cell(d.xi, d.xj) += d.alpha;
  cell(d.xi, 0) += d.beta * half;
  cell(d.xi, 1) += d.beta * half;
  cell(0, d.xj) += d.gamma * half;
  cell(1, d.xj) += d.gamma * half;
  cell(0, 0) += d.delta * half;
  cell(1, 1) += d.delta * half;
  cell(0, 1) += d.epsilon * half;
  cell(1, 0) += d.epsilon * half;
  return t;
}

PairwiseResponseDecomposition max_anticorrelation_decomposition(const Rat& eta, int xi, int xj) {
  return {eta, Rat(0), Rat(0), Rat(0), 1 - eta, eta, xi, xj};
}

PairwiseResponseDecomposition min_anticorrelation_decomposition(const Rat& eta, int xi, int xj) {
  return {eta, Rat(0), Rat(0), 1 - eta, Rat(0), eta, xi, xj};
}

Rat anticorrelation(const std::array<Rat, 4>& table) { return table[1] + table[2]; }

std::pair<Rat, Rat> max_anticorrelation_bounds(const Rat& eta) {
  Rat lo = 2, hi = -1;
  for (int xi = 0; xi < 2; ++xi) {
    for (int xj = 0; xj < 2; ++xj) {
      Rat w = anticorrelation(pairwise_response(max_anticorrelation_decomposition(eta, xi, xj)));
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
  }
  return {lo, hi};
}

std::pair<Rat, Rat> min_anticorrelation_bounds(const Rat& eta) {
  Rat lo = 2, hi = -1;
  for (int xi = 0; xi < 2; ++xi) {
    for (int xj = 0; xj < 2; ++xj) {
      Rat w = anticorrelation(pairwise_response(min_anticorrelation_decomposition(eta, xi, xj)));
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
  }
  return {lo, hi};
}

MaxRResult noncontextual_max_R(int which, const Rat& eta) {
  if (which < 0 || which > 3) throw std::invalid_argument("R index must be 0..3");
  // Coefficients of (w12, w23, w13) in R_which.
  std::array<int, 3> coef;
  switch (which) {
    case 0: coef = {1, -1, -1}; break;
    case 1: coef = {-1, 1, -1}; break;
    case 2: coef = {-1, -1, 1}; break;
    default: coef = {1, 1, 1}; break;
  }
  MaxRResult best;
  bool first = true;
  for (int a = 0; a < 8; ++a) {
    int x1 = (a >> 2) & 1, x2 = (a >> 1) & 1, x3 = a & 1;
    const std::array<std::pair<int, int>, 3> bits{{{x1, x2}, {x2, x3}, {x1, x3}}};
    // Per pair, the extremal decompositions are the only candidates; try both.
    Rat value = 0;
    for (int p = 0; p < 3; ++p) {
      Rat wmax = anticorrelation(pairwise_response(
          max_anticorrelation_decomposition(eta, bits[p].first, bits[p].second)));
      Rat wmin = anticorrelation(pairwise_response(
          min_anticorrelation_decomposition(eta, bits[p].first, bits[p].second)));
      value += std::max(coef[p] * wmax, coef[p] * wmin);
    }
    if (first || value > best.value) {
      best.value = value;
      best.maximizing_assignments = {a};
      first = false;
    } else if (value == best.value) {
      best.maximizing_assignments.push_back(a);
    }
  }
  return best;
}

FiniteOntologicalModel fair_coin_model() {
  FiniteOntologicalModel model;
  model.scenario = specker_scenario();
  OnticState st;
  Rat half(1, 2);
  st.weight = 1;
  st.responses = {{half, half}, {half, half}, {half, half}};
  std::vector<Rat> anti{Rat(0), half, half, Rat(0)};
  st.joint_responses = {{0, anti}, {1, anti}, {2, anti}};
  model.states = {st};
  model.deterministic = false;
  model.factorizable = false;
  return model;
}

FiniteOntologicalModel deterministic_specker_model(int assignment) {
  if (assignment < 0 || assignment > 7) throw std::invalid_argument("assignment must be 0..7");
  FiniteOntologicalModel model;
  model.scenario = specker_scenario();
  OnticState st;
  st.weight = 1;
  for (int m = 0; m < 3; ++m) {
    int bit = (assignment >> (2 - m)) & 1;
    std::vector<Rat> r{Rat(0), Rat(0)};
    r[bit] = 1;
    st.responses.push_back(r);
  }
  model.states = {st};
  model.deterministic = true;
  model.factorizable = true;
  return model;
}

}  // namespace specker
