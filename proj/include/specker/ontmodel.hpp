#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "specker/scenario.hpp"

namespace specker {

/// One ontic state: its weight, single-measurement response functions, and
/// optional per-context joint response functions. Joint responses need not be
/// products of the singles -- non-factorizable models are first-class.
struct OnticState {
  Rat weight;
  std::vector<std::vector<Rat>> responses;   // per measurement, over outcomes
  std::map<int, std::vector<Rat>> joint_responses;  // context id -> distribution
};

struct FiniteOntologicalModel {
  MarginalScenario scenario;
  std::vector<OnticState> states;
  bool deterministic = false;
  bool factorizable = false;
};

struct ModelReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

/// Normalization per state and per measurement; joint response marginals must
/// equal the single responses (measurement noncontextuality).
ModelReport validate_model(const FiniteOntologicalModel& model);

/// True iff every explicit joint response equals the product of singles, and
/// every single response is 0/1 (joint responses then follow as products).
bool is_deterministic(const FiniteOntologicalModel& model);

/// Joint response of a state for a context: the explicit one when present,
/// otherwise the product of single responses.
std::vector<Rat> context_response(const MarginalScenario& sc, const OnticState& st, int context);

/// Product of single responses over a context (ignores any explicit joint).
std::vector<Rat> product_response(const MarginalScenario& sc, const OnticState& st, int context);

/// Model-predicted statistics: mixture of joint responses weighted by mu.
ScenarioStats stats_from_model(const FiniteOntologicalModel& model);
/// Specker-scenario convenience; throws if the model's scenario is not it.
CorrelationVector correlation_from_model(const FiniteOntologicalModel& model);

// --- The eta-sharp response-function family ------------------------------

/// xi(X|M;lambda) = eta * delta_{X,bit} + (1-eta) * uniform.
std::array<Rat, 2> single_response(const Rat& eta, int bit);

/// Convex decomposition of a pairwise response function into the five-term
/// family: alpha (deterministic on the assignment), beta/gamma (one side
/// uniform), delta (correlated coin), epsilon (anticorrelated coin).
struct PairwiseResponseDecomposition {
  Rat alpha, beta, gamma, delta, epsilon;
  Rat eta;
  int xi = 0, xj = 0;  // outcome assignment (X_i(lambda), X_j(lambda))
};

struct InvalidDecomposition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Distribution over (X_i, X_j) in lexicographic order; throws
/// InvalidDecomposition when the linear constraints
/// alpha+beta = alpha+gamma = eta, gamma+delta+epsilon = 1-eta fail or any
/// coefficient is negative.
std::array<Rat, 4> pairwise_response(const PairwiseResponseDecomposition& d);

/// The decompositions extremizing the anticorrelation probability w(lambda).
PairwiseResponseDecomposition max_anticorrelation_decomposition(const Rat& eta, int xi, int xj);
PairwiseResponseDecomposition min_anticorrelation_decomposition(const Rat& eta, int xi, int xj);

/// Anticorrelation probability of a pairwise response table.
Rat anticorrelation(const std::array<Rat, 4>& table);

/// Interval of w(lambda) attained by the maximizing (resp. minimizing)
/// decomposition as the assignment varies: (1-eta, 1) and (0, eta).
std::pair<Rat, Rat> max_anticorrelation_bounds(const Rat& eta);
std::pair<Rat, Rat> min_anticorrelation_bounds(const Rat& eta);

/// Noncontextual maximum of R_i(lambda) by enumerating the 8 assignments and,
/// per pair, both extremal decompositions. Closed forms: 3-eta for R3,
/// 1-eta for R0..R2.
struct MaxRResult {
  Rat value;
  std::vector<int> maximizing_assignments;  // assignments (X1X2X3 as 0..7) achieving the max
};
MaxRResult noncontextual_max_R(int which, const Rat& eta);

/// The single-lambda fair-coin model: every pairwise joint response is the
/// anticorrelated coin, singles are uniform. Reproduces the OS box (v11).
FiniteOntologicalModel fair_coin_model();

/// Single-lambda deterministic model for an outcome assignment (0..7).
FiniteOntologicalModel deterministic_specker_model(int assignment);

}  // namespace specker
