#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "specker/finebridge.hpp"
#include "specker/inequalities.hpp"
#include "specker/polytope.hpp"

using namespace specker;
using testutil::random_mixture;

namespace {

bool inside_ks(const CorrelationVector& cv) {
  return in_ks_polytope(to_six_params(cv)).inside;
}

}  // namespace

TEST_CASE("joint existence agrees with polytope membership on the vertices") {
  for (const auto& v : vertices()) {
    auto r = find_joint(v.cv);
    CHECK(r.feasible == (v.kind == Vertex::Kind::Deterministic));
  }
}

TEST_CASE("a found joint reproduces the statistics exactly") {
  std::mt19937_64 rng(41);
  MarginalScenario sc = specker_scenario();
  int feasible_seen = 0;
  for (int t = 0; t < 60; ++t) {
    CorrelationVector cv = random_mixture(rng);
    auto r = find_joint(cv);
    CHECK(r.feasible == inside_ks(cv));
    if (!r.feasible) continue;
    ++feasible_seen;
    ScenarioStats back = marginals_of_joint(sc, r.joint);
    CHECK(correlation_from_stats(back) == cv);
    Rat total = 0;
    for (const Rat& p : r.joint.p) {
      CHECK(p >= 0);
      total += p;
    }
    CHECK(total == 1);
  }
  CHECK(feasible_seen > 0);
}

TEST_CASE("infeasibility comes with a separating certificate") {
  auto r = find_joint(vertices()[11].cv);
  REQUIRE(!r.feasible);
  MarginalScenario sc = specker_scenario();
  ScenarioStats stats = stats_from_correlation(vertices()[11].cv);
  // c.stats > 0
  Rat dot = 0;
  size_t row = 0;
  for (int c = 0; c < sc.n_contexts(); ++c) {
    for (const Rat& p : stats.dists[c]) dot += r.certificate[row++] * p;
  }
  CHECK(dot > 0);
  // c.(marginal rows of any deterministic joint) <= 0
  for (long long j = 0; j < sc.joint_size(); ++j) {
    std::vector<int> outcome = sc.joint_outcome(j);
    Rat col = 0;
    row = 0;
    for (int c = 0; c < sc.n_contexts(); ++c) {
      std::vector<int> ctx_outcome;
      for (int m : sc.contexts[c]) ctx_outcome.push_back(outcome[m]);
      long long hit = sc.context_index(c, ctx_outcome);
      for (long long k = 0; k < sc.context_size(c); ++k) {
        if (k == hit) col += r.certificate[row];
        ++row;
      }
    }
    CHECK(col <= 0);
  }
}

TEST_CASE("p000 interval is nonempty exactly inside the polytope") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    CorrelationVector cv = random_mixture(rng);
    SixParams s = to_six_params(cv);
    Interval iv = specker_p000_interval(s);
    CHECK(iv.empty == !inside_ks(cv));
    if (iv.empty) continue;
    CHECK(iv.lo <= iv.hi);
    for (const Rat& t0 : {iv.lo, iv.hi, Rat((iv.lo + iv.hi) / 2)}) {
      JointDistribution joint = specker_joint_from_p000(s, t0);
      Rat total = 0;
      for (const Rat& p : joint.p) {
        CHECK(p >= 0);
        CHECK(p <= 1);
        total += p;
      }
      CHECK(total == 1);
      ScenarioStats back = marginals_of_joint(specker_scenario(), joint);
      CHECK(correlation_from_stats(back) == cv);
    }
  }
  CHECK(specker_p000_interval(to_six_params(vertices()[11].cv)).empty);
}

TEST_CASE("deterministic model from joint reproduces the statistics") {
  std::mt19937_64 rng(47);
  MarginalScenario sc = specker_scenario();
  for (int t = 0; t < 40; ++t) {
    CorrelationVector cv = random_mixture(rng);
    auto r = find_joint(cv);
    if (!r.feasible) continue;
    FiniteOntologicalModel model = deterministic_model_from_joint(sc, r.joint);
    CHECK(validate_model(model).ok());
    CHECK(is_deterministic(model));
    CHECK(factorizability_check(model));
    CHECK(correlation_from_model(model) == cv);
  }
}

TEST_CASE("joint from a factorizable model closes the cycle") {
  auto r = find_joint(vertices()[3].cv);
  REQUIRE(r.feasible);
  MarginalScenario sc = specker_scenario();
  FiniteOntologicalModel model = deterministic_model_from_joint(sc, r.joint);
  JointDistribution joint = joint_from_factorizable(model);
  CHECK(joint.p == r.joint.p);
}

TEST_CASE("non-factorizable models are rejected by joint_from_factorizable") {
  FiniteOntologicalModel coin = fair_coin_model();
  CHECK(validate_model(coin).ok());
  CHECK(!factorizability_check(coin));
  CHECK_THROWS_AS(joint_from_factorizable(coin), NotFactorizable);
  CHECK(correlation_from_model(coin) == vertices()[11].cv);
}

TEST_CASE("find_joint rejects malformed statistics") {
  MarginalScenario sc = specker_scenario();
  ScenarioStats stats = stats_from_correlation(vertices()[0].cv);
  stats.dists[0][0] = Rat(2);  // breaks normalization
  CHECK_THROWS_AS(find_joint(sc, stats), InvalidStats);
}

TEST_CASE("general scenarios: a 4-cycle box has no joint") {
  // PR-box-like statistics on a 4-cycle of binary measurements.
  MarginalScenario sc;
  sc.measurements = {{"A0", 2}, {"A1", 2}, {"B0", 2}, {"B1", 2}};
  sc.contexts = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  ScenarioStats stats;
  std::vector<Rat> corr{Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)};
  std::vector<Rat> anti{Rat(0), Rat(1, 2), Rat(1, 2), Rat(0)};
  stats.dists = {corr, corr, corr, anti};
  REQUIRE(validate_stats(sc, stats).ok());
  auto r = find_joint(sc, stats);
  CHECK(!r.feasible);
  // The classical version admits one.
  stats.dists[3] = corr;
  CHECK(find_joint(sc, stats).feasible);
}
