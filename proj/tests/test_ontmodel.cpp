#include <doctest.h>

#include <algorithm>
#include <random>

#include "specker/inequalities.hpp"
#include "specker/ontmodel.hpp"
#include "specker/polytope.hpp"

using namespace specker;

TEST_CASE("single_response mixes a point mass with the uniform coin") {
  auto xi = single_response(Rat(3, 4), 0);
  CHECK(xi[0] == Rat(7, 8));
  CHECK(xi[1] == Rat(1, 8));
  auto flat = single_response(Rat(0), 1);
  CHECK(flat[0] == Rat(1, 2));
  CHECK(flat[1] == Rat(1, 2));
  auto sharp = single_response(Rat(1), 1);
  CHECK(sharp[0] == 0);
  CHECK(sharp[1] == 1);
}

TEST_CASE("pairwise_response enforces the decomposition constraints") {
  PairwiseResponseDecomposition d;
  d.eta = Rat(1, 2);
  d.xi = 0;
  d.xj = 1;
  d.alpha = Rat(1, 2);
  d.beta = Rat(0);
  d.gamma = Rat(0);
  d.delta = Rat(0);
  d.epsilon = Rat(1, 2);
  auto table = pairwise_response(d);
  Rat total = table[0] + table[1] + table[2] + table[3];
  CHECK(total == 1);
  // Marginals must reproduce the eta-sharp singles.
  CHECK(table[0] + table[1] == single_response(d.eta, d.xi)[0]);
  CHECK(table[0] + table[2] == single_response(d.eta, d.xj)[0]);

  d.beta = Rat(1, 4);  // alpha+beta != eta
  CHECK_THROWS_AS(pairwise_response(d), InvalidDecomposition);
  d.beta = Rat(0);
  d.epsilon = Rat(-1, 2);
  CHECK_THROWS_AS(pairwise_response(d), InvalidDecomposition);
}

TEST_CASE("extremal decompositions hit the advertised anticorrelation values") {
  Rat eta(2, 3);
  // Maximizing: w = 1 on anticorrelated assignments, 1-eta on correlated ones.
  CHECK(anticorrelation(pairwise_response(max_anticorrelation_decomposition(eta, 0, 1))) == 1);
  CHECK(anticorrelation(pairwise_response(max_anticorrelation_decomposition(eta, 0, 0))) ==
        1 - eta);
  // Minimizing: w = 0 on correlated assignments, eta on anticorrelated ones.
  CHECK(anticorrelation(pairwise_response(min_anticorrelation_decomposition(eta, 1, 1))) == 0);
  CHECK(anticorrelation(pairwise_response(min_anticorrelation_decomposition(eta, 1, 0))) == eta);

  auto [max_lo, max_hi] = max_anticorrelation_bounds(eta);
  CHECK(max_lo == 1 - eta);
  CHECK(max_hi == 1);
  auto [min_lo, min_hi] = min_anticorrelation_bounds(eta);
  CHECK(min_lo == 0);
  CHECK(min_hi == eta);
}

TEST_CASE("noncontextual maxima follow the closed forms") {
  for (int num = 0; num <= 20; ++num) {
    Rat eta(num, 20);
    auto r3 = noncontextual_max_R(3, eta);
    CHECK(r3.value == 3 - eta);
    for (int i = 0; i < 3; ++i) {
      CHECK(noncontextual_max_R(i, eta).value == 1 - eta);
    }
  }
}

TEST_CASE("R3 maximizers are the six non-constant assignments for eta > 0") {
  auto r = noncontextual_max_R(3, Rat(1, 3));
  std::vector<int> expect{1, 2, 3, 4, 5, 6};
  std::vector<int> got = r.maximizing_assignments;
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
  // At eta = 0 every assignment ties.
  CHECK(noncontextual_max_R(3, Rat(0)).maximizing_assignments.size() == 8);
}

TEST_CASE("fair coin model reproduces the OS box") {
  FiniteOntologicalModel coin = fair_coin_model();
  CHECK(validate_model(coin).ok());
  CHECK(!is_deterministic(coin));
  CHECK(correlation_from_model(coin) == vertices()[11].cv);
  // Its statistics sit on R3 = 3, outside any noncontextual bound.
  RValues r = evaluate(to_six_params(correlation_from_model(coin)));
  CHECK(r.r3 == 3);
}

TEST_CASE("deterministic single-assignment models reproduce the deterministic vertices") {
  for (int a = 0; a < 8; ++a) {
    FiniteOntologicalModel m = deterministic_specker_model(a);
    CHECK(validate_model(m).ok());
    CHECK(is_deterministic(m));
    CHECK(correlation_from_model(m) == vertices()[a].cv);
  }
}

TEST_CASE("validate_model flags broken joint marginals") {
  FiniteOntologicalModel m = deterministic_specker_model(0);
  m.states[0].joint_responses[0] = {Rat(0), Rat(0), Rat(0), Rat(1)};  // marginal mismatch
  CHECK(!validate_model(m).ok());
}

TEST_CASE("mixtures of eta-sharp states stay within the noncontextual bound") {
  // Any mixture over assignments and extremal decompositions obeys
  // R3 <= 3 - eta.
  std::mt19937_64 rng(57);
  Rat eta(3, 5);
  std::uniform_int_distribution<int> assign(0, 7);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 200; ++t) {
    Rat r3 = 0;
    int a = assign(rng);
    std::array<int, 3> bits{(a >> 2) & 1, (a >> 1) & 1, a & 1};
    std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
    for (auto [i, j] : pairs) {
      auto d = coin(rng) ? max_anticorrelation_decomposition(eta, bits[i], bits[j])
                         : min_anticorrelation_decomposition(eta, bits[i], bits[j]);
      r3 += anticorrelation(pairwise_response(d));
    }
    CHECK(r3 <= 3 - eta);
  }
}
