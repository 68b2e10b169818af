#include <doctest.h>

#include <random>

#include "specker/correlation.hpp"
#include "specker/polytope.hpp"

using namespace specker;

namespace {

CorrelationVector uniform_point() {
  CorrelationVector cv;
  for (Pair p : kPairs) {
    for (int idx = 0; idx < 4; ++idx) cv.table(p)[idx] = Rat(1, 4);
  }
  return cv;
}

Rat random_rat(std::mt19937_64& rng, int max_den = 64) {
  std::uniform_int_distribution<int> den(1, max_den);
  int q = den(rng);
  std::uniform_int_distribution<int> num(0, q);
  return Rat(num(rng), q);
}

}  // namespace

TEST_CASE("validate accepts vertex v0 and the uniform point") {
  CHECK(validate(vertices()[0].cv).ok());
  CHECK(validate(uniform_point()).ok());
}

TEST_CASE("validate reports a constructed no-disturbance contradiction") {
  // p(X1=0) = 1 from pair 12 but 0 from pair 13.
  CorrelationVector cv;
  cv.at(Pair::M12, 0, 0) = Rat(1, 2);
  cv.at(Pair::M12, 0, 1) = Rat(1, 2);
  cv.at(Pair::M23, 0, 0) = Rat(1, 2);
  cv.at(Pair::M23, 1, 0) = Rat(1, 2);
  cv.at(Pair::M13, 1, 0) = Rat(1, 2);
  cv.at(Pair::M13, 1, 1) = Rat(1, 2);
  auto report = validate(cv);
  REQUIRE(!report.ok());
  bool found_m1 = false;
  for (const auto& issue : report.issues) {
    if (issue.kind == ValidationIssue::Kind::NoDisturbanceFailure && issue.measurement == 1) {
      found_m1 = true;
      CHECK(issue.marginal_a != issue.marginal_b);
    }
  }
  CHECK(found_m1);
}

TEST_CASE("validate reports every violation, not just the first") {
  CorrelationVector cv;
  cv.at(Pair::M12, 0, 0) = Rat(-1, 4);  // negative and unnormalized
  auto report = validate(cv);
  CHECK(report.issues.size() >= 3);  // negative entry + 3 normalization failures at least
}

TEST_CASE("to_six_params on named points") {
  SixParams v0 = to_six_params(vertices()[0].cv);
  CHECK(v0.w12 == 0);
  CHECK(v0.w23 == 0);
  CHECK(v0.w13 == 0);
  CHECK(v0.p1 == 1);
  CHECK(v0.p2 == 1);
  CHECK(v0.p3 == 1);

  SixParams v11 = to_six_params(vertices()[11].cv);
  CHECK(v11.w12 == 1);
  CHECK(v11.w23 == 1);
  CHECK(v11.w13 == 1);
  CHECK(v11.p1 == Rat(1, 2));
  CHECK(v11.p2 == Rat(1, 2));
  CHECK(v11.p3 == Rat(1, 2));

  SixParams u = to_six_params(uniform_point());
  CHECK(u.w12 == Rat(1, 2));
  CHECK(u.p3 == Rat(1, 2));
}

TEST_CASE("from_six_params reconstruction formula") {
  SixParams s{Rat(1), Rat(1), Rat(1), Rat(1, 2), Rat(1, 2), Rat(1, 2)};
  CorrelationVector cv = from_six_params(s);
  CHECK(cv.at(Pair::M12, 0, 1) == Rat(1, 2));  // (w12 + p1 - p2)/2
  CHECK(cv == vertices()[11].cv);
}

TEST_CASE("from_six_params rejects chain violations") {
  SixParams s{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)};  // |p1-p2| = 1 > w12 = 0
  CHECK_THROWS_AS(from_six_params(s), ChainViolation);
}

TEST_CASE("six-parameter round trip is the identity on all vertices") {
  for (const auto& v : vertices()) {
    CHECK(from_six_params(to_six_params(v.cv)) == v.cv);
  }
}

TEST_CASE("random six-tuples: from_six_params succeeds iff the chains hold") {
  std::mt19937_64 rng(20240817);
  int succeeded = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    SixParams s{random_rat(rng), random_rat(rng), random_rat(rng),
                random_rat(rng), random_rat(rng), random_rat(rng)};
    bool chains = chains_hold(s);
    bool built = true;
    try {
      CorrelationVector cv = from_six_params(s);
      CHECK(validate(cv).ok());
      CHECK(to_six_params(cv) == s);
    } catch (const ChainViolation&) {
      built = false;
    }
    CHECK(built == chains);
    if (built) ++succeeded;
  }
  CHECK(succeeded > 0);  // the sample must exercise both directions
  CHECK(succeeded < 2000);
}

TEST_CASE("validate accepts exactly the tables whose parameters satisfy the chains") {
  // Random mixtures of vertices are valid and chain-satisfying.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<Rat, 12> w{};
    Rat total = 0;
    for (auto& x : w) {
      x = random_rat(rng, 16);
      total += x;
    }
    if (total == 0) continue;
    CorrelationVector cv;
    for (Pair p : kPairs) {
      for (int idx = 0; idx < 4; ++idx) {
        Rat acc = 0;
        for (int k = 0; k < 12; ++k) acc += w[k] * vertices()[k].cv.table(p)[idx];
        cv.table(p)[idx] = acc / total;
      }
    }
    CHECK(validate(cv).ok());
    CHECK(chains_hold(to_six_params(cv)));
  }
}
