#include <doctest.h>

#include "helpers.hpp"
#include "specker/finebridge.hpp"
#include "specker/inequalities.hpp"
#include "specker/polytope.hpp"

using namespace specker;
using testutil::random_mixture;

namespace {

CorrelationVector uniform_point() {
  CorrelationVector cv;
  for (Pair p : kPairs) {
    for (int idx = 0; idx < 4; ++idx) cv.table(p)[idx] = Rat(1, 4);
  }
  return cv;
}

CorrelationVector midpoint(const CorrelationVector& a, const CorrelationVector& b) {
  CorrelationVector cv;
  for (Pair p : kPairs) {
    for (int idx = 0; idx < 4; ++idx) {
      cv.table(p)[idx] = (a.table(p)[idx] + b.table(p)[idx]) / 2;
    }
  }
  return cv;
}

}  // namespace

TEST_CASE("the 12 vertices match their defining equations") {
  const auto& vs = vertices();
  CHECK(vs[0].cv.at(Pair::M12, 0, 0) == 1);
  CHECK(vs[0].cv.at(Pair::M23, 0, 0) == 1);
  CHECK(vs[0].cv.at(Pair::M13, 0, 0) == 1);
  // v5: v12_10 = v23_01 = v13_11 = 1
  CHECK(vs[5].cv.at(Pair::M12, 1, 0) == 1);
  CHECK(vs[5].cv.at(Pair::M23, 0, 1) == 1);
  CHECK(vs[5].cv.at(Pair::M13, 1, 1) == 1);
  // v11: all off-diagonals 1/2
  for (Pair p : kPairs) {
    CHECK(vs[11].cv.at(p, 0, 1) == Rat(1, 2));
    CHECK(vs[11].cv.at(p, 1, 0) == Rat(1, 2));
  }
  for (const auto& v : vs) {
    CHECK(validate(v.cv).ok());
    CHECK(v.kind == (v.id < 8 ? Vertex::Kind::Deterministic : Vertex::Kind::Indeterministic));
  }
}

TEST_CASE("indeterministic vertices have exactly two 1/2 entries per pair") {
  for (int k = 8; k < 12; ++k) {
    for (Pair p : kPairs) {
      int halves = 0, zeros = 0;
      for (int idx = 0; idx < 4; ++idx) {
        if (vertices()[k].cv.table(p)[idx] == Rat(1, 2)) ++halves;
        if (vertices()[k].cv.table(p)[idx] == 0) ++zeros;
      }
      CHECK(halves == 2);
      CHECK(zeros == 2);
    }
  }
}

TEST_CASE("in_ks_polytope classifies the vertices") {
  CHECK(in_ks_polytope(to_six_params(vertices()[0].cv)).inside);
  auto v11 = in_ks_polytope(to_six_params(vertices()[11].cv));
  CHECK(!v11.inside);
  REQUIRE(v11.violated.size() == 1);
  CHECK(v11.violated[0] == "R3<=2");
}

TEST_CASE("R3 = 2 boundary point is inside") {
  SixParams s{Rat(2, 3), Rat(2, 3), Rat(2, 3), Rat(1, 2), Rat(1, 2), Rat(1, 2)};
  CHECK(in_ks_polytope(s).inside);
  // Cross-check with the joint-distribution oracle.
  CHECK(find_joint(from_six_params(s)).feasible);
}

TEST_CASE("decompose returns exact certificates") {
  auto check_exact = [](const CorrelationVector& cv) {
    auto d = decompose(cv);
    Rat total = 0;
    for (const Rat& w : d.weights) {
      CHECK(w >= 0);
      total += w;
    }
    CHECK(total == 1);
    for (Pair p : kPairs) {
      for (int idx = 0; idx < 4; ++idx) {
        Rat acc = 0;
        for (int k = 0; k < 12; ++k) acc += d.weights[k] * vertices()[k].cv.table(p)[idx];
        CHECK(acc == cv.table(p)[idx]);
      }
    }
    return d;
  };

  auto d8 = check_exact(vertices()[8].cv);
  CHECK(d8.weights[8] == 1);

  check_exact(uniform_point());
  // The uniform mixture of the deterministic vertices is itself a valid
  // certificate for the uniform point.
  CorrelationVector acc;
  for (Pair p : kPairs) {
    for (int idx = 0; idx < 4; ++idx) {
      Rat sum = 0;
      for (int k = 0; k < 8; ++k) sum += vertices()[k].cv.table(p)[idx];
      acc.table(p)[idx] = sum / 8;
    }
  }
  CHECK(acc == uniform_point());

  auto dm = check_exact(midpoint(vertices()[0].cv, vertices()[7].cv));
  CHECK(dm.weights[0] == Rat(1, 2));
  CHECK(dm.weights[7] == Rat(1, 2));
}

TEST_CASE("decompose is deterministic and lexicographically minimal") {
  auto d1 = decompose(uniform_point());
  auto d2 = decompose(uniform_point());
  CHECK(d1.weights == d2.weights);
  // Minimizing vertex 0 first: the uniform point is reachable without any
  // deterministic vertex at all.
  for (int k = 0; k < 8; ++k) CHECK(d1.weights[k] == 0);
}

TEST_CASE("every random mixture decomposes") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 25; ++t) {
    CorrelationVector cv = random_mixture(rng);
    auto d = decompose(cv);
    Rat total = 0;
    for (const Rat& w : d.weights) total += w;
    CHECK(total == 1);
  }
}

TEST_CASE("extremality: vertices yes, interior points no") {
  for (const auto& v : vertices()) CHECK(is_extremal(v.cv));
  CHECK(!is_extremal(uniform_point()));
  CHECK(!is_extremal(midpoint(vertices()[8].cv, vertices()[9].cv)));
}

TEST_CASE("indeterministic vertices violate exactly their named inequality") {
  // v8 -> R0, v9 -> R1, v10 -> R2, v11 -> R3
  for (int k = 0; k < 4; ++k) {
    auto viol = check_ks(evaluate(to_six_params(vertices()[8 + k].cv)));
    REQUIRE(viol.size() == 1);
    CHECK(viol[0] == (k == 3 ? 3 : k));
  }
  for (int k = 0; k < 8; ++k) {
    CHECK(check_ks(evaluate(to_six_params(vertices()[k].cv))).empty());
  }
}
