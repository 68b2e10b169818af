#include <doctest.h>

#include "specker/rational.hpp"

using namespace specker;

TEST_CASE("rational string round trip") {
  CHECK(to_string(Rat(1, 3)) == "1/3");
  CHECK(to_string(Rat(2)) == "2");
  CHECK(to_string(Rat(-3, 6)) == "-1/2");
  CHECK(*parse_rational("7/21") == Rat(1, 3));
  CHECK(*parse_rational("-5") == Rat(-5));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("abc"));
  CHECK(!parse_rational(""));
}

TEST_CASE("float snapping accepts nearby small fractions") {
  CHECK(*snap_to_rational(0.25) == Rat(1, 4));
  CHECK(*snap_to_rational(1.0 / 3.0) == Rat(1, 3));
  CHECK(*snap_to_rational(0.3333333334) == Rat(1, 3));
  // Irrational-ish values with no close small-denominator fraction are rejected.
  CHECK(!snap_to_rational(0.123456789012345, 1e-12, 100));
}

TEST_CASE("nearest_rational is a best approximation") {
  Rat r = nearest_rational(0.7236067977, 1000000);
  CHECK(std::abs(to_double(r) - 0.7236067977) < 1e-9);
  CHECK(denominator(r) <= 1000000);
  CHECK(nearest_rational(-0.5) == Rat(-1, 2));
  CHECK(nearest_rational(0.0) == Rat(0));
}
