#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace specker {

/// Exact rational scalar used throughout the polytope / feasibility layers.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical "p/q" string (lowest terms, "p" alone when q == 1).
std::string to_string(const Rat& r);

/// Parses "p/q" or a plain integer string. Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& text);

/// Nearest rational with denominator <= max_den (Stern-Brocot / continued
/// fractions). Always succeeds; error is whatever the best approximation gives.
Rat nearest_rational(double x, long max_den = 1000000);

/// Input snapping rule: accept a float only if it lies within `tol` of a
/// fraction with denominator <= max_den; otherwise nullopt (caller rejects).
std::optional<Rat> snap_to_rational(double x, double tol = 1e-9,
                                    long max_den = 1000000);

double to_double(const Rat& r);

}  // namespace specker
