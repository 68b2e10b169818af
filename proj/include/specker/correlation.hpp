#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "specker/rational.hpp"

namespace specker {

// Fixed pair ordering used everywhere, including serialization:
// index 0 = pair (1,2), 1 = (2,3), 2 = (1,3).
enum class Pair : int { M12 = 0, M23 = 1, M13 = 2 };

inline constexpr std::array<Pair, 3> kPairs{Pair::M12, Pair::M23, Pair::M13};

/// First and second measurement (1-based) of a pair.
constexpr int pair_first(Pair p) { return p == Pair::M23 ? 2 : 1; }
constexpr int pair_second(Pair p) { return p == Pair::M12 ? 2 : 3; }
std::string pair_label(Pair p);  // "12", "23", "13"

/// The 12 pairwise probabilities of the three-measurement scenario.
/// Outcomes per pair are stored lexicographically: 00, 01, 10, 11,
/// i.e. index = 2*Xi + Xj with i < j.
class CorrelationVector {
 public:
  CorrelationVector() = default;

  const Rat& at(Pair p, int xi, int xj) const {
    return v_[static_cast<int>(p)][2 * xi + xj];
  }
  Rat& at(Pair p, int xi, int xj) { return v_[static_cast<int>(p)][2 * xi + xj]; }
  const std::array<Rat, 4>& table(Pair p) const { return v_[static_cast<int>(p)]; }
  std::array<Rat, 4>& table(Pair p) { return v_[static_cast<int>(p)]; }

  /// Marginal p(X_i = x) computed from the given pair's table.
  Rat marginal(Pair p, int measurement, int x) const;

  bool operator==(const CorrelationVector&) const = default;

 private:
  std::array<std::array<Rat, 4>, 3> v_{};
};

/// Violated constraint found while validating a raw 12-entry table.
struct ValidationIssue {
  enum class Kind { NegativeEntry, EntryAboveOne, NormalizationFailure, NoDisturbanceFailure };
  Kind kind;
  // NegativeEntry / EntryAboveOne / NormalizationFailure: pair and (for entries)
  // outcome index. NoDisturbanceFailure: measurement (1..3) plus the two
  // conflicting marginals.
  std::optional<Pair> pair;
  int outcome_index = -1;
  int measurement = -1;
  Rat marginal_a, marginal_b;
  std::string describe() const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks positivity, normalization and no-disturbance; reports every
/// violated constraint, not just the first.
ValidationReport validate(const CorrelationVector& cv);

/// Throwing wrapper around validate().
struct ValidationError : std::runtime_error {
  explicit ValidationError(ValidationReport r);
  ValidationReport report;
};
void validate_or_throw(const CorrelationVector& cv);

/// The six free parameters: anticorrelation probabilities and outcome-0
/// marginals. A no-disturbance table is determined by these.
struct SixParams {
  Rat w12, w23, w13;
  Rat p1, p2, p3;

  const Rat& w(Pair p) const { return p == Pair::M12 ? w12 : (p == Pair::M23 ? w23 : w13); }
  const Rat& marginal(int measurement) const {
    return measurement == 1 ? p1 : (measurement == 2 ? p2 : p3);
  }
  bool operator==(const SixParams&) const = default;
};

SixParams to_six_params(const CorrelationVector& cv);

/// Per-pair positivity chain |pi - pj| <= wij <= pi + pj <= 2 - wij.
struct ChainViolation : std::runtime_error {
  ChainViolation(Pair p, std::string what);
  Pair pair;
};
bool chains_hold(const SixParams& s);
std::vector<Pair> violated_chains(const SixParams& s);

/// Reconstructs the unique 12-entry table; throws ChainViolation when a
/// reconstructed entry leaves [0,1].
CorrelationVector from_six_params(const SixParams& s);

}  // namespace specker
