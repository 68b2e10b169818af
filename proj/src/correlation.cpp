#include "specker/correlation.hpp"

#include <sstream>

namespace specker {

std::string pair_label(Pair p) {
  switch (p) {
    case Pair::M12: return "12";
    case Pair::M23: return "23";
    case Pair::M13: return "13";
  }
  return "?";
}

Rat CorrelationVector::marginal(Pair p, int measurement, int x) const {
  if (measurement == pair_first(p)) {
    return at(p, x, 0) + at(p, x, 1);
  }
  return at(p, 0, x) + at(p, 1, x);
}

std::string ValidationIssue::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::NegativeEntry:
      os << "negative entry in pair " << pair_label(*pair) << " at outcome index "
         << outcome_index;
      break;
    case Kind::EntryAboveOne:
      os << "entry > 1 in pair " << pair_label(*pair) << " at outcome index "
         << outcome_index;
      break;
    case Kind::NormalizationFailure:
      os << "pair " << pair_label(*pair) << " does not sum to 1";
      break;
    case Kind::NoDisturbanceFailure:
      os << "no-disturbance failure for M" << measurement << ": marginals "
         << to_string(marginal_a) << " vs " << to_string(marginal_b);
      break;
  }
  return os.str();
}

ValidationReport validate(const CorrelationVector& cv) {
  ValidationReport report;
  for (Pair p : kPairs) {
    Rat sum = 0;
    for (int idx = 0; idx < 4; ++idx) {
      const Rat& e = cv.table(p)[idx];
      sum += e;
      if (e < 0) {
        report.issues.push_back({ValidationIssue::Kind::NegativeEntry, p, idx});
      } else if (e > 1) {
        report.issues.push_back({ValidationIssue::Kind::EntryAboveOne, p, idx});
      }
    }
    if (sum != 1) {
      report.issues.push_back({ValidationIssue::Kind::NormalizationFailure, p});
    }
  }
  // Each measurement appears in exactly two pairs; their marginals must agree.
  struct Occurrence { Pair a, b; };
  const std::array<Occurrence, 3> occ{{{Pair::M12, Pair::M13},    // M1
                                       {Pair::M12, Pair::M23},    // M2
                                       {Pair::M23, Pair::M13}}};  // M3
  for (int m = 1; m <= 3; ++m) {
    const auto& o = occ[m - 1];
    Rat a = cv.marginal(o.a, m, 0);
    Rat b = cv.marginal(o.b, m, 0);
    if (a != b) {
      ValidationIssue issue{ValidationIssue::Kind::NoDisturbanceFailure};
      issue.measurement = m;
      issue.marginal_a = a;
      issue.marginal_b = b;
      report.issues.push_back(issue);
    }
  }
  return report;
}

static std::string join_issues(const ValidationReport& r) {
  std::string s = "invalid correlation vector:";
  for (const auto& i : r.issues) s += " [" + i.describe() + "]";
  return s;
}

ValidationError::ValidationError(ValidationReport r)
    : std::runtime_error(join_issues(r)), report(std::move(r)) {}

void validate_or_throw(const CorrelationVector& cv) {
  ValidationReport r = validate(cv);
  if (!r.ok()) throw ValidationError(std::move(r));
}

SixParams to_six_params(const CorrelationVector& cv) {
  SixParams s;
  s.w12 = cv.at(Pair::M12, 0, 1) + cv.at(Pair::M12, 1, 0);
  s.w23 = cv.at(Pair::M23, 0, 1) + cv.at(Pair::M23, 1, 0);
  s.w13 = cv.at(Pair::M13, 0, 1) + cv.at(Pair::M13, 1, 0);
  s.p1 = cv.at(Pair::M12, 0, 0) + cv.at(Pair::M12, 0, 1);
  s.p2 = cv.at(Pair::M23, 0, 0) + cv.at(Pair::M23, 0, 1);
  s.p3 = cv.at(Pair::M23, 0, 0) + cv.at(Pair::M23, 1, 0);
  return s;
}

ChainViolation::ChainViolation(Pair p, std::string what)
    : std::runtime_error(std::move(what)), pair(p) {}

static bool chain_holds(const Rat& w, const Rat& pi, const Rat& pj) {
  Rat diff = pi - pj;
  if (diff < 0) diff = -diff;
  return diff <= w && w <= pi + pj && pi + pj <= 2 - w;
}

std::vector<Pair> violated_chains(const SixParams& s) {
  std::vector<Pair> out;
  if (!chain_holds(s.w12, s.p1, s.p2)) out.push_back(Pair::M12);
  if (!chain_holds(s.w23, s.p2, s.p3)) out.push_back(Pair::M23);
  if (!chain_holds(s.w13, s.p1, s.p3)) out.push_back(Pair::M13);
  return out;
}

bool chains_hold(const SixParams& s) { return violated_chains(s).empty(); }

CorrelationVector from_six_params(const SixParams& s) {
  auto bad = violated_chains(s);
  if (!bad.empty()) {
    throw ChainViolation(bad.front(),
                         "positivity chain violated for pair " + pair_label(bad.front()));
  }
  CorrelationVector cv;
  auto fill = [&](Pair p, const Rat& w, const Rat& pi, const Rat& pj) {
    cv.at(p, 0, 0) = (pi + pj - w) / 2;
    cv.at(p, 0, 1) = (w + pi - pj) / 2;
    cv.at(p, 1, 0) = (w - pi + pj) / 2;
    cv.at(p, 1, 1) = 1 - (w + pi + pj) / 2;
  };
  fill(Pair::M12, s.w12, s.p1, s.p2);
  fill(Pair::M23, s.w23, s.p2, s.p3);
  fill(Pair::M13, s.w13, s.p1, s.p3);
  return cv;
}

}  // namespace specker
