#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "specker/correlation.hpp"

namespace specker::quantum {

using Matrix2 = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;

/// Pauli vector contraction b . sigma.
Matrix2 pauli_dot(const Vec3& b);

/// 2x2 density matrix; validated Hermitian, unit trace, PSD (>= -1e-12).
class QubitState {
 public:
  explicit QubitState(const Matrix2& rho);
  static QubitState from_bloch(const Vec3& s);
  static QubitState maximally_mixed();

  const Matrix2& rho() const { return rho_; }
  Vec3 bloch() const;

 private:
  Matrix2 rho_;
};

/// Unsharp spin measurement along a unit direction: E_X = eta Pi_X + (1-eta) I/2.
struct UnsharpMeasurement {
  Vec3 direction;  // unit within 1e-12
  double eta;      // sharpness in [0,1]

  UnsharpMeasurement(const Vec3& n, double eta);
  /// Bloch vector of the outcome-0 effect, eta * direction.
  Vec3 effect_bloch() const { return eta * direction; }
};

Matrix2 projector(const Vec3& n, int outcome);
Matrix2 effect(const UnsharpMeasurement& m, int outcome);

/// 2 * lambda_max(E_0) - 1, via eigendecomposition; equals the sharpness.
double predictability(const UnsharpMeasurement& m);

/// Four PSD effects G_{XY} summing to the identity with the two single
/// measurements as marginals. Stored lexicographically: 00, 01, 10, 11.
struct JointPOVM {
  std::array<Matrix2, 4> G;
  const Matrix2& at(int x, int y) const { return G[2 * x + y]; }
  Matrix2& at(int x, int y) { return G[2 * x + y]; }
  /// Marginal effect of the first (slot 0) or second (slot 1) measurement
  /// yielding outcome x.
  Matrix2 marginal(int slot, int x) const;
};

/// Swap the outcome labels of one slot (0 = first measurement, 1 = second):
/// the joint POVM of the relabelled measurement.
JointPOVM swap_outcome(const JointPOVM& j, int slot);

/// Closed-form pairwise compatibility criterion for two unbiased qubit
/// effects with Bloch vectors b_i, b_j: |b_i+b_j| + |b_i-b_j| <= 2.
bool compatibility_oracle(const UnsharpMeasurement& mi, const UnsharpMeasurement& mj);

enum class JointObjective { Feasibility, MaxAnticorrelation };

struct JointPovmResult {
  enum class Status { Feasible, Infeasible, SolverStall };
  Status status = Status::SolverStall;
  JointPOVM povm;             // populated when Feasible
  double anticorrelation = 0; // Tr[rho (G01 + G10)] at the optimum
  double margin = 0;          // smallest PSD slack at the feasibility optimum
};

/// Purpose-built solver for the four-effect joint-POVM problem. After the
/// marginal constraints only G00 is free; the problem reduces to four
/// second-order-cone constraints on (c, r) with G00 = (c I + r.sigma)/2,
/// solved by a log-barrier Newton method. No external solver.
JointPovmResult optimize_joint_povm(const UnsharpMeasurement& mi, const UnsharpMeasurement& mj,
                                    const QubitState& rho, JointObjective objective);

struct MarginalMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pairwise statistics v[ij][XY] = Tr(rho G^{ij}_{XY}) for joints over
/// (M1,M2), (M2,M3), (M1,M3). Checks that the three joints agree on shared
/// single-measurement effects within 1e-9, verifies no-disturbance within
/// 1e-9 on the float table, then snaps the six free parameters to rationals
/// (denominator <= 10^6) for downstream exact analysis.
CorrelationVector correlation_vector(const std::array<JointPOVM, 3>& joints,
                                     const QubitState& rho);

/// One grid point of the LSW scan.
struct LswRow {
  double eta = 0;
  std::array<bool, 3> pair_feasible{};  // pairs (12), (23), (13)
  bool feasible = false;                // all three pairs jointly measurable
  double r3 = 0;
  double bound = 0;  // 3 - eta
  bool violated = false;
  // R0..R2 via the three outcome relabellings, against 1 - eta.
  std::array<double, 3> r_relabelled{};
  std::array<bool, 3> violated_relabelled{};
  Vec3 state = Vec3::Zero();             // Bloch vector actually used
  std::array<JointPOVM, 3> joints{};     // maximizing joints (when feasible)
  std::string error;                     // per-point solver failure, if any
};

struct LswScanOptions {
  std::array<Vec3, 3> directions;
  std::vector<double> eta_grid;
  /// Fixed state; nullopt optimizes over pure states by spherical grid plus
  /// local refinement.
  std::optional<Vec3> state_bloch;
};

/// Coplanar unit vectors 120 degrees apart (in the x-y plane).
std::array<Vec3, 3> trine_directions();

std::vector<LswRow> lsw_scan(const LswScanOptions& opts);

}  // namespace specker::quantum
