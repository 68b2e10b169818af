#include "specker/quantum.hpp"

#include <cmath>
#include <stdexcept>

namespace specker::quantum {

namespace {

const Matrix2 kI = Matrix2::Identity();

Matrix2 sigma_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}
Matrix2 sigma_y() {
  Matrix2 m;
  m << std::complex<double>(0, 0), std::complex<double>(0, -1), std::complex<double>(0, 1),
      std::complex<double>(0, 0);
  return m;
}
Matrix2 sigma_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

double min_eigenvalue(const Matrix2& h) {
  Eigen::SelfAdjointEigenSolver<Matrix2> es(h);
  return es.eigenvalues()(0);
}

}  // namespace

Matrix2 pauli_dot(const Vec3& b) {
  return b.x() * sigma_x() + b.y() * sigma_y() + b.z() * sigma_z();
}

QubitState::QubitState(const Matrix2& rho) : rho_(rho) {
  if ((rho - rho.adjoint()).norm() > 1e-10) throw std::invalid_argument("rho not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
    throw std::invalid_argument("rho not unit trace");
  }
  if (min_eigenvalue(rho) < -1e-12) throw std::invalid_argument("rho not PSD");
}

QubitState QubitState::from_bloch(const Vec3& s) {
  if (s.norm() > 1.0 + 1e-12) throw std::invalid_argument("Bloch vector norm exceeds 1");
  Vec3 clipped = s.norm() > 1.0 ? Vec3(s / s.norm()) : s;
  return QubitState(0.5 * (kI + pauli_dot(clipped)));
}

QubitState QubitState::maximally_mixed() { return QubitState(0.5 * kI); }

Vec3 QubitState::bloch() const {
  return Vec3((rho_ * sigma_x()).trace().real(), (rho_ * sigma_y()).trace().real(),
              (rho_ * sigma_z()).trace().real());
}

UnsharpMeasurement::UnsharpMeasurement(const Vec3& n, double eta_) : direction(n), eta(eta_) {
  if (std::abs(n.norm() - 1.0) > 1e-12) throw std::invalid_argument("direction must be unit");
  if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("sharpness must lie in [0,1]");
}

Matrix2 projector(const Vec3& n, int outcome) {
  double sgn = outcome == 0 ? 1.0 : -1.0;
  return 0.5 * (kI + sgn * pauli_dot(n));
}

Matrix2 effect(const UnsharpMeasurement& m, int outcome) {
  return m.eta * projector(m.direction, outcome) + (1.0 - m.eta) * 0.5 * kI;
}

double predictability(const UnsharpMeasurement& m) {
  Eigen::SelfAdjointEigenSolver<Matrix2> es(effect(m, 0));
  return 2.0 * es.eigenvalues()(1) - 1.0;
}

Matrix2 JointPOVM::marginal(int slot, int x) const {
  if (slot == 0) return at(x, 0) + at(x, 1);
  return at(0, x) + at(1, x);
}

JointPOVM swap_outcome(const JointPOVM& j, int slot) {
  JointPOVM out;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      out.at(x, y) = slot == 0 ? j.at(1 - x, y) : j.at(x, 1 - y);
    }
  }
  return out;
}

bool compatibility_oracle(const UnsharpMeasurement& mi, const UnsharpMeasurement& mj) {
  Vec3 bi = mi.effect_bloch(), bj = mj.effect_bloch();
  return (bi + bj).norm() + (bi - bj).norm() <= 2.0;
}

// ---------------------------------------------------------------------------
// Joint-POVM solver. With the marginals fixed, G00 = (c I + r.sigma)/2 is the
// only freedom and the PSD conditions become second-order cones:
//   c >= |r|, c >= |r - bi - bj|, 1-c >= |r - bi|, 1-c >= |r - bj|.
// A log-barrier Newton method handles both the feasibility phase (maximize
// the common slack) and the anticorrelation phase (minimize c + s.r).
// ---------------------------------------------------------------------------

namespace {

struct Cone {
  // u = a.z + alpha >= |B z + beta|
  Eigen::VectorXd a;
  double alpha;
  Eigen::MatrixXd B;  // 3 x dim
  Vec3 beta;
};

struct BarrierProblem {
  std::vector<Cone> cones;
  Eigen::VectorXd cost;  // minimize cost.z
};

double cone_u(const Cone& k, const Eigen::VectorXd& z) { return k.a.dot(z) + k.alpha; }
Vec3 cone_v(const Cone& k, const Eigen::VectorXd& z) { return k.B * z + k.beta; }
double cone_q(const Cone& k, const Eigen::VectorXd& z) {
  double u = cone_u(k, z);
  Vec3 v = cone_v(k, z);
  return u * u - v.squaredNorm();
}
bool strictly_feasible(const BarrierProblem& p, const Eigen::VectorXd& z) {
  for (const auto& k : p.cones) {
    if (cone_u(k, z) <= 0 || cone_q(k, z) <= 0) return false;
  }
  return true;
}

double barrier_value(const BarrierProblem& p, double t, const Eigen::VectorXd& z) {
  double f = t * p.cost.dot(z);
  for (const auto& k : p.cones) f -= std::log(cone_q(k, z));
  return f;
}

// Central-path minimization; returns false when Newton stalls.
bool solve_barrier(const BarrierProblem& p, Eigen::VectorXd& z, double t_max = 1e11) {
  const int dim = static_cast<int>(z.size());
  for (double t = 1.0; t < t_max; t *= 10.0) {
    for (int it = 0; it < 80; ++it) {
      Eigen::VectorXd g = t * p.cost;
      Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
      for (const auto& k : p.cones) {
        double u = cone_u(k, z);
        Vec3 v = cone_v(k, z);
        double q = u * u - v.squaredNorm();
        Eigen::VectorXd gq = 2.0 * u * k.a - 2.0 * (k.B.transpose() * v);
        Eigen::MatrixXd Hq = 2.0 * (k.a * k.a.transpose()) - 2.0 * (k.B.transpose() * k.B);
        g += -gq / q;
        H += (gq * gq.transpose()) / (q * q) - Hq / q;
      }
      Eigen::VectorXd d = H.ldlt().solve(-g);
      double decrement = -g.dot(d);
      if (!(decrement > 0)) {
        // Hessian lost definiteness; fall back to gradient direction.
        d = -g;
        decrement = g.squaredNorm();
      }
      if (decrement < 1e-13) break;
      double f0 = barrier_value(p, t, z);
      double step = 1.0;
      int ls = 0;
      for (; ls < 60; ++ls) {
        Eigen::VectorXd zn = z + step * d;
        if (strictly_feasible(p, zn) && barrier_value(p, t, zn) < f0 - 1e-4 * step * decrement) {
          z = zn;
          break;
        }
        step *= 0.5;
      }
      if (ls == 60) break;  // no progress possible at this t
    }
  }
  return true;
}

}  // namespace

JointPovmResult optimize_joint_povm(const UnsharpMeasurement& mi, const UnsharpMeasurement& mj,
                                    const QubitState& rho, JointObjective objective) {
  const Vec3 bi = mi.effect_bloch(), bj = mj.effect_bloch();
  const Vec3 s = rho.bloch();

  auto make_cones = [&](int dim, bool with_slack) {
    // z = (c, rx, ry, rz [, m])
    std::vector<Cone> cones(4);
    for (int k = 0; k < 4; ++k) {
      cones[k].a = Eigen::VectorXd::Zero(dim);
      cones[k].B = Eigen::MatrixXd::Zero(3, dim);
      cones[k].B(0, 1) = cones[k].B(1, 2) = cones[k].B(2, 3) = 1.0;
      if (with_slack) cones[k].a(4) = -1.0;
    }
    cones[0].a(0) = 1.0;
    cones[0].alpha = 0.0;
    cones[0].beta = Vec3::Zero();
    cones[1].a(0) = 1.0;
    cones[1].alpha = 0.0;
    cones[1].beta = -(bi + bj);
    cones[2].a(0) = -1.0;
    cones[2].alpha = 1.0;
    cones[2].beta = -bi;
    cones[3].a(0) = -1.0;
    cones[3].alpha = 1.0;
    cones[3].beta = -bj;
    return cones;
  };

  // Phase 1: maximize the common slack m.
  BarrierProblem p1;
  p1.cones = make_cones(5, true);
  p1.cost = Eigen::VectorXd::Zero(5);
  p1.cost(4) = -1.0;  // minimize -m
  Eigen::VectorXd z1(5);
  z1 << 0.5, 0.5 * (bi + bj).x(), 0.5 * (bi + bj).y(), 0.5 * (bi + bj).z(), 0.0;
  {
    double min_slack = 1e30;
    for (const auto& k : p1.cones) {
      double u = cone_u(k, z1);  // m entry is 0 here
      min_slack = std::min(min_slack, u - cone_v(k, z1).norm());
    }
    z1(4) = min_slack - 0.5;
  }
  JointPovmResult res;
  if (!strictly_feasible(p1, z1) || !solve_barrier(p1, z1)) {
    res.status = JointPovmResult::Status::SolverStall;
    return res;
  }
  double m_star = z1(4);
  res.margin = 0.5 * m_star;  // PSD eigenvalue slack of (u I + v.sigma)/2
  if (m_star < -1e-9) {
    res.status = JointPovmResult::Status::Infeasible;
    return res;
  }

  Eigen::VectorXd z = z1.head(4);
  if (objective == JointObjective::MaxAnticorrelation && m_star > 1e-9) {
    BarrierProblem p2;
    p2.cones = make_cones(4, false);
    p2.cost = Eigen::VectorXd::Zero(4);
    p2.cost(0) = 1.0;
    p2.cost(1) = s.x();
    p2.cost(2) = s.y();
    p2.cost(3) = s.z();
    if (strictly_feasible(p2, z)) {
      if (!solve_barrier(p2, z)) {
        res.status = JointPovmResult::Status::SolverStall;
        return res;
      }
    }
  }

  double c = z(0);
  Vec3 r(z(1), z(2), z(3));
  JointPOVM povm;
  povm.at(0, 0) = 0.5 * (c * kI + pauli_dot(r));
  povm.at(0, 1) = 0.5 * (kI + pauli_dot(bi)) - povm.at(0, 0);
  povm.at(1, 0) = 0.5 * (kI + pauli_dot(bj)) - povm.at(0, 0);
  povm.at(1, 1) = kI - povm.at(0, 1) - povm.at(1, 0) - povm.at(0, 0);
  res.status = JointPovmResult::Status::Feasible;
  res.povm = povm;
  res.anticorrelation = ((povm.at(0, 1) + povm.at(1, 0)) * rho.rho()).trace().real();
  return res;
}

CorrelationVector correlation_vector(const std::array<JointPOVM, 3>& joints,
                                     const QubitState& rho) {
  // joints: (M1,M2), (M2,M3), (M1,M3). Shared-effect consistency:
  // M1 from (12)/(13) slot 0; M2 from (12) slot 1 vs (23) slot 0;
  // M3 from (23)/(13) slot 1.
  struct Shared { int ja, sa, jb, sb; };
  const std::array<Shared, 3> shared{{{0, 0, 2, 0}, {0, 1, 1, 0}, {1, 1, 2, 1}}};
  for (int m = 0; m < 3; ++m) {
    const auto& sh = shared[m];
    Matrix2 ea = joints[sh.ja].marginal(sh.sa, 0);
    Matrix2 eb = joints[sh.jb].marginal(sh.sb, 0);
    if ((ea - eb).norm() > 1e-9) {
      throw MarginalMismatch("joint POVMs disagree on the shared effect of M" +
                             std::to_string(m + 1));
    }
  }

  auto prob = [&](const Matrix2& g) { return (g * rho.rho()).trace().real(); };
  std::array<std::array<double, 4>, 3> raw{};
  for (int j = 0; j < 3; ++j) {
    for (int idx = 0; idx < 4; ++idx) raw[j][idx] = prob(joints[j].G[idx]);
  }
  // Float-level no-disturbance check before snapping.
  struct Occ { Pair a; Pair b; };
  const std::array<Occ, 3> occ{{{Pair::M12, Pair::M13}, {Pair::M12, Pair::M23},
                                {Pair::M23, Pair::M13}}};
  auto fmarg = [&](Pair p, int m, int x) {
    const auto& t = raw[static_cast<int>(p)];
    return m == pair_first(p) ? t[2 * x] + t[2 * x + 1] : t[x] + t[x + 2];
  };
  for (int m = 1; m <= 3; ++m) {
    if (std::abs(fmarg(occ[m - 1].a, m, 0) - fmarg(occ[m - 1].b, m, 0)) > 1e-9) {
      throw MarginalMismatch("no-disturbance violated beyond 1e-9 for M" + std::to_string(m));
    }
  }

  // Snap the six free parameters, not the 12 entries: reconstruction then
  // satisfies normalization and no-disturbance exactly.
  auto clamp01 = [](const Rat& q) { return q < 0 ? Rat(0) : (q > 1 ? Rat(1) : q); };
  SixParams six;
  six.w12 = clamp01(nearest_rational(raw[0][1] + raw[0][2]));
  six.w23 = clamp01(nearest_rational(raw[1][1] + raw[1][2]));
  six.w13 = clamp01(nearest_rational(raw[2][1] + raw[2][2]));
  six.p1 = clamp01(nearest_rational(raw[0][0] + raw[0][1]));
  six.p2 = clamp01(nearest_rational(raw[1][0] + raw[1][1]));
  six.p3 = clamp01(nearest_rational(raw[2][0] + raw[2][1]));
  // Snapping can nudge a boundary point just outside a positivity chain;
  // project w back into the exact chain interval.
  auto project = [](Rat& w, const Rat& pi, const Rat& pj) {
    Rat lo = pi > pj ? pi - pj : pj - pi;
    Rat hi = std::min(Rat(pi + pj), Rat(2 - pi - pj));
    if (w < lo) w = lo;
    if (w > hi) w = hi;
  };
  project(six.w12, six.p1, six.p2);
  project(six.w23, six.p2, six.p3);
  project(six.w13, six.p1, six.p3);
  return from_six_params(six);
}

std::array<Vec3, 3> trine_directions() {
  const double c = -0.5, s = std::sqrt(3.0) / 2.0;
  return {Vec3(1, 0, 0), Vec3(c, s, 0), Vec3(c, -s, 0)};
}

namespace {

struct R3Eval {
  bool feasible = false;
  double r3 = 0;
  std::array<JointPOVM, 3> joints{};
};

// Best total anticorrelation over the three pairs for a fixed state.
R3Eval eval_r3(const std::array<UnsharpMeasurement, 3>& ms, const QubitState& rho) {
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
  R3Eval out;
  out.feasible = true;
  for (int p = 0; p < 3; ++p) {
    auto r = optimize_joint_povm(ms[pairs[p].first], ms[pairs[p].second], rho,
                                 JointObjective::MaxAnticorrelation);
    if (r.status != JointPovmResult::Status::Feasible) {
      out.feasible = false;
      return out;
    }
    out.r3 += r.anticorrelation;
    out.joints[p] = r.povm;
  }
  return out;
}

Vec3 sphere_point(double theta, double phi) {
  return Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
              std::cos(theta));
}

// Spherical grid plus local refinement over pure states.
std::pair<Vec3, R3Eval> optimize_state(const std::array<UnsharpMeasurement, 3>& ms) {
  double best_theta = 0, best_phi = 0;
  R3Eval best;
  bool first = true;
  auto consider = [&](double theta, double phi) {
    R3Eval e = eval_r3(ms, QubitState::from_bloch(sphere_point(theta, phi)));
    if (!e.feasible) return;
    if (first || e.r3 > best.r3) {
      best = e;
      best_theta = theta;
      best_phi = phi;
      first = false;
    }
  };
  const double pi = M_PI;
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j < 12; ++j) consider(i * pi / 8, j * pi / 6);
  }
  double span_t = pi / 8, span_p = pi / 6;
  for (int round = 0; round < 6 && !first; ++round) {
    double t0 = best_theta, p0 = best_phi;
    for (int i = -2; i <= 2; ++i) {
      for (int j = -2; j <= 2; ++j) {
        consider(t0 + i * span_t / 2, p0 + j * span_p / 2);
      }
    }
    span_t /= 4;
    span_p /= 4;
  }
  return {sphere_point(best_theta, best_phi), best};
}

}  // namespace

std::vector<LswRow> lsw_scan(const LswScanOptions& opts) {
  std::vector<LswRow> rows;
  rows.reserve(opts.eta_grid.size());
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
  // Relabelling of M_k flips its direction; R3 of the relabelled triple
  // equals R_{label}+2 of the original, with M3->R0, M1->R1, M2->R2.
  const std::array<std::pair<int, int>, 3> relabel_map{{{3, 0}, {1, 1}, {2, 2}}};  // (meas, R idx)

  for (double eta : opts.eta_grid) {
    LswRow row;
    row.eta = eta;
    row.bound = 3.0 - eta;
    try {
      std::array<UnsharpMeasurement, 3> ms{UnsharpMeasurement(opts.directions[0], eta),
                                           UnsharpMeasurement(opts.directions[1], eta),
                                           UnsharpMeasurement(opts.directions[2], eta)};
      QubitState probe = QubitState::maximally_mixed();
      for (int p = 0; p < 3; ++p) {
        auto r = optimize_joint_povm(ms[pairs[p].first], ms[pairs[p].second], probe,
                                     JointObjective::Feasibility);
        row.pair_feasible[p] = r.status == JointPovmResult::Status::Feasible;
      }
      row.feasible = row.pair_feasible[0] && row.pair_feasible[1] && row.pair_feasible[2];
      if (row.feasible) {
        auto eval_with_policy = [&](const std::array<UnsharpMeasurement, 3>& meas)
            -> std::pair<Vec3, R3Eval> {
          if (opts.state_bloch) {
            return {*opts.state_bloch, eval_r3(meas, QubitState::from_bloch(*opts.state_bloch))};
          }
          return optimize_state(meas);
        };
        auto [state, eval] = eval_with_policy(ms);
        row.state = state;
        row.r3 = eval.r3;
        row.joints = eval.joints;
        row.violated = eval.feasible && row.r3 > row.bound + 1e-8;
        for (int k = 0; k < 3; ++k) {
          int meas = relabel_map[k].first;  // 1-based measurement to flip
          std::array<UnsharpMeasurement, 3> flipped = ms;
          flipped[meas - 1] = UnsharpMeasurement(-opts.directions[meas - 1], eta);
          auto [fs, feval] = eval_with_policy(flipped);
          (void)fs;
          int ridx = relabel_map[k].second;
          row.r_relabelled[ridx] = feval.feasible ? feval.r3 - 2.0 : 0.0;
          row.violated_relabelled[ridx] =
              feval.feasible && row.r_relabelled[ridx] > (1.0 - eta) + 1e-8;
        }
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace specker::quantum
