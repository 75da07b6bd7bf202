#include "qfbend/bendsolve.hpp"

#include <cmath>

#include "qfbend/errors.hpp"

namespace qfb::bend {

namespace {

constexpr double kClampBand = 1e-12;

double half_sinh_from_angles(double own, double other) {
  // sinh(l_own/2) = sin(other/2) cot(own/2)
  return std::sin(other / 2.0) * std::cos(own / 2.0) / std::sin(own / 2.0);
}

}  // namespace

BendingAngles::BendingAngles(double ta, double tb) : theta_alpha(ta), theta_beta(tb) {
  if (!(ta > 0.0) || !(ta < M_PI) || !(tb > 0.0) || !(tb < M_PI))
    fail("InfeasibleAngles", "bending angles must lie in the open interval (0, pi)");
}

CoreGeometry lengths_from_angles(const BendingAngles& angles) {
  double sa = half_sinh_from_angles(angles.theta_alpha, angles.theta_beta);
  double sb = half_sinh_from_angles(angles.theta_beta, angles.theta_alpha);
  CoreGeometry core;
  core.l_alpha_star = 2.0 * std::asinh(sa);
  core.l_beta_star = 2.0 * std::asinh(sb);
  double arg = 1.0 / (sa * sb);
  if (arg < 1.0) {
    if (arg < 1.0 - kClampBand)
      fail("InfeasibleAngles", "closing relation cosh d sinh sinh = 1 has no solution");
    arg = 1.0;
  }
  core.d = std::acosh(arg);
  return core;
}

BendingAngles angles_from_lengths(double l_alpha_star, double l_beta_star) {
  if (!(l_alpha_star > 0.0) || !(l_beta_star > 0.0))
    fail("InfeasibleLengths", "pleating lengths must be positive");
  double ua = l_alpha_star / 2.0, ub = l_beta_star / 2.0;
  double pa = std::cosh(ub) * std::tanh(ua);
  double pb = std::cosh(ua) * std::tanh(ub);
  if (!(pa > 0.0) || !(pa < 1.0) || !(pb > 0.0) || !(pb < 1.0))
    fail("InfeasibleLengths",
         "cosh(l_other/2) tanh(l_own/2) must lie in (0, 1) for both curves");
  return BendingAngles(2.0 * std::acos(pa), 2.0 * std::acos(pb));
}

BoundaryMetrics boundary_metrics(const CoreGeometry& core, const BendingAngles& angles) {
  // Guard against mismatched inputs through sinh d = coth(l_beta*/2) tan(theta_alpha/2).
  double sinh_d = std::sinh(core.d);
  double lhs_a = std::tanh(core.l_beta_star / 2.0) * sinh_d;
  double rhs_a = std::tan(angles.theta_alpha / 2.0);
  double lhs_b = std::tanh(core.l_alpha_star / 2.0) * sinh_d;
  double rhs_b = std::tan(angles.theta_beta / 2.0);
  double tol = 1e-8 * (1.0 + std::abs(rhs_a) + std::abs(rhs_b));
  if (std::abs(lhs_a - rhs_a) > tol || std::abs(lhs_b - rhs_b) > tol)
    fail("InconsistentInputs", "core geometry does not match the bending angles");

  double cosh_d = std::cosh(core.d);
  BoundaryMetrics sides;
  sides.l_alpha_plus = core.l_alpha_star;
  sides.l_beta_minus = core.l_beta_star;
  sides.l_alpha_minus = 2.0 * std::asinh(cosh_d * std::sinh(core.l_alpha_star / 2.0));
  sides.l_beta_plus = 2.0 * std::asinh(cosh_d * std::sinh(core.l_beta_star / 2.0));
  return sides;
}

ptorus::MarkedGroup group_from_bending(const BendingAngles& angles) {
  CoreGeometry core = lengths_from_angles(angles);
  ptorus::TraceTriple t;
  t.x = 2.0 * std::cosh(core.l_alpha_star / 2.0);
  t.y = 2.0 * std::cosh(core.l_beta_star / 2.0);
  t.z = ptorus::markov_z(t.x, t.y, ptorus::Branch::plus);
  return ptorus::group_from_triple(t);
}

CoreGeometry divergence_profile(double theta_alpha, double k) {
  if (!(k > 0.0)) fail("InfeasibleAngles", "divergence exponent k must be positive");
  return lengths_from_angles(BendingAngles(theta_alpha, std::pow(theta_alpha, k)));
}

}  // namespace qfb::bend
