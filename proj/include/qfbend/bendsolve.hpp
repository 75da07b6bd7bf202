#pragma once

#include "qfbend/ptorus.hpp"

namespace qfb::bend {

// Bending angles of the two boundary pleating curves, each in the open
// interval (0, pi). Errors: InfeasibleAngles on construction outside it.
struct BendingAngles {
  double theta_alpha = 0.0;
  double theta_beta = 0.0;

  BendingAngles(double ta, double tb);
};

// Lengths on the pleated convex core: geodesic lengths of the two pleating
// curves and the distance d between the axes of the two marked generators.
struct CoreGeometry {
  double l_alpha_star = 0.0;
  double l_beta_star = 0.0;
  double d = 0.0;
};

// Geodesic lengths of the two curves in the intrinsic metric of each
// boundary component. The alpha curve is the pleating locus of the plus
// component and the beta curve of the minus component; on its own
// component a curve keeps the core length, on the opposite one it crosses
// the bending line and is stretched by cosh d.
struct BoundaryMetrics {
  double l_alpha_plus = 0.0;
  double l_beta_plus = 0.0;
  double l_alpha_minus = 0.0;
  double l_beta_minus = 0.0;
};

// Solves the right-angled-hexagon relations
//   sinh(l_alpha*/2) = sin(theta_beta/2) cot(theta_alpha/2)
//   sinh(l_beta*/2)  = sin(theta_alpha/2) cot(theta_beta/2)
//   cosh d sinh(l_alpha*/2) sinh(l_beta*/2) = 1
// for the core geometry. Errors: InfeasibleAngles when the closing relation
// has no solution (argument of arccosh below 1 - 1e-12; values within
// 1e-12 of 1 are clamped).
CoreGeometry lengths_from_angles(const BendingAngles& angles);

// Inverse map: recovers the angles from the two pleating lengths through
//   cos(theta_alpha/2) = cosh(l_beta*/2) tanh(l_alpha*/2).
// Errors: InfeasibleLengths when either product falls outside (0, 1).
BendingAngles angles_from_lengths(double l_alpha_star, double l_beta_star);

// Stretched lengths sinh(l_beta+/2) = cosh d sinh(l_beta*/2) and
// sinh(l_alpha-/2) = cosh d sinh(l_alpha*/2); the other two sides keep the
// core lengths. Errors: InconsistentInputs when core and angles disagree.
BoundaryMetrics boundary_metrics(const CoreGeometry& core, const BendingAngles& angles);

// Marked group realizing the bending data: generator traces
// x = 2 cosh(l_alpha*/2), y = 2 cosh(l_beta*/2) and z on the upper Markov
// branch, so that the axes sit at complex separation d + i pi/2.
ptorus::MarkedGroup group_from_bending(const BendingAngles& angles);

// Core geometry along the path theta_beta = theta_alpha^k, the regime where
// l_beta* diverges like theta_alpha^(1-k) as theta_alpha -> 0 for k > 1.
CoreGeometry divergence_profile(double theta_alpha, double k);

}  // namespace qfb::bend
