#include "qfbend/minima.hpp"

#include <cmath>
#include <vector>

#include "qfbend/bendsolve.hpp"
#include "qfbend/errors.hpp"
#include "qfbend/quakebend.hpp"

namespace qfb::minima {

namespace {

// Weighted length along the discriminant zero locus, parametrized by
// u = l_alpha / 2; there sinh(l_alpha/2) sinh(l_beta/2) = 1, so
// l_beta = 2 asinh(1 / sinh u).
double fold_objective(double u, const Weights& w) {
  return 2.0 * w.a * u + 2.0 * w.b * std::asinh(1.0 / std::sinh(u));
}

struct Bracket {
  double lo, hi;
};

Bracket bracket_minimum(const Weights& w) {
  // Geometric scan; the objective is strictly convex with a unique interior
  // minimum, so a middle dip always shows up at this resolution.
  double u_prev2 = 0.0, u_prev1 = 0.0;
  double f_prev2 = 0.0, f_prev1 = 0.0;
  int have = 0;
  for (int k = -64; k <= 64; ++k) {
    double u = std::exp2(0.25 * k);
    double f = fold_objective(u, w);
    if (have >= 2 && f_prev1 <= f_prev2 && f_prev1 <= f)
      return Bracket{u_prev2, u};
    u_prev2 = u_prev1;
    f_prev2 = f_prev1;
    u_prev1 = u;
    f_prev1 = f;
    have += 1;
  }
  fail("NoBracket", "no bracketing triple found for the fold objective");
}

// Golden-section reduction followed by a bisection on the sign of the
// centered difference of the objective, which localizes the minimum far
// below the sqrt(eps) floor of value-comparison searches.
double minimize_fold(const Weights& w) {
  Bracket br = bracket_minimum(w);
  double lo = br.lo, hi = br.hi;
  const double golden = 0.5 * (3.0 - std::sqrt(5.0));
  double x1 = lo + golden * (hi - lo);
  double x2 = hi - golden * (hi - lo);
  double f1 = fold_objective(x1, w);
  double f2 = fold_objective(x2, w);
  for (int it = 0; it < 200 && (hi - lo) > 1e-7 * (1.0 + lo); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = lo + golden * (hi - lo);
      f1 = fold_objective(x1, w);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = hi - golden * (hi - lo);
      f2 = fold_objective(x2, w);
    }
  }

  const double step = 1e-6 * (1.0 + 0.5 * (lo + hi));
  auto slope_sign = [&](double u) {
    double diff = fold_objective(u + step, w) - fold_objective(u - step, w);
    return diff;
  };
  double a = lo - 2.0 * step, b = hi + 2.0 * step;
  double sa = slope_sign(a), sb = slope_sign(b);
  if (!(sa < 0.0) || !(sb > 0.0)) return 0.5 * (lo + hi);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + a); ++it) {
    double m = 0.5 * (a + b);
    double sm = slope_sign(m);
    if (sm == 0.0) return m;
    (sm < 0.0 ? a : b) = m;
  }
  return 0.5 * (a + b);
}

double criticality_of(const ptorus::FuchsianPoint& p, const Weights& w) {
  // Weighted earthquake derivatives; at a minimum both flows are critical.
  // Own-curve derivatives vanish identically, so only the cross terms enter.
  double along_alpha =
      w.b * quake::length_derivative(p, quake::Curve::alpha, quake::Curve::beta, 1e-3);
  double along_beta =
      w.a * quake::length_derivative(p, quake::Curve::beta, quake::Curve::alpha, 1e-3);
  return std::max(std::abs(along_alpha), std::abs(along_beta));
}

MinimumReport report_at_fold(double u, const Weights& w) {
  MinimumReport rep;
  rep.l_alpha = 2.0 * u;
  rep.l_beta = 2.0 * std::asinh(1.0 / std::sinh(u));
  rep.value = w.a * rep.l_alpha + w.b * rep.l_beta;
  rep.point = ptorus::FuchsianPoint{2.0 * std::cosh(u),
                                    2.0 * std::cosh(rep.l_beta / 2.0),
                                    ptorus::Branch::plus};
  rep.criticality = criticality_of(rep.point, w);
  return rep;
}

}  // namespace

Weights::Weights(double wa, double wb) : a(wa), b(wb) {
  if (!(wa > 0.0) || !(wb > 0.0))
    fail("NonPositiveData", "length weights must be positive");
}

double length_value(const ptorus::FuchsianPoint& p, const Weights& w) {
  ptorus::GeneratorLengths l = ptorus::lengths_of(p);
  return w.a * l.l_alpha + w.b * l.l_beta;
}

MinimumReport kerckhoff_minimum(const Weights& w) {
  return report_at_fold(minimize_fold(w), w);
}

std::vector<MinimumReport> line_of_minima(const Weights& w,
                                          const std::vector<double>& t_grid) {
  std::vector<MinimumReport> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > 0.0)) fail("NonPositiveData", "line parameter must be positive");
    out.push_back(kerckhoff_minimum(Weights(w.a, t * w.b)));
  }
  return out;
}

LimitResidual limit_matches_minimum(const Weights& w, double theta) {
  bend::BendingAngles angles(w.a * theta, w.b * theta);
  bend::CoreGeometry core = bend::lengths_from_angles(angles);
  MinimumReport rep = kerckhoff_minimum(w);
  LimitResidual out;
  out.residual = std::abs(core.l_alpha_star - rep.l_alpha) +
                 std::abs(core.l_beta_star - rep.l_beta);
  out.d = core.d;
  return out;
}

}  // namespace qfb::minima
