#include "qfbend/quakebend.hpp"

#include <cmath>

#include "qfbend/errors.hpp"

namespace qfb::quake {

QuakebendParam::QuakebendParam(Complex value) : tau(value) {
  if (!(std::abs(value.imag()) < M_PI))
    fail("InfeasibleAngles", "quakebend bending part must satisfy |im tau| < pi");
}

h3::MoebiusMap twist_element(const h3::MoebiusMap& a, const QuakebendParam& tau) {
  Complex lambda = h3::complex_length(a);  // ParabolicOrIdentity falls through
  if (std::abs(lambda.real()) < 1e-12)
    fail("NonLoxodromic", "twist axis requires a loxodromic map");
  Complex half = lambda / 2.0;
  Complex sh = std::sinh(half), ch = std::cosh(half);
  // Involution k fixing the axis of a: a = ch * id + sh * k with k^2 = id.
  // The subgroup element with translation length tau reuses the same k, so
  // no fixed-point computation (and no branch choice) is needed.
  Complex cs = std::cosh(tau.tau / 2.0), ss = std::sinh(tau.tau / 2.0);
  Complex f = ss / sh;
  h3::MoebiusMap c{cs + f * (a.a - ch), f * a.b, f * a.c, cs + f * (a.d - ch)};
  return c.normalized();
}

ptorus::MarkedGroup quakebend_alpha(const ptorus::MarkedGroup& g,
                                    const QuakebendParam& tau) {
  ptorus::MarkedGroup out;
  out.A = g.A;
  out.B = twist_element(g.A, tau) * g.B;
  return out;
}

ptorus::MarkedGroup quakebend_beta(const ptorus::MarkedGroup& g,
                                   const QuakebendParam& tau) {
  // Opposite twist sign: the beta flow must run against the alpha flow for
  // the cross length derivatives to come out antisymmetric.
  ptorus::MarkedGroup out;
  out.A = twist_element(g.B, QuakebendParam(-tau.tau)) * g.A;
  out.B = g.B;
  return out;
}

UnbendResult unbend_check(const bend::BendingAngles& angles) {
  constexpr double kRealTol = 1e-9;
  ptorus::MarkedGroup bent = bend::group_from_bending(angles);

  UnbendResult out;
  for (double sign : {-1.0, 1.0}) {
    QuakebendParam unbend{Complex{0.0, sign * angles.theta_alpha}};
    ptorus::TraceTriple t = quakebend_alpha(bent, unbend).traces();
    double worst = std::max({std::abs(t.x.imag()), std::abs(t.y.imag()),
                             std::abs(t.z.imag())});
    if (sign < 0.0 || worst < out.max_imag) {
      out.triple = t;
      out.max_imag = worst;
      out.sign = sign;
    }
    if (out.max_imag <= kRealTol) break;
  }
  if (out.max_imag > kRealTol)
    fail("SignConventionFailure", "neither +/- i theta_alpha yields real traces");
  out.l_alpha = 2.0 * std::acosh(std::abs(out.triple.x.real()) / 2.0);
  out.l_beta = 2.0 * std::acosh(std::abs(out.triple.y.real()) / 2.0);
  return out;
}

ptorus::FuchsianPoint earthquake(const ptorus::FuchsianPoint& p, Curve curve, double t) {
  ptorus::MarkedGroup g = ptorus::realize(p);
  QuakebendParam shear{Complex{t, 0.0}};
  ptorus::MarkedGroup moved =
      curve == Curve::alpha ? quakebend_alpha(g, shear) : quakebend_beta(g, shear);
  return ptorus::fuchsian_from_triple(moved.traces());
}

ptorus::FuchsianPoint earthquake(const EarthquakePath& path) {
  return earthquake(path.base, path.curve, path.t);
}

namespace {

double curve_length(const ptorus::FuchsianPoint& p, Curve of) {
  ptorus::GeneratorLengths l = ptorus::lengths_of(p);
  return of == Curve::alpha ? l.l_alpha : l.l_beta;
}

double central_difference(const ptorus::FuchsianPoint& p, Curve along, Curve of,
                          double h) {
  double fp = curve_length(earthquake(p, along, h), of);
  double fm = curve_length(earthquake(p, along, -h), of);
  return fp - fm;
}

}  // namespace

double length_derivative(const ptorus::FuchsianPoint& p, Curve along, Curve of,
                         double h, bool richardson) {
  if (!(h > 0.0)) fail("StepTooSmall", "step size must be positive");
  if (of == along) return 0.0;  // the twisted curve keeps its own length

  double diff = central_difference(p, along, of, h);
  if (std::abs(diff) < 1e-12) {
    // Either the derivative vanishes here or h is far too small to resolve
    // it. Probe at a coarse step to tell the two apart.
    double probe = std::max(100.0 * h, 1e-3);
    double coarse = central_difference(p, along, of, probe) / (2.0 * probe);
    if (std::abs(coarse) >= 1e-4)
      fail("StepTooSmall", "difference below 1e-12 despite a nonzero derivative");
    return diff / (2.0 * h);
  }
  double d1 = diff / (2.0 * h);
  if (!richardson) return d1;
  double d2 = central_difference(p, along, of, 2.0 * h) / (4.0 * h);
  return (4.0 * d1 - d2) / 3.0;
}

}  // namespace qfb::quake
