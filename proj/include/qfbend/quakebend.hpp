#pragma once

#include <complex>

#include "qfbend/bendsolve.hpp"
#include "qfbend/ptorus.hpp"

namespace qfb::quake {

using Complex = std::complex<double>;

// Complex shear-bend parameter tau: real part twists, imaginary part bends.
// Errors: InfeasibleAngles when |im tau| >= pi.
struct QuakebendParam {
  Complex tau{0.0, 0.0};

  explicit QuakebendParam(Complex value);
};

enum class Curve { alpha, beta };

// Earthquake datum: a starting Fuchsian marking, the twisting curve, and a
// real twist time.
struct EarthquakePath {
  ptorus::FuchsianPoint base;
  Curve curve = Curve::alpha;
  double t = 0.0;
};

// One-parameter subgroup through a loxodromic map: C(tau) translates by
// complex length tau along the axis of a, with C(0) == identity and
// C(complex_length(a)) == a. Errors: NonLoxodromic.
h3::MoebiusMap twist_element(const h3::MoebiusMap& a, const QuakebendParam& tau);

// Left quakebend along the alpha curve: A stays, B gains the prefix C(tau).
// Real tau shears, imaginary tau bends; the commutator trace is preserved.
ptorus::MarkedGroup quakebend_alpha(const ptorus::MarkedGroup& g, const QuakebendParam& tau);

// Companion deformation along the beta curve, with the sign chosen so the
// two twist flows satisfy the antisymmetric length-derivative relation.
ptorus::MarkedGroup quakebend_beta(const ptorus::MarkedGroup& g, const QuakebendParam& tau);

// Bends a group built from the given angles back to a plane: applies the
// alpha quakebend with tau = -i theta_alpha, falling back to
// +i theta_alpha, and reads off the resulting real triple. The recovered
// y equals 2 cosh(l_beta+/2), the plus-side boundary length of the
// original bent group. Errors: SignConventionFailure when neither sign
// makes all traces real to 1e-9.
struct UnbendResult {
  ptorus::TraceTriple triple;
  double l_alpha = 0.0;
  double l_beta = 0.0;
  double max_imag = 0.0;  // largest imaginary part seen in the new traces
  double sign = -1.0;     // s in tau = s * i * theta_alpha
};

UnbendResult unbend_check(const bend::BendingAngles& angles);

// Earthquake flow on Fuchsian markings: realize, twist by real time t, read
// the marking back. Errors propagate from the realization.
ptorus::FuchsianPoint earthquake(const ptorus::FuchsianPoint& p, Curve curve, double t);
ptorus::FuchsianPoint earthquake(const EarthquakePath& path);

// Central-difference derivative of the length of one curve along the
// earthquake in another at time 0. Steps too small to resolve a nonzero
// derivative raise StepTooSmall; a difference that is tiny because the
// derivative itself vanishes is returned as the plain quotient.
// Set richardson for one step of extrapolation (h and 2h).
double length_derivative(const ptorus::FuchsianPoint& p, Curve along, Curve of,
                         double h = 1e-5, bool richardson = false);

}  // namespace qfb::quake
