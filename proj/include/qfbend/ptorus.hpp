#pragma once

#include <complex>

#include "qfbend/h3geom.hpp"

namespace qfb::ptorus {

using Complex = std::complex<double>;

// Traces (x, y, z) = (tr A, tr B, tr AB) of a marked two-generator group
// whose commutator is parabolic with trace -2, equivalently
// x^2 + y^2 + z^2 == x y z.
struct TraceTriple {
  Complex x{0.0}, y{0.0}, z{0.0};

  // Residual of the defining relation, evaluated as z(z - xy) + x^2 + y^2
  // to keep cancellation mild for large traces.
  Complex relation_residual() const { return z * (z - x * y) + x * x + y * y; }
};

// Checks the trace relation with a floating-point-aware envelope:
// 1e-10 plus a term proportional to the magnitudes involved.
// Errors: InconsistentTriple.
void validate_triple(const TraceTriple& t);

enum class Branch { plus, minus };

// The two solutions of z^2 - xyz + (x^2 + y^2) == 0. Branch::plus selects
// the root with the larger real part, ties broken by the larger imaginary
// part; Branch::minus the other. The smaller-magnitude root is recovered
// from the product of roots to avoid cancellation.
Complex markov_z(Complex x, Complex y, Branch branch);

// Marked group: generator matrices in the normal form with the axis of A
// equal to {0, inf} (attracting endpoint inf) and the common perpendicular
// from axis A to axis B passing through (0, 1).
struct MarkedGroup {
  h3::MoebiusMap A, B;

  TraceTriple traces() const;
};

// Builds the normal form from a trace triple. The complex separation delta
// between the axes satisfies cosh delta = (z - xy/2) / (2 sinh(l_a/2) sinh(l_b/2)).
// Errors: InconsistentTriple (relation violated), NonLoxodromicA,
// ParabolicGenerator.
MarkedGroup group_from_triple(const TraceTriple& t);

// Point of the space of discrete faithful Fuchsian markings, recorded by the
// two real generator traces and the Markov branch for z.
struct FuchsianPoint {
  double x = 3.0;
  double y = 3.0;
  Branch branch = Branch::plus;
};

// Errors: InconsistentTriple when x <= 2, y <= 2, or the discriminant
// x^2 y^2 - 4(x^2 + y^2) is negative (no real z exists).
TraceTriple triple_of(const FuchsianPoint& p);

MarkedGroup realize(const FuchsianPoint& p);

// True when all three traces are real to within 1e-10 and exceed 2, i.e.
// the group preserves a plane and both generators are hyperbolic.
bool is_fuchsian_triple(const TraceTriple& t);

// Recovers a FuchsianPoint from a real triple, classifying z against the
// two Markov roots. Errors: InconsistentTriple.
FuchsianPoint fuchsian_from_triple(const TraceTriple& t);

// Real translation lengths (l_alpha, l_beta) = (2 acosh(x/2), 2 acosh(y/2))
// of the generators at a Fuchsian point.
struct GeneratorLengths {
  double l_alpha = 0.0;
  double l_beta = 0.0;
};

GeneratorLengths lengths_of(const FuchsianPoint& p);

// Complex translation lengths recovered from the generator traces via
// tr = 2 cosh(l/2). Errors: ParabolicGenerator when a trace is within
// 1e-12 of +/-2.
struct ComplexLengths {
  Complex l_alpha{0.0};
  Complex l_beta{0.0};
};

ComplexLengths lengths_of(const TraceTriple& t);

}  // namespace qfb::ptorus
