#include "qfbend/ptorus.hpp"

#include <cmath>
#include <limits>

#include "qfbend/errors.hpp"

namespace qfb::ptorus {

namespace {

constexpr double kRelationTol = 1e-10;

// Extra allowance for cancellation when traces are large: the residual is a
// degree-3 polynomial, so roundoff scales with the squared magnitudes.
double relation_envelope(const TraceTriple& t) {
  double scale = std::norm(t.x) + std::norm(t.y) + std::norm(t.z) +
                 std::abs(t.x * t.y * t.z);
  return kRelationTol + 32.0 * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

void validate_triple(const TraceTriple& t) {
  if (std::abs(t.relation_residual()) > relation_envelope(t))
    fail("InconsistentTriple", "traces do not satisfy x^2 + y^2 + z^2 = xyz");
}

Complex markov_z(Complex x, Complex y, Branch branch) {
  Complex q = x * y / 2.0;
  Complex p = x * x + y * y;  // product of the two roots
  Complex s = std::sqrt(q * q - p);
  // Principal sqrt has re >= 0, and im >= 0 on the re == 0 boundary, so
  // q + s is the root with larger real part, ties broken by larger
  // imaginary part. The smaller root is recomputed from the root product
  // because the direct difference cancels.
  Complex plus = q + s;
  Complex minus = q - s;
  if (std::abs(plus) >= std::abs(minus)) {
    if (plus != Complex{0.0, 0.0}) minus = p / plus;
  } else {
    plus = p / minus;
  }
  return branch == Branch::plus ? plus : minus;
}

TraceTriple MarkedGroup::traces() const {
  return TraceTriple{h3::normalized_trace(A), h3::normalized_trace(B),
                     h3::normalized_trace(A * B)};
}

MarkedGroup group_from_triple(const TraceTriple& t) {
  validate_triple(t);

  Complex la, lb;
  try {
    la = h3::complex_length_from_trace(t.x);
  } catch (const Error&) {
    fail("NonLoxodromicA", "tr A is within 1e-12 of +/-2");
  }
  try {
    lb = h3::complex_length_from_trace(t.y);
  } catch (const Error&) {
    fail("ParabolicGenerator", "tr B is within 1e-12 of +/-2");
  }
  if (std::abs(la.real()) < 1e-12)
    fail("NonLoxodromicA", "generator A must be loxodromic to fix {0, inf}");

  Complex ha = la / 2.0, hb = lb / 2.0;
  Complex sa = std::sinh(ha), sb = std::sinh(hb);
  Complex cb = std::cosh(hb);

  // Axis separation from the trace of AB.
  Complex cosh_delta = (t.z - t.x * t.y / 2.0) / (2.0 * sa * sb);
  Complex delta = std::acosh(cosh_delta);
  Complex sinh_delta = std::sinh(delta);

  // A translates along {0, inf}; B is the translation of length l_b along
  // the line at separation delta from {0, inf}, reached from (0, 1) along
  // the perpendicular through {-1, 1}.
  MarkedGroup g;
  g.A = h3::MoebiusMap{std::exp(ha), 0.0, 0.0, std::exp(-ha)};
  g.B = h3::MoebiusMap{cb + sb * cosh_delta, -sb * sinh_delta,
                       sb * sinh_delta, cb - sb * cosh_delta};
  return g;
}

TraceTriple triple_of(const FuchsianPoint& p) {
  if (!(p.x > 2.0) || !(p.y > 2.0))
    fail("InconsistentTriple", "Fuchsian generator traces must exceed 2");
  double sq = p.x * p.x * p.y * p.y;
  double disc = sq - 4.0 * (p.x * p.x + p.y * p.y);
  if (disc < 0.0) {
    // On the fold locus the discriminant vanishes exactly; tolerate the
    // roundoff of the degree-4 expression, where both roots equal xy/2.
    if (disc < -64.0 * std::numeric_limits<double>::epsilon() * sq)
      fail("InconsistentTriple", "x^2 y^2 - 4(x^2 + y^2) < 0 admits no real z");
    return TraceTriple{p.x, p.y, p.x * p.y / 2.0};
  }
  Complex z = markov_z(p.x, p.y, p.branch);
  return TraceTriple{p.x, p.y, z};
}

MarkedGroup realize(const FuchsianPoint& p) { return group_from_triple(triple_of(p)); }

bool is_fuchsian_triple(const TraceTriple& t) {
  constexpr double kImagTol = 1e-10;
  if (std::abs(t.x.imag()) > kImagTol || std::abs(t.y.imag()) > kImagTol ||
      std::abs(t.z.imag()) > kImagTol)
    return false;
  return t.x.real() > 2.0 && t.y.real() > 2.0 && t.z.real() > 2.0;
}

namespace {

FuchsianPoint classify_real_triple(double x, double y, double z) {
  Complex zp = markov_z(x, y, Branch::plus);
  Complex zm = markov_z(x, y, Branch::minus);
  if (std::abs(zp.imag()) > 1e-9)
    fail("InconsistentTriple", "discriminant negative, no real Markov roots");
  Branch branch =
      std::abs(z - zp.real()) <= std::abs(z - zm.real()) ? Branch::plus : Branch::minus;
  return FuchsianPoint{x, y, branch};
}

}  // namespace

FuchsianPoint fuchsian_from_triple(const TraceTriple& t) {
  validate_triple(t);
  if (!is_fuchsian_triple(t))
    fail("InconsistentTriple", "not a real trace triple with x, y, z > 2");
  return classify_real_triple(t.x.real(), t.y.real(), t.z.real());
}

GeneratorLengths lengths_of(const FuchsianPoint& p) {
  if (!(p.x > 2.0) || !(p.y > 2.0))
    fail("InconsistentTriple", "Fuchsian generator traces must exceed 2");
  return GeneratorLengths{2.0 * std::acosh(p.x / 2.0), 2.0 * std::acosh(p.y / 2.0)};
}

ComplexLengths lengths_of(const TraceTriple& t) {
  ComplexLengths out;
  try {
    out.l_alpha = h3::complex_length_from_trace(t.x);
  } catch (const Error&) {
    fail("ParabolicGenerator", "tr A is within 1e-12 of +/-2");
  }
  try {
    out.l_beta = h3::complex_length_from_trace(t.y);
  } catch (const Error&) {
    fail("ParabolicGenerator", "tr B is within 1e-12 of +/-2");
  }
  return out;
}

}  // namespace qfb::ptorus
