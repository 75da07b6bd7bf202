#pragma once

#include <complex>
#include <vector>

namespace qfb::h3 {

using Complex = std::complex<double>;

// Point of the Riemann sphere: a finite complex number or the point at
// infinity. Kept as a tagged value rather than projective coordinates so that
// exact endpoint comparisons stay trivial.
struct SpherePoint {
  Complex z{0.0, 0.0};
  bool at_infinity = false;

  static SpherePoint infinity() { return SpherePoint{{0.0, 0.0}, true}; }
  static SpherePoint finite(Complex w) { return SpherePoint{w, false}; }
};

bool same_point(const SpherePoint& p, const SpherePoint& q);

// Chordal metric on the sphere, range [0, 2].
double chordal(const SpherePoint& p, const SpherePoint& q);

// Point of upper half-space: boundary coordinate z plus height t > 0.
struct H3Point {
  Complex z{0.0, 0.0};
  double t = 1.0;
};

// Unit complex matrix acting on the sphere and, by the Poincare extension, on
// upper half-space. Entries are kept with det == 1 (renormalized after
// composition).
struct MoebiusMap {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static MoebiusMap identity() { return MoebiusMap{}; }

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  MoebiusMap inverse() const { return MoebiusMap{d, -b, -c, a}; }
  MoebiusMap normalized() const;

  SpherePoint operator()(const SpherePoint& p) const;
  H3Point operator()(const H3Point& p) const;
};

// Matrix product, renormalized to det == 1.
MoebiusMap compose(const MoebiusMap& m, const MoebiusMap& n);
inline MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
  return compose(m, n);
}

// Trace with the sign ambiguity of the two unit lifts resolved: the
// representative with positive real part (imaginary part >= 0 on the
// boundary line re == 0) is returned.
Complex normalized_trace(const MoebiusMap& m);

// Complex translation length lambda, defined by tr m = 2 cosh(lambda / 2)
// with re(lambda) >= 0 and im(lambda / 2) in (-pi/2, pi/2], so lambda is
// independent of the choice of unit lift. Errors: ParabolicOrIdentity.
Complex complex_length(const MoebiusMap& m);
Complex complex_length_from_trace(Complex tr);

// Oriented geodesic, stored by its two distinct ideal endpoints.
// Errors: Degenerate if the endpoints coincide.
struct GeodesicLine {
  SpherePoint e1, e2;
  GeodesicLine(SpherePoint first, SpherePoint second);
};

// Axis of a loxodromic map, oriented from attracting to repelling endpoint.
// Errors: ParabolicOrIdentity, Elliptic.
GeodesicLine axis(const MoebiusMap& m);

// Attracting fixed point with deterministic tie-breaking; never throws for
// a non-identity map (parabolic maps return their single fixed point).
SpherePoint attracting_fixed_point(const MoebiusMap& m);

// Complex distance between two geodesics: rho >= 0 is the hyperbolic
// distance along the common perpendicular and phi in [0, pi/2] the unsigned
// acute crossing angle between the lines seen along it. Intersecting lines
// give rho == 0; coplanar disjoint lines give phi == 0.
// Errors: SharedEndpoint, Degenerate (identical lines).
struct ComplexDistance {
  double rho = 0.0;
  double phi = 0.0;
};

ComplexDistance complex_distance(const GeodesicLine& g1, const GeodesicLine& g2);

double dist(const H3Point& p, const H3Point& q);

// Distance from a point to a complete geodesic.
double dist_point_geodesic(const H3Point& p, const GeodesicLine& g);

// Complete geodesic through two distinct points, oriented so that e2 lies on
// the q side. Errors: Degenerate if the points coincide.
GeodesicLine geodesic_through(const H3Point& p, const H3Point& q);

// Point at arclength s from p along the geodesic toward q (s may exceed
// dist(p, q) or be negative). Errors: Degenerate if p == q.
H3Point point_along(const H3Point& p, const H3Point& q, double s);

// Unit tangent at a standardized basepoint (0, 1): horizontal complex part
// plus vertical component, |h|^2 + v^2 == 1.
struct Tangent {
  Complex h{0.0, 0.0};
  double v = 0.0;
};

// Unit tangent at p pointing toward q, expressed in the frame that moves p
// to (0, 1). Two tangents at the same p are comparable through angle_between.
Tangent direction_at(const H3Point& p, const H3Point& q);

double angle_between(const Tangent& u, const Tangent& w);

// Interior angle at p of the triangle with the two other vertices.
double angle_at(const H3Point& p, const H3Point& q1, const H3Point& q2);

// Point reached from p by moving arclength s along the direction dir.
H3Point point_from_direction(const H3Point& p, const Tangent& dir, double s);

// Piecewise geodesic path. Errors: DegenerateSegment when consecutive
// points coincide.
struct Polyline {
  std::vector<H3Point> points;
  explicit Polyline(std::vector<H3Point> pts);

  std::size_t segments() const { return points.size() - 1; }
};

// Per-vertex data for a polyline with endpoints X = first, X' = last:
//   bend_angles[i]  exterior angle at interior vertex i+1
//   v_angles[i]     angle at vertex i+1 between the continuation of the line
//                   X -> vertex (pointing away from X) and the outgoing side
//   w_angles[i]     angle at vertex i+1 between the incoming side reversed
//                   and the continuation of the line X' -> vertex
//   length          sum of segment lengths, chord = dist(X, X').
struct PolylineStats {
  std::vector<double> bend_angles;
  std::vector<double> v_angles;
  std::vector<double> w_angles;
  double length = 0.0;
  double chord = 0.0;
};

PolylineStats polyline_stats(const Polyline& poly);

}  // namespace qfb::h3
