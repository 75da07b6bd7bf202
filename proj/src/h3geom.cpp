#include "qfbend/h3geom.hpp"

#include <algorithm>
#include <cmath>

#include "qfbend/errors.hpp"

namespace qfb::h3 {

namespace {

constexpr double kParabolicTol = 1e-12;
constexpr double kEllipticTol = 1e-12;

double clamp_unit(double x) { return std::min(1.0, std::max(-1.0, x)); }

}  // namespace

bool same_point(const SpherePoint& p, const SpherePoint& q) {
  if (p.at_infinity || q.at_infinity) return p.at_infinity && q.at_infinity;
  return p.z == q.z;
}

double chordal(const SpherePoint& p, const SpherePoint& q) {
  if (p.at_infinity && q.at_infinity) return 0.0;
  if (p.at_infinity) return 2.0 / std::sqrt(1.0 + std::norm(q.z));
  if (q.at_infinity) return 2.0 / std::sqrt(1.0 + std::norm(p.z));
  return 2.0 * std::abs(p.z - q.z) /
         std::sqrt((1.0 + std::norm(p.z)) * (1.0 + std::norm(q.z)));
}

MoebiusMap MoebiusMap::normalized() const {
  Complex s = std::sqrt(det());
  if (s == Complex{0.0, 0.0}) fail("Degenerate", "singular matrix cannot be normalized");
  return MoebiusMap{a / s, b / s, c / s, d / s};
}

SpherePoint MoebiusMap::operator()(const SpherePoint& p) const {
  if (p.at_infinity) {
    if (c == Complex{0.0, 0.0}) return SpherePoint::infinity();
    return SpherePoint::finite(a / c);
  }
  Complex den = c * p.z + d;
  if (den == Complex{0.0, 0.0}) return SpherePoint::infinity();
  return SpherePoint::finite((a * p.z + b) / den);
}

H3Point MoebiusMap::operator()(const H3Point& p) const {
  // Poincare extension of a det-1 matrix to upper half-space.
  Complex num = c * p.z + d;
  double denom = std::norm(num) + std::norm(c) * p.t * p.t;
  Complex z2 = ((a * p.z + b) * std::conj(num) + a * std::conj(c) * (p.t * p.t)) / denom;
  return H3Point{z2, p.t / denom};
}

MoebiusMap compose(const MoebiusMap& m, const MoebiusMap& n) {
  MoebiusMap r{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
               m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  return r.normalized();
}

Complex normalized_trace(const MoebiusMap& m) {
  Complex t = m.trace();
  if (t.real() < 0.0 || (t.real() == 0.0 && t.imag() < 0.0)) return -t;
  return t;
}

Complex complex_length_from_trace(Complex tr) {
  if (std::abs(tr - 2.0) < kParabolicTol || std::abs(tr + 2.0) < kParabolicTol)
    fail("ParabolicOrIdentity", "trace within 1e-12 of +/-2 has no translation length");
  // The two unit lifts give cosh(lambda/2) = +/- tr/2; exactly one choice
  // puts im(lambda/2) inside (-pi/2, pi/2].
  Complex half_a = std::acosh(tr / 2.0);
  Complex half_b = std::acosh(-tr / 2.0);
  Complex half = (half_a.imag() > -M_PI_2 && half_a.imag() <= M_PI_2) ? half_a : half_b;
  return 2.0 * half;
}

Complex complex_length(const MoebiusMap& m) {
  return complex_length_from_trace(m.trace());
}

GeodesicLine::GeodesicLine(SpherePoint first, SpherePoint second)
    : e1(first), e2(second) {
  if (same_point(e1, e2)) fail("Degenerate", "geodesic needs two distinct endpoints");
}

namespace {

// Both fixed points of a map with c != 0 (roots of c w^2 + (d - a) w - b).
struct FixedPair {
  SpherePoint plus, minus;
};

FixedPair fixed_points_generic(const MoebiusMap& m) {
  Complex disc = std::sqrt(m.trace() * m.trace() - 4.0);
  Complex wp = (m.a - m.d + disc) / (2.0 * m.c);
  Complex wm = (m.a - m.d - disc) / (2.0 * m.c);
  return FixedPair{SpherePoint::finite(wp), SpherePoint::finite(wm)};
}

// Magnitude of the inverse derivative |c w + d| at a finite fixed point;
// attracting fixed points have the larger value.
double inv_deriv_mag(const MoebiusMap& m, const SpherePoint& p) {
  if (p.at_infinity) return std::abs(m.a);  // |m'(inf)|^(-1/2) analogue: |a| vs |d|
  return std::abs(m.c * p.z + m.d);
}

}  // namespace

SpherePoint attracting_fixed_point(const MoebiusMap& m) {
  if (m.c == Complex{0.0, 0.0}) {
    if (m.a == m.d) return SpherePoint::infinity();  // translation w + b/d
    SpherePoint other = SpherePoint::finite(m.b / (m.d - m.a));
    return std::abs(m.a) >= std::abs(m.d) ? SpherePoint::infinity() : other;
  }
  Complex tr = m.trace();
  if (std::abs(tr * tr - 4.0) < 1e-14) {
    return SpherePoint::finite((m.a - m.d) / (2.0 * m.c));  // parabolic double point
  }
  FixedPair fp = fixed_points_generic(m);
  return inv_deriv_mag(m, fp.plus) >= inv_deriv_mag(m, fp.minus) ? fp.plus : fp.minus;
}

GeodesicLine axis(const MoebiusMap& m) {
  Complex lambda = complex_length(m);  // throws ParabolicOrIdentity when undefined
  if (std::abs(lambda.real()) < kEllipticTol)
    fail("Elliptic", "axis of an elliptic map is not oriented by attraction");
  if (m.c == Complex{0.0, 0.0}) {
    SpherePoint other = SpherePoint::finite(m.b / (m.d - m.a));
    if (std::abs(m.a) >= std::abs(m.d))
      return GeodesicLine(SpherePoint::infinity(), other);
    return GeodesicLine(other, SpherePoint::infinity());
  }
  FixedPair fp = fixed_points_generic(m);
  if (inv_deriv_mag(m, fp.plus) >= inv_deriv_mag(m, fp.minus))
    return GeodesicLine(fp.plus, fp.minus);
  return GeodesicLine(fp.minus, fp.plus);
}

namespace {

// Cross ratio ((b1 - a1)(b2 - a2)) / ((b1 - a2)(b2 - a1)) with at most one
// argument at infinity; the two factors containing it cancel in the limit.
Complex cross_ratio(const SpherePoint& a1, const SpherePoint& a2,
                    const SpherePoint& b1, const SpherePoint& b2) {
  if (a1.at_infinity) return (b2.z - a2.z) / (b1.z - a2.z);
  if (a2.at_infinity) return (b1.z - a1.z) / (b2.z - a1.z);
  if (b1.at_infinity) return (b2.z - a2.z) / (b2.z - a1.z);
  if (b2.at_infinity) return (b1.z - a1.z) / (b1.z - a2.z);
  return ((b1.z - a1.z) * (b2.z - a2.z)) / ((b1.z - a2.z) * (b2.z - a1.z));
}

}  // namespace

ComplexDistance complex_distance(const GeodesicLine& g1, const GeodesicLine& g2) {
  bool e11 = same_point(g1.e1, g2.e1), e12 = same_point(g1.e1, g2.e2);
  bool e21 = same_point(g1.e2, g2.e1), e22 = same_point(g1.e2, g2.e2);
  if ((e11 && e22) || (e12 && e21))
    fail("Degenerate", "the two geodesics coincide");
  if (e11 || e12 || e21 || e22)
    fail("SharedEndpoint", "geodesics share an ideal endpoint");

  // Sending g1 to {0, inf} puts g2's endpoints at {p, q} with X = p/q; the
  // perpendicular separation delta satisfies cosh delta = (1 + X) / (1 - X).
  Complex x = cross_ratio(g1.e1, g1.e2, g2.e1, g2.e2);
  Complex delta = std::acosh((1.0 + x) / (1.0 - x));
  double rho = std::abs(delta.real());
  double phi = std::abs(delta.imag());
  phi = std::min(phi, M_PI - phi);  // unsigned lines: fold to the acute sector
  return ComplexDistance{rho, phi};
}

double dist(const H3Point& p, const H3Point& q) {
  double dz = std::norm(p.z - q.z) + (p.t - q.t) * (p.t - q.t);
  return std::acosh(1.0 + dz / (2.0 * p.t * q.t));
}

namespace {

// Unit map sending g.e1 -> 0 and g.e2 -> inf.
MoebiusMap standardizer(const GeodesicLine& g) {
  if (g.e2.at_infinity) {
    return MoebiusMap{1.0, -g.e1.z, 0.0, 1.0};
  }
  if (g.e1.at_infinity) {
    // w -> 1 / (w - e2)
    return MoebiusMap{0.0, 1.0, 1.0, -g.e2.z}.normalized();
  }
  return MoebiusMap{1.0, -g.e1.z, 1.0, -g.e2.z}.normalized();
}

}  // namespace

double dist_point_geodesic(const H3Point& p, const GeodesicLine& g) {
  H3Point q = standardizer(g)(p);
  double r = std::sqrt(std::norm(q.z) + q.t * q.t);
  return std::acosh(std::max(1.0, r / q.t));
}

GeodesicLine geodesic_through(const H3Point& p, const H3Point& q) {
  Complex dz = q.z - p.z;
  double sep = std::abs(dz);
  if (sep == 0.0) {
    if (p.t == q.t) fail("Degenerate", "no unique geodesic through one point");
    SpherePoint foot = SpherePoint::finite(p.z);
    if (q.t > p.t) return GeodesicLine(foot, SpherePoint::infinity());
    return GeodesicLine(SpherePoint::infinity(), foot);
  }
  // Work in the vertical plane through p, q: coordinates (u, t) with p at
  // u = 0. The geodesic is the half-circle centered on u = center.
  Complex u_hat = dz / sep;
  double center = (sep * sep + q.t * q.t - p.t * p.t) / (2.0 * sep);
  double radius = std::sqrt(center * center + p.t * p.t);
  SpherePoint behind = SpherePoint::finite(p.z + (center - radius) * u_hat);
  SpherePoint ahead = SpherePoint::finite(p.z + (center + radius) * u_hat);
  return GeodesicLine(behind, ahead);
}

namespace {

// Point at signed arclength s from p toward g.e2 along g (p assumed on g).
H3Point slide_along(const GeodesicLine& g, const H3Point& p, double s) {
  MoebiusMap m = standardizer(g);
  H3Point sp = m(p);
  // On {0, inf} motion toward e2 = inf multiplies the height by e^s.
  H3Point moved{Complex{0.0, 0.0}, sp.t * std::exp(s)};
  return m.inverse()(moved);
}

}  // namespace

H3Point point_along(const H3Point& p, const H3Point& q, double s) {
  GeodesicLine g = geodesic_through(p, q);  // oriented with e2 on the q side
  return slide_along(g, p, s);
}

Tangent direction_at(const H3Point& p, const H3Point& q) {
  // Standardize p to (0, 1): z -> (z - p.z) / p.t, t -> t / p.t.
  Complex w = (q.z - p.z) / p.t;
  double h = q.t / p.t;
  double r = std::abs(w);
  if (r == 0.0) {
    if (h == 1.0) fail("Degenerate", "no direction between identical points");
    return Tangent{Complex{0.0, 0.0}, h > 1.0 ? 1.0 : -1.0};
  }
  // Circle through (0,1) and (r,h) centered at (center, 0); its tangent at
  // (0,1) is (1, center) / sqrt(1 + center^2), pointing toward positive u.
  Complex u_hat = w / r;
  double center = (r * r + h * h - 1.0) / (2.0 * r);
  double norm = std::sqrt(1.0 + center * center);
  return Tangent{u_hat / norm, center / norm};
}

double angle_between(const Tangent& u, const Tangent& w) {
  double dot = u.h.real() * w.h.real() + u.h.imag() * w.h.imag() + u.v * w.v;
  return std::acos(clamp_unit(dot));
}

double angle_at(const H3Point& p, const H3Point& q1, const H3Point& q2) {
  return angle_between(direction_at(p, q1), direction_at(p, q2));
}

H3Point point_from_direction(const H3Point& p, const Tangent& dir, double s) {
  double r = std::abs(dir.h);
  if (r < 1e-300) {
    return H3Point{p.z, p.t * std::exp(dir.v > 0.0 ? s : -s)};
  }
  // Recover the half-circle tangent to dir at the standardized basepoint:
  // tangent (|h|, v) is proportional to (1, center).
  Complex u_hat = dir.h / r;
  double center = dir.v / r;
  double radius = std::sqrt(1.0 + center * center);
  SpherePoint behind = SpherePoint::finite(p.z + p.t * (center - radius) * u_hat);
  SpherePoint ahead = SpherePoint::finite(p.z + p.t * (center + radius) * u_hat);
  GeodesicLine g(behind, ahead);
  return slide_along(g, p, s);
}

Polyline::Polyline(std::vector<H3Point> pts) : points(std::move(pts)) {
  if (points.size() < 2) fail("DegenerateSegment", "polyline needs at least two points");
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (dist(points[i], points[i + 1]) < 1e-14)
      fail("DegenerateSegment", "consecutive polyline points coincide");
  }
}

PolylineStats polyline_stats(const Polyline& poly) {
  const std::vector<H3Point>& x = poly.points;
  const std::size_t n = x.size() - 1;  // segment count
  PolylineStats out;
  out.chord = dist(x.front(), x.back());
  for (std::size_t i = 0; i < n; ++i) out.length += dist(x[i], x[i + 1]);

  auto negate = [](Tangent t) { return Tangent{-t.h, -t.v}; };
  for (std::size_t i = 1; i < n; ++i) {
    Tangent incoming_rev = direction_at(x[i], x[i - 1]);
    Tangent outgoing = direction_at(x[i], x[i + 1]);
    out.bend_angles.push_back(angle_between(negate(incoming_rev), outgoing));
    Tangent away_from_start = negate(direction_at(x[i], x.front()));
    out.v_angles.push_back(angle_between(away_from_start, outgoing));
    Tangent away_from_end = negate(direction_at(x[i], x.back()));
    out.w_angles.push_back(angle_between(away_from_end, incoming_rev));
  }
  return out;
}

}  // namespace qfb::h3
