#include "qfbend/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qfbend/bendsolve.hpp"
#include "qfbend/errors.hpp"
#include "qfbend/h3geom.hpp"
#include "qfbend/lab.hpp"
#include "qfbend/minima.hpp"
#include "qfbend/ptorus.hpp"
#include "qfbend/quakebend.hpp"
#include "qfbend/rng.hpp"

namespace qfb::acceptance {

namespace {

using Complex = std::complex<double>;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::vector<std::pair<double, double>> weight_pairs() {
  return {{1.0, 1.0}, {1.0, 2.0}, {3.0, 1.0}};
}

// 50 x 50 log-spaced angle grid shared by the round-trip, axis, and
// unbending criteria.
const std::vector<double>& angle_grid() {
  static const std::vector<double> grid = lab::log_spaced(0.01, 3.0, 50);
  return grid;
}

CriterionResult criterion_round_trip() {
  CriterionResult r{1, "angle_length_round_trip", false, ""};
  constexpr double kTol = 1e-10;
  double worst = 0.0;
  int pairs = 0;
  for (double ta : angle_grid())
    for (double tb : angle_grid()) {
      bend::BendingAngles angles(ta, tb);
      bend::CoreGeometry core = bend::lengths_from_angles(angles);
      bend::BendingAngles back =
          bend::angles_from_lengths(core.l_alpha_star, core.l_beta_star);
      worst = std::max({worst, std::abs(back.theta_alpha - ta),
                        std::abs(back.theta_beta - tb)});
      ++pairs;
    }
  r.pass = worst <= kTol;
  r.detail = "max angle error " + sci(worst) + " over " + std::to_string(pairs) +
             " pairs (tol 1e-10)";
  return r;
}

CriterionResult criterion_axis_geometry() {
  CriterionResult r{2, "axis_separation_geometry", false, ""};
  constexpr double kTol = 1e-9;
  double worst_rho = 0.0, worst_phi = 0.0;
  for (double ta : angle_grid())
    for (double tb : angle_grid()) {
      bend::BendingAngles angles(ta, tb);
      bend::CoreGeometry core = bend::lengths_from_angles(angles);
      ptorus::MarkedGroup g = bend::group_from_bending(angles);
      h3::ComplexDistance cd = h3::complex_distance(h3::axis(g.A), h3::axis(g.B));
      worst_rho = std::max(worst_rho, std::abs(cd.rho - core.d));
      worst_phi = std::max(worst_phi, std::abs(cd.phi - M_PI_2));
    }
  r.pass = worst_rho <= kTol && worst_phi <= kTol;
  r.detail = "max |rho - d| " + sci(worst_rho) + ", max |phi - pi/2| " +
             sci(worst_phi) + " (tol 1e-9)";
  return r;
}

std::vector<lab::SweepRecord> weight_sweep(double a, double b) {
  return lab::sweep_theta(minima::Weights(a, b), lab::log_spaced(1e-3, 1e-1, 20));
}

CriterionResult criterion_distance_rate() {
  CriterionResult r{3, "axis_distance_rate", false, ""};
  bool ok = true;
  double worst_slope = 0.0, min_r2 = 1.0;
  for (auto [a, b] : weight_pairs()) {
    std::vector<double> theta, dvals;
    for (const lab::SweepRecord& rec : weight_sweep(a, b)) {
      theta.push_back(rec.theta);
      dvals.push_back(rec.d);
    }
    lab::SlopeFit fit = lab::fit_slope(theta, dvals);
    worst_slope = std::max(worst_slope, std::abs(fit.slope - 1.0));
    min_r2 = std::min(min_r2, fit.r_squared);
    ok = ok && fit.slope >= 0.98 && fit.slope <= 1.02 && fit.r_squared >= 0.999;
  }
  r.pass = ok;
  r.detail = "max |slope - 1| " + sci(worst_slope) + ", min r^2 " + sci(min_r2) +
             " (need slope in [0.98, 1.02], r^2 >= 0.999)";
  return r;
}

CriterionResult criterion_gap_rate() {
  CriterionResult r{4, "boundary_gap_rate", false, ""};
  bool ok = true;
  double worst_slope = 0.0, min_r2 = 1.0;
  for (auto [a, b] : weight_pairs()) {
    std::vector<double> theta, ga, gb;
    for (const lab::SweepRecord& rec : weight_sweep(a, b)) {
      theta.push_back(rec.theta);
      ga.push_back(rec.gap_alpha);
      gb.push_back(rec.gap_beta);
    }
    for (const std::vector<double>* ys : {&ga, &gb}) {
      lab::SlopeFit fit = lab::fit_slope(theta, *ys);
      worst_slope = std::max(worst_slope, std::abs(fit.slope - 2.0));
      min_r2 = std::min(min_r2, fit.r_squared);
      ok = ok && fit.slope >= 1.9 && fit.slope <= 2.1 && fit.r_squared >= 0.999;
    }
  }
  r.pass = ok;
  r.detail = "max |slope - 2| " + sci(worst_slope) + ", min r^2 " + sci(min_r2) +
             " (need slope in [1.9, 2.1], r^2 >= 0.999)";
  return r;
}

CriterionResult criterion_limit_identification() {
  CriterionResult r{5, "small_bending_limit", false, ""};
  constexpr double kLimitTol = 1e-4;
  constexpr double kMinTol = 1e-8;
  double worst_core = 0.0, worst_min = 0.0;
  for (auto [a, b] : weight_pairs()) {
    double la = 2.0 * std::asinh(b / a);
    double lb = 2.0 * std::asinh(a / b);
    bend::CoreGeometry core =
        bend::lengths_from_angles(bend::BendingAngles(a * 1e-5, b * 1e-5));
    worst_core = std::max(worst_core, std::abs(core.l_alpha_star - la) +
                                          std::abs(core.l_beta_star - lb));
    minima::MinimumReport rep = minima::kerckhoff_minimum(minima::Weights(a, b));
    worst_min = std::max({worst_min, std::abs(rep.l_alpha - la),
                          std::abs(rep.l_beta - lb)});
  }
  r.pass = worst_core <= kLimitTol && worst_min <= kMinTol;
  r.detail = "core residual at theta 1e-5: " + sci(worst_core) +
             " (tol 1e-4); minimizer vs closed form: " + sci(worst_min) +
             " (tol 1e-8)";
  return r;
}

CriterionResult criterion_unbending() {
  CriterionResult r{6, "unbending_realness", false, ""};
  constexpr double kTol = 1e-9;
  double worst_imag = 0.0, worst_len = 0.0;
  bool first_sign = true;
  for (double ta : angle_grid())
    for (double tb : angle_grid()) {
      bend::BendingAngles angles(ta, tb);
      bend::CoreGeometry core = bend::lengths_from_angles(angles);
      bend::BoundaryMetrics sides = bend::boundary_metrics(core, angles);
      quake::UnbendResult un = quake::unbend_check(angles);
      worst_imag = std::max(worst_imag, un.max_imag);
      worst_len = std::max(worst_len, std::abs(un.l_beta - sides.l_beta_plus));
      first_sign = first_sign && un.sign == -1.0;
    }
  r.pass = worst_imag <= kTol && worst_len <= kTol && first_sign;
  r.detail = "max |imag trace| " + sci(worst_imag) + ", max |l_beta - l_beta+| " +
             sci(worst_len) + " (tol 1e-9), sign -i everywhere: " +
             (first_sign ? "yes" : "no");
  return r;
}

CriterionResult criterion_divergence() {
  CriterionResult r{7, "divergence_rate", false, ""};
  bool ok = true;
  double worst_slope = 0.0, worst_cosh = 0.0;
  for (double k : {1.5, 2.0}) {
    lab::DivergenceResult res =
        lab::divergence_sweep(lab::log_spaced(1e-3, 1e-1, 20), k);
    worst_slope = std::max(worst_slope, std::abs(res.fit.slope - (1.0 - k)));
    worst_cosh = std::max(worst_cosh, res.cosh_d_minus_one_at_min_theta);
    ok = ok && std::abs(res.fit.slope - (1.0 - k)) <= 0.03 &&
         res.cosh_d_minus_one_at_min_theta <= 1e-4;
  }
  r.pass = ok;
  r.detail = "max |slope - (1 - k)| " + sci(worst_slope) +
             " (tol 0.03), max cosh d - 1 " + sci(worst_cosh) + " (tol 1e-4)";
  return r;
}

CriterionResult criterion_diagonal() {
  CriterionResult r{8, "diagonal_convergence", false, ""};
  std::vector<int> ns;
  for (int n = 100; n <= 10000; ++n) ns.push_back(n);
  std::vector<lab::SweepRecord> recs =
      lab::diagonal_sweep(minima::Weights(1.0, 1.0), ns);
  bool monotone = true;
  for (std::size_t i = 1; i < recs.size(); ++i)
    monotone = monotone && recs[i].dist_to_minimum < recs[i - 1].dist_to_minimum;
  double final_dist = recs.back().dist_to_minimum;
  r.pass = monotone && final_dist <= 1e-3;
  r.detail = "dist at n = 10^4: " + sci(final_dist) +
             " (tol 1e-3), strictly decreasing on [100, 10^4]: " +
             (monotone ? "yes" : "no");
  return r;
}

ptorus::FuchsianPoint seeded_point(Rng& rng) {
  double ux = rng.uniform(1.0, 2.0);
  double uy = rng.uniform(1.0, 2.0);
  ptorus::Branch branch =
      rng.uniform_int(0, 1) == 0 ? ptorus::Branch::plus : ptorus::Branch::minus;
  return ptorus::FuchsianPoint{2.0 * std::cosh(ux), 2.0 * std::cosh(uy), branch};
}

CriterionResult criterion_earthquake(std::uint64_t seed) {
  CriterionResult r{9, "earthquake_calculus", false, ""};
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);

  double worst_rel = 0.0;
  bool wolpert_ok = true;
  for (int i = 0; i < 10; ++i) {
    ptorus::FuchsianPoint p = seeded_point(rng);
    double d1 = quake::length_derivative(p, quake::Curve::alpha,
                                         quake::Curve::beta, 1e-5, true);
    double d2 = quake::length_derivative(p, quake::Curve::beta,
                                         quake::Curve::alpha, 1e-5, true);
    double rel = std::abs(d1 + d2) / (1.0 + std::abs(d1));
    worst_rel = std::max(worst_rel, rel);
    wolpert_ok = wolpert_ok && rel <= 1e-5;
  }

  double min_second = std::numeric_limits<double>::infinity();
  bool convex_ok = true;
  for (int i = 0; i < 20; ++i) {
    ptorus::FuchsianPoint p = seeded_point(rng);
    const double h = 1e-2;
    double f0 = ptorus::lengths_of(p).l_beta;
    double fp =
        ptorus::lengths_of(quake::earthquake(p, quake::Curve::alpha, h)).l_beta;
    double fm =
        ptorus::lengths_of(quake::earthquake(p, quake::Curve::alpha, -h)).l_beta;
    double second = fp - 2.0 * f0 + fm;
    min_second = std::min(min_second, second);
    convex_ok = convex_ok && second > 0.0;
  }

  double worst_twist = 0.0;
  for (int i = 0; i < 10; ++i) {
    ptorus::MarkedGroup g = ptorus::realize(seeded_point(rng));
    h3::MoebiusMap full_twist =
        quake::twist_element(g.A, quake::QuakebendParam(h3::complex_length(g.A)));
    double lhs = std::abs((full_twist * g.B).trace());
    double rhs = std::abs((g.A * g.B).trace());
    worst_twist = std::max(worst_twist, std::abs(lhs - rhs));
  }

  r.pass = wolpert_ok && convex_ok && worst_twist <= 1e-10;
  r.detail = "max antisymmetry residual " + sci(worst_rel) +
             " (tol 1e-5), min second difference " + sci(min_second) +
             " (need > 0), max twist trace error " + sci(worst_twist) +
             " (tol 1e-10)";
  return r;
}

h3::Tangent negate(const h3::Tangent& t) { return h3::Tangent{-t.h, -t.v}; }

h3::Tangent random_unit_tangent(Rng& rng) {
  for (;;) {
    double u1 = rng.uniform(-1.0, 1.0);
    double u2 = rng.uniform(-1.0, 1.0);
    double u3 = rng.uniform(-1.0, 1.0);
    double n = std::sqrt(u1 * u1 + u2 * u2 + u3 * u3);
    if (n < 0.2 || n > 1.0) continue;
    return h3::Tangent{Complex{u1 / n, u2 / n}, u3 / n};
  }
}

h3::MoebiusMap random_isometry(Rng& rng) {
  for (;;) {
    h3::MoebiusMap m{rng.complex_in_box(1.5), rng.complex_in_box(1.5),
                     rng.complex_in_box(1.5), rng.complex_in_box(1.5)};
    if (std::abs(m.det()) < 0.5) continue;
    return m.normalized();
  }
}

bool triangle_case(Rng& rng, double& worst_excess) {
  double phi = rng.uniform(0.005, M_PI_2);  // exterior angle at C
  double interior = M_PI - phi;
  double psi = rng.uniform(0.0, 2.0 * M_PI);
  Complex spin = std::polar(1.0, psi);
  h3::H3Point c{Complex{0.0, 0.0}, 1.0};
  h3::Tangent t1{spin * std::sin(interior / 2.0), std::cos(interior / 2.0)};
  h3::Tangent t2{-spin * std::sin(interior / 2.0), std::cos(interior / 2.0)};
  h3::H3Point a = h3::point_from_direction(c, t1, rng.uniform(0.3, 3.0));
  h3::H3Point b = h3::point_from_direction(c, t2, rng.uniform(0.3, 3.0));

  h3::MoebiusMap g = random_isometry(rng);
  h3::H3Point ga = g(a), gb = g(b), gc = g(c);
  double phi_meas = M_PI - h3::angle_at(gc, ga, gb);
  double h = h3::dist_point_geodesic(gc, h3::geodesic_through(ga, gb));
  double excess = std::tanh(h) - std::sin(phi_meas);
  worst_excess = std::max(worst_excess, excess);
  return excess <= 1e-12;
}

bool quadrilateral_case(Rng& rng, double& worst_excess) {
  h3::H3Point y1{rng.complex_in_box(1.0), rng.uniform(0.5, 2.0)};
  h3::H3Point y2 =
      h3::point_from_direction(y1, random_unit_tangent(rng), rng.uniform(1.0, 4.0));
  double v_cap = rng.uniform(0.05, 1.2);
  h3::H3Point x1 =
      h3::point_from_direction(y1, random_unit_tangent(rng), rng.uniform(0.0, v_cap));
  h3::H3Point x2 =
      h3::point_from_direction(y2, random_unit_tangent(rng), rng.uniform(0.0, v_cap));
  double span = h3::dist(x1, x2);
  if (span < 0.2) return true;  // skip near-degenerate bases

  double zeta = rng.uniform(0.15, 0.85);
  h3::H3Point z =
      h3::point_from_direction(x1, h3::direction_at(x1, x2), zeta * span);
  double v = std::max(h3::dist(x1, y1), h3::dist(x2, y2));
  double eta = std::min(h3::dist(z, x1), h3::dist(z, x2));
  double u = h3::dist_point_geodesic(z, h3::geodesic_through(y1, y2));
  double excess = std::sinh(u) - std::sinh(v) / std::cosh(eta);
  worst_excess = std::max(worst_excess, excess);
  return excess <= 1e-12;
}

bool polyline_case(Rng& rng, double& worst_ratio) {
  int bends = rng.uniform_int(2, 5);
  std::vector<h3::H3Point> pts;
  pts.push_back(h3::H3Point{rng.complex_in_box(0.5), 1.0});
  h3::Tangent dir = random_unit_tangent(rng);
  pts.push_back(h3::point_from_direction(pts.back(), dir, rng.uniform(0.2, 1.2)));
  for (int i = 0; i < bends; ++i) {
    h3::Tangent ext = negate(h3::direction_at(pts.back(), pts[pts.size() - 2]));
    double eps = rng.uniform(0.0, 0.22);
    h3::Tangent pert = random_unit_tangent(rng);
    h3::Tangent mixed{ext.h + eps * pert.h, ext.v + eps * pert.v};
    double n = std::sqrt(std::norm(mixed.h) + mixed.v * mixed.v);
    mixed.h /= n;
    mixed.v /= n;
    pts.push_back(
        h3::point_from_direction(pts.back(), mixed, rng.uniform(0.2, 1.2)));
  }
  h3::PolylineStats stats = h3::polyline_stats(h3::Polyline(pts));
  double phi = 0.0;
  for (double a : stats.v_angles) phi = std::max(phi, a);
  for (double a : stats.w_angles) phi = std::max(phi, a);
  if (phi >= M_PI_2 * 0.999) return true;  // outside the bounded-angle regime
  double ratio = stats.chord - std::cos(phi) * stats.length;
  worst_ratio = std::min(worst_ratio, ratio);
  return ratio >= -1e-12;
}

CriterionResult criterion_inequalities(std::uint64_t seed) {
  CriterionResult r{10, "geometry_inequalities", false, ""};
  Rng rng(seed ^ 0xc2b2ae3d27d4eb4full);
  bool ok = true;
  double tri_excess = -1.0, quad_excess = -1.0;
  double poly_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10000; ++i) ok = triangle_case(rng, tri_excess) && ok;
  for (int i = 0; i < 10000; ++i) ok = quadrilateral_case(rng, quad_excess) && ok;
  for (int i = 0; i < 2000; ++i) ok = polyline_case(rng, poly_margin) && ok;
  r.pass = ok;
  r.detail = "max triangle excess " + sci(tri_excess) + ", max quad excess " +
             sci(quad_excess) + " (tol 1e-12), min polyline margin " +
             sci(poly_margin) + " (need >= -1e-12)";
  return r;
}

struct Circline {
  bool is_line = false;
  Complex center{0.0, 0.0};  // circle case
  double radius = 0.0;
  Complex base{0.0, 0.0};  // line case
  Complex dir{1.0, 0.0};
};

double circline_residual(const Circline& c, Complex q) {
  if (c.is_line) return std::abs(std::imag((q - c.base) * std::conj(c.dir)));
  return std::abs(std::abs(q - c.center) - c.radius);
}

// Deterministic spread: the first point, then greedy products of distances.
std::vector<Complex> spread_points(const std::vector<Complex>& pts, int count) {
  std::vector<Complex> chosen{pts.front()};
  while (static_cast<int>(chosen.size()) < count) {
    double best = -1.0;
    Complex pick = pts.front();
    for (Complex q : pts) {
      double score = 1.0;
      for (Complex c : chosen) score *= std::abs(q - c);
      if (score > best) {
        best = score;
        pick = q;
      }
    }
    chosen.push_back(pick);
  }
  return chosen;
}

Circline fit_circline(const std::vector<Complex>& pts) {
  std::vector<Complex> p = spread_points(pts, 3);
  Complex a = p[1] - p[0], b = p[2] - p[0];
  double area = std::imag(std::conj(a) * b);
  double scale = std::norm(a) + std::norm(b);
  Circline c;
  if (std::abs(area) <= 1e-8 * scale) {
    c.is_line = true;
    c.base = p[0];
    c.dir = a / std::abs(a);
    return c;
  }
  double x = (std::norm(a) * b.imag() - std::norm(b) * a.imag()) / (2.0 * area);
  double y = (std::norm(b) * a.real() - std::norm(a) * b.real()) / (2.0 * area);
  c.center = p[0] + Complex{x, y};
  c.radius = std::abs(Complex{x, y});
  return c;
}

CriterionResult criterion_renderer() {
  CriterionResult r{11, "limit_set_roundness", false, ""};

  lab::ImageSpec spec;
  ptorus::TraceTriple fuchs{3.0, 3.0, 3.0};
  std::vector<Complex> round_pts =
      lab::enumerate_limit_points(ptorus::group_from_triple(fuchs), spec);
  Circline fit = fit_circline(round_pts);
  double worst_res = 0.0;
  for (Complex q : round_pts)
    worst_res = std::max(worst_res, circline_residual(fit, q));

  ptorus::MarkedGroup bent =
      bend::group_from_bending(bend::BendingAngles(M_PI / 4.0, M_PI / 4.0));
  std::vector<Complex> bent_pts = lab::enumerate_limit_points(bent, spec);
  std::vector<Complex> probe = spread_points(bent_pts, 4);
  Complex cr = ((probe[0] - probe[2]) * (probe[1] - probe[3])) /
               ((probe[0] - probe[3]) * (probe[1] - probe[2]));
  double lip = std::abs(cr) * (std::abs(1.0 / (probe[0] - probe[2]) -
                                        1.0 / (probe[0] - probe[3])) +
                               std::abs(1.0 / (probe[1] - probe[3]) -
                                        1.0 / (probe[1] - probe[2])) +
                               std::abs(1.0 / (probe[1] - probe[2]) -
                                        1.0 / (probe[0] - probe[2])) +
                               std::abs(1.0 / (probe[0] - probe[3]) -
                                        1.0 / (probe[1] - probe[3])));
  // Four concyclic points have a real cross-ratio, so if every probe point
  // sat within eps of one circline then |im cr| <= 2 * lip * eps. The
  // reported margin is therefore a certified lower bound on any fit.
  double margin = std::abs(cr.imag()) / (2.0 * lip);

  lab::ImageSpec small = spec;
  small.width = 200;
  small.height = 200;
  small.max_depth = 10;
  auto read_bytes = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::vector<char>(std::istreambuf_iterator<char>(in),
                             std::istreambuf_iterator<char>());
  };
  lab::render_limit_set(bent, small, "acceptance_render_a.ppm");
  lab::render_limit_set(bent, small, "acceptance_render_b.ppm");
  bool identical =
      read_bytes("acceptance_render_a.ppm") == read_bytes("acceptance_render_b.ppm");

  r.pass = worst_res <= 1e-6 && margin > 1e-3 && identical;
  r.detail = "round residual " + sci(worst_res) +
             " (tol 1e-6), certified non-round margin " + sci(margin) +
             " (need > 1e-3), repeated renders identical: " +
             (identical ? "yes" : "no");
  return r;
}

CriterionResult guarded(CriterionResult (*fn)()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    CriterionResult r;
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
    return r;
  }
}

CriterionResult guarded_seeded(CriterionResult (*fn)(std::uint64_t),
                               std::uint64_t seed) {
  try {
    return fn(seed);
  } catch (const std::exception& e) {
    CriterionResult r;
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
    return r;
  }
}

void fix_identity(CriterionResult& r, int id, const char* name) {
  r.id = id;
  if (r.name.empty()) r.name = name;
}

}  // namespace

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(guarded(criterion_round_trip));
  fix_identity(out.back(), 1, "angle_length_round_trip");
  out.push_back(guarded(criterion_axis_geometry));
  fix_identity(out.back(), 2, "axis_separation_geometry");
  out.push_back(guarded(criterion_distance_rate));
  fix_identity(out.back(), 3, "axis_distance_rate");
  out.push_back(guarded(criterion_gap_rate));
  fix_identity(out.back(), 4, "boundary_gap_rate");
  out.push_back(guarded(criterion_limit_identification));
  fix_identity(out.back(), 5, "small_bending_limit");
  out.push_back(guarded(criterion_unbending));
  fix_identity(out.back(), 6, "unbending_realness");
  out.push_back(guarded(criterion_divergence));
  fix_identity(out.back(), 7, "divergence_rate");
  out.push_back(guarded(criterion_diagonal));
  fix_identity(out.back(), 8, "diagonal_convergence");
  out.push_back(guarded_seeded(criterion_earthquake, seed));
  fix_identity(out.back(), 9, "earthquake_calculus");
  out.push_back(guarded_seeded(criterion_inequalities, seed));
  fix_identity(out.back(), 10, "geometry_inequalities");
  out.push_back(guarded(criterion_renderer));
  fix_identity(out.back(), 11, "limit_set_roundness");
  return out;
}

int run_and_report(std::ostream& out, std::uint64_t seed) {
  std::vector<CriterionResult> results = run_all(seed);
  int failed = 0;
  for (const CriterionResult& r : results) {
    char head[64];
    std::snprintf(head, sizeof head, "%2d %s %-26s", r.id,
                  r.pass ? "PASS" : "FAIL", r.name.c_str());
    out << head << " " << r.detail << "\n";
    if (!r.pass) ++failed;
  }
  out << "acceptance: " << (results.size() - failed) << "/" << results.size()
      << " passed (seed " << seed << ")\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace qfb::acceptance
