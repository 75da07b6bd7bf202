#include "qfbend/lab.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "qfbend/errors.hpp"

namespace qfb::lab {

namespace {

SweepRecord record_from_angles(const bend::BendingAngles& angles, double theta,
                               const minima::MinimumReport* minimum) {
  bend::CoreGeometry core = bend::lengths_from_angles(angles);
  bend::BoundaryMetrics sides = bend::boundary_metrics(core, angles);
  ptorus::MarkedGroup g = bend::group_from_bending(angles);
  ptorus::TraceTriple t = g.traces();

  SweepRecord r;
  r.theta = theta;
  r.theta_alpha = angles.theta_alpha;
  r.theta_beta = angles.theta_beta;
  r.l_alpha_star = core.l_alpha_star;
  r.l_beta_star = core.l_beta_star;
  r.d = core.d;
  r.l_beta_plus = sides.l_beta_plus;
  r.l_alpha_minus = sides.l_alpha_minus;
  r.gap_alpha = std::abs(sides.l_alpha_plus - sides.l_alpha_minus);
  r.gap_beta = std::abs(sides.l_beta_plus - sides.l_beta_minus);
  r.dist_to_minimum = std::numeric_limits<double>::quiet_NaN();
  if (minimum != nullptr) {
    r.dist_to_minimum = std::abs(core.l_alpha_star - minimum->l_alpha) +
                        std::abs(core.l_beta_star - minimum->l_beta);
  }
  r.x = t.x.real();
  r.y = t.y.real();
  r.re_z = t.z.real();
  r.im_z = t.z.imag();
  return r;
}

}  // namespace

SweepRecord make_record(const minima::Weights& w, double theta,
                        const minima::MinimumReport* minimum) {
  return record_from_angles(bend::BendingAngles(w.a * theta, w.b * theta), theta,
                            minimum);
}

std::vector<SweepRecord> sweep_theta(const minima::Weights& w,
                                     const std::vector<double>& theta_grid) {
  minima::MinimumReport minimum = minima::kerckhoff_minimum(w);
  std::vector<SweepRecord> out;
  out.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    try {
      out.push_back(make_record(w, theta, &minimum));
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "at theta = " << theta << ": " << e.what();
      fail(e.code(), msg.str());
    }
  }
  return out;
}

std::vector<SweepRecord> diagonal_sweep(const minima::Weights& w,
                                        const std::vector<int>& n_grid) {
  minima::MinimumReport minimum = minima::kerckhoff_minimum(w);
  std::vector<SweepRecord> out;
  out.reserve(n_grid.size());
  for (int n : n_grid) {
    if (n < 1) fail("NonPositiveData", "diagonal index n must be at least 1");
    double theta = 1.0 / (static_cast<double>(n) * n);
    double drift_a = w.a * (1.0 + 1.0 / n);
    double drift_b = w.b * (1.0 - 1.0 / (2.0 * n));
    try {
      SweepRecord r = make_record(minima::Weights(drift_a, drift_b), theta, &minimum);
      r.theta = theta;
      out.push_back(r);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "at n = " << n << ": " << e.what();
      fail(e.code(), msg.str());
    }
  }
  return out;
}

DivergenceResult divergence_sweep(const std::vector<double>& theta_grid, double k) {
  if (!(k > 1.0)) fail("NonPositiveData", "divergence sweep needs exponent k > 1");
  DivergenceResult out;
  out.records.reserve(theta_grid.size());
  double min_theta = std::numeric_limits<double>::infinity();
  double d_at_min = 0.0;
  std::vector<double> thetas, sinh_vals;
  for (double ta : theta_grid) {
    try {
      SweepRecord r =
          record_from_angles(bend::BendingAngles(ta, std::pow(ta, k)), ta, nullptr);
      out.records.push_back(r);
      thetas.push_back(ta);
      sinh_vals.push_back(std::sinh(r.l_beta_star / 2.0));
      if (ta < min_theta) {
        min_theta = ta;
        d_at_min = r.d;
      }
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "at theta_alpha = " << ta << ": " << e.what();
      fail(e.code(), msg.str());
    }
  }
  out.fit = fit_slope(thetas, sinh_vals);
  double half = std::sinh(d_at_min / 2.0);
  out.cosh_d_minus_one_at_min_theta = 2.0 * half * half;
  return out;
}

SlopeFit fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 5)
    fail("InsufficientPoints", "power-law fit needs five matched samples or more");
  const int n = static_cast<int>(xs.size());
  std::vector<double> lx(n), ly(n);
  for (int i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
      fail("NonPositiveData", "power-law fit needs strictly positive samples");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    double dx = lx[i] - mx, dy = ly[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) fail("InsufficientPoints", "all abscissae coincide");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.n_points = n;
  return fit;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > 0.0)) fail("NonPositiveData", "log grid needs positive bounds");
  if (n < 2) fail("InsufficientPoints", "log grid needs at least two points");
  std::vector<double> out(n);
  double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = lo * std::exp(step * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

namespace {

const char* kCsvHeader =
    "theta,theta_alpha,theta_beta,l_alpha_star,l_beta_star,d,l_beta_plus,"
    "l_alpha_minus,gap_alpha,gap_beta,dist_to_minimum,x,y,re_z,im_z";

std::string format_field(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void recheck_record(const SweepRecord& r, double tol_scale) {
  double sa = std::sinh(r.l_alpha_star / 2.0);
  double sb = std::sinh(r.l_beta_star / 2.0);
  double closing = std::cosh(r.d) * sa * sb - 1.0;
  double side_beta = std::cosh(r.d) * sb - std::sinh(r.l_beta_plus / 2.0);
  double side_alpha = std::tanh(r.l_beta_star / 2.0) * std::sinh(r.d) -
                      std::tan(r.theta_alpha / 2.0);
  if (std::abs(closing) > 1e-10 * tol_scale ||
      std::abs(side_beta) > 1e-9 * tol_scale ||
      std::abs(side_alpha) > 1e-9 * tol_scale)
    fail("InconsistentInputs", "sweep record fails its internal relations");
}

}  // namespace

void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out,
                     double tol_scale) {
  out << kCsvHeader << "\n";
  for (const SweepRecord& r : records) {
    recheck_record(r, tol_scale);
    const double fields[] = {r.theta,      r.theta_alpha,     r.theta_beta,
                             r.l_alpha_star, r.l_beta_star,   r.d,
                             r.l_beta_plus,  r.l_alpha_minus, r.gap_alpha,
                             r.gap_beta,   r.dist_to_minimum, r.x,
                             r.y,          r.re_z,            r.im_z};
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      if (i) out << ',';
      out << format_field(fields[i]);
    }
    out << "\n";
  }
  if (!out) fail("IoError", "failed while writing CSV stream");
}

void write_sweep_csv(const std::vector<SweepRecord>& records, const std::string& path,
                     double tol_scale) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("IoError", "cannot open " + path + " for writing");
  write_sweep_csv(records, out, tol_scale);
  out.flush();
  if (!out) fail("IoError", "failed while writing " + path);
}

}  // namespace qfb::lab
