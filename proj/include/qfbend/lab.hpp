#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qfbend/bendsolve.hpp"
#include "qfbend/minima.hpp"
#include "qfbend/ptorus.hpp"

namespace qfb::lab {

// One row of a sweep table. Fields appear in CSV column order.
struct SweepRecord {
  double theta = 0.0;        // sweep parameter
  double theta_alpha = 0.0;  // bending angle of alpha
  double theta_beta = 0.0;   // bending angle of beta
  double l_alpha_star = 0.0;
  double l_beta_star = 0.0;
  double d = 0.0;            // axis separation
  double l_beta_plus = 0.0;
  double l_alpha_minus = 0.0;
  double gap_alpha = 0.0;    // |l_alpha+ - l_alpha-|
  double gap_beta = 0.0;     // |l_beta+ - l_beta-|
  double dist_to_minimum = 0.0;  // sum of pleating-length residuals, NaN if unset
  double x = 0.0;            // tr A
  double y = 0.0;            // tr B
  double re_z = 0.0;         // re tr AB
  double im_z = 0.0;         // im tr AB
};

// Least-squares line through (log x_i, log y_i).
struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
  int n_points = 0;  // always >= 5
};

// Raster window and refinement controls for limit-set images.
struct WindowRect {
  double re_min = -2.0, re_max = 2.0;
  double im_min = -2.0, im_max = 2.0;
};

struct ImageSpec {
  int width = 800;
  int height = 800;
  WindowRect window;
  int max_depth = 12;
  double epsilon = 1e-3;  // chordal refinement cutoff
};

// Full record for bending angles (a theta, b theta). dist_to_minimum is
// filled against the weighted minimum when one is supplied.
SweepRecord make_record(const minima::Weights& w, double theta,
                        const minima::MinimumReport* minimum);

// Records over a theta grid, residuals against kerckhoff_minimum(w).
// Grid entries must be positive and yield feasible angles; failures are
// rethrown with the offending theta in the message.
std::vector<SweepRecord> sweep_theta(const minima::Weights& w,
                                     const std::vector<double>& theta_grid);

// Drifting-weight diagonal: at index n the angles are
// (a (1 + 1/n) theta_n, b (1 - 1/(2n)) theta_n) with theta_n = 1 / n^2,
// compared against the fixed limit minimum for (a, b).
std::vector<SweepRecord> diagonal_sweep(const minima::Weights& w,
                                        const std::vector<int>& n_grid);

// Sweep along theta_beta = theta_alpha^k, k > 1, with the slope of
// log sinh(l_beta*/2) against log theta_alpha, which tends to 1 - k.
struct DivergenceResult {
  std::vector<SweepRecord> records;
  SlopeFit fit;
  double cosh_d_minus_one_at_min_theta = 0.0;
};

DivergenceResult divergence_sweep(const std::vector<double>& theta_grid, double k);

// Power-law fit: ordinary least squares on (log x_i, log y_i). Errors:
// InsufficientPoints (fewer than 5 points or mismatched sizes),
// NonPositiveData (any coordinate not strictly positive).
SlopeFit fit_slope(const std::vector<double>& xs, const std::vector<double>& ys);

// n log-spaced points from lo to hi inclusive, lo, hi > 0.
std::vector<double> log_spaced(double lo, double hi, int n);

// Limit-set point cloud: attracting fixed points of all reduced words
// visited by a depth-first refinement that descends while the images of a
// seed configuration stay more than epsilon apart in the chordal metric.
// Only points inside the window are returned, in traversal order.
std::vector<std::complex<double>> enumerate_limit_points(const ptorus::MarkedGroup& g,
                                                         const ImageSpec& spec);

// Binary 8-bit PPM (P6) raster of the point cloud, black on white,
// byte-deterministic for fixed inputs. Errors: EmptyWindow when no point
// lands inside the window, IoError on write failure.
void render_limit_set(const ptorus::MarkedGroup& g, const ImageSpec& spec,
                      const std::string& path);

// CSV with a fixed header, one row per record, 17 significant digits,
// newline-terminated. Each row is re-checked against the internal
// relations (closing relation to 1e-10, side relations to 1e-9, scaled by
// tol_scale). Errors: InconsistentInputs, IoError.
void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out,
                     double tol_scale = 1.0);
void write_sweep_csv(const std::vector<SweepRecord>& records, const std::string& path,
                     double tol_scale = 1.0);

// Command line entry point (subcommands solve, sweep, diverge, diagonal,
// minimize, line, render, verify). Returns 0 on success, 1 on computation
// errors, 2 on usage errors.
int cli_main(int argc, char** argv);

}  // namespace qfb::lab
