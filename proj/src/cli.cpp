#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfbend/acceptance.hpp"
#include "qfbend/errors.hpp"
#include "qfbend/lab.hpp"
#include "qfbend/minima.hpp"
#include "qfbend/quakebend.hpp"

namespace qfb::lab {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> parse_doubles(const std::string& text, std::size_t count,
                                  const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      fail("NonPositiveData", what + " expects comma-separated numbers");
    }
  }
  if (out.size() != count) {
    std::ostringstream msg;
    msg << what << " expects exactly " << count << " comma-separated numbers";
    fail("NonPositiveData", msg.str());
  }
  return out;
}

void emit_csv(const std::vector<SweepRecord>& records, const std::string& out_path,
              double tol_scale) {
  if (out_path.empty())
    write_sweep_csv(records, std::cout, tol_scale);
  else
    write_sweep_csv(records, out_path, tol_scale);
}

std::vector<int> integer_log_grid(int lo, int hi, int n) {
  if (lo < 1 || hi < lo) fail("NonPositiveData", "need 1 <= n-min <= n-max");
  std::vector<int> out;
  for (double v : log_spaced(lo, hi, n)) {
    int k = static_cast<int>(std::lround(v));
    if (out.empty() || k > out.back()) out.push_back(k);
  }
  return out;
}

struct CliOptions {
  std::uint64_t seed = 20250824;
  double tol = 1.0;
  int grid = 20;
  std::string out_path;

  double theta_alpha = 0.0, theta_beta = 0.0;
  double a = 1.0, b = 1.0;
  double theta_min = 1e-3, theta_max = 1e-1;
  double k = 1.5;
  int n_min = 10, n_max = 10000;
  double t_min = 0.25, t_max = 4.0;
  std::string triple_text, window_text = "-2,2,-2,2";
  int width = 800, height = 800, depth = 12;
  double epsilon = 1e-3;
};

int run_solve(const CliOptions& opt) {
  minima::Weights w(opt.theta_alpha, opt.theta_beta);
  SweepRecord r = make_record(w, 1.0, nullptr);
  std::cout << "theta_alpha   " << fmt(r.theta_alpha) << "\n"
            << "theta_beta    " << fmt(r.theta_beta) << "\n"
            << "l_alpha_star  " << fmt(r.l_alpha_star) << "\n"
            << "l_beta_star   " << fmt(r.l_beta_star) << "\n"
            << "d             " << fmt(r.d) << "\n"
            << "l_beta_plus   " << fmt(r.l_beta_plus) << "\n"
            << "l_alpha_minus " << fmt(r.l_alpha_minus) << "\n"
            << "gap_alpha     " << fmt(r.gap_alpha) << "\n"
            << "gap_beta      " << fmt(r.gap_beta) << "\n"
            << "tr_A          " << fmt(r.x) << "\n"
            << "tr_B          " << fmt(r.y) << "\n"
            << "tr_AB         " << fmt(r.re_z) << " + " << fmt(r.im_z) << "i\n";
  if (!opt.out_path.empty()) emit_csv({r}, opt.out_path, opt.tol);
  return 0;
}

int run_sweep(const CliOptions& opt) {
  minima::Weights w(opt.a, opt.b);
  std::vector<double> grid = log_spaced(opt.theta_min, opt.theta_max, opt.grid);
  std::vector<SweepRecord> records = sweep_theta(w, grid);
  std::vector<double> theta, d_vals;
  for (const SweepRecord& r : records) {
    theta.push_back(r.theta);
    d_vals.push_back(r.d);
  }
  SlopeFit fit = fit_slope(theta, d_vals);
  std::cerr << "records " << records.size() << ", slope of log d vs log theta "
            << fmt(fit.slope) << " (r^2 " << fmt(fit.r_squared) << ")\n";
  emit_csv(records, opt.out_path, opt.tol);
  return 0;
}

int run_diverge(const CliOptions& opt) {
  std::vector<double> grid = log_spaced(opt.theta_min, opt.theta_max, opt.grid);
  DivergenceResult res = divergence_sweep(grid, opt.k);
  std::cerr << "slope of log sinh(l_beta*/2) vs log theta_alpha " << fmt(res.fit.slope)
            << " (expected " << fmt(1.0 - opt.k) << ", r^2 " << fmt(res.fit.r_squared)
            << ")\n"
            << "cosh d - 1 at theta_alpha = " << fmt(grid.front()) << ": "
            << fmt(res.cosh_d_minus_one_at_min_theta) << "\n";
  emit_csv(res.records, opt.out_path, opt.tol);
  return 0;
}

int run_diagonal(const CliOptions& opt) {
  minima::Weights w(opt.a, opt.b);
  std::vector<int> ns = integer_log_grid(opt.n_min, opt.n_max, opt.grid);
  std::vector<SweepRecord> records = diagonal_sweep(w, ns);
  std::cerr << "records " << records.size() << ", dist_to_minimum from "
            << fmt(records.front().dist_to_minimum) << " to "
            << fmt(records.back().dist_to_minimum) << "\n";
  emit_csv(records, opt.out_path, opt.tol);
  return 0;
}

int run_minimize(const CliOptions& opt) {
  minima::Weights w(opt.a, opt.b);
  minima::MinimumReport rep = minima::kerckhoff_minimum(w);
  std::cout << "x            " << fmt(rep.point.x) << "\n"
            << "y            " << fmt(rep.point.y) << "\n"
            << "l_alpha      " << fmt(rep.l_alpha) << "\n"
            << "l_beta       " << fmt(rep.l_beta) << "\n"
            << "value        " << fmt(rep.value) << "\n"
            << "criticality  " << fmt(rep.criticality) << "\n";
  return 0;
}

int run_line(const CliOptions& opt) {
  minima::Weights w(opt.a, opt.b);
  std::vector<double> ts = log_spaced(opt.t_min, opt.t_max, opt.grid);
  std::vector<minima::MinimumReport> reports = minima::line_of_minima(w, ts);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path, std::ios::binary);
    if (!file) fail("IoError", "cannot open " + opt.out_path + " for writing");
    out = &file;
  }
  *out << "t,x,y,l_alpha,l_beta,value,criticality\n";
  char buf[40];
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const minima::MinimumReport& rep = reports[i];
    const double fields[] = {ts[i],         rep.point.x, rep.point.y, rep.l_alpha,
                             rep.l_beta, rep.value,   rep.criticality};
    for (std::size_t j = 0; j < std::size(fields); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", fields[j]);
      if (j) *out << ',';
      *out << buf;
    }
    *out << "\n";
  }
  if (!*out) fail("IoError", "failed while writing line-of-minima table");
  return 0;
}

int run_render(const CliOptions& opt) {
  if (opt.out_path.empty()) fail("IoError", "render requires --out");
  std::vector<double> win = parse_doubles(opt.window_text, 4, "--window");
  ImageSpec spec;
  spec.width = opt.width;
  spec.height = opt.height;
  spec.window = WindowRect{win[0], win[1], win[2], win[3]};
  spec.max_depth = opt.depth;
  spec.epsilon = opt.epsilon;

  ptorus::MarkedGroup g;
  if (!opt.triple_text.empty()) {
    std::vector<double> t = parse_doubles(opt.triple_text, 3, "--triple");
    g = ptorus::group_from_triple(
        ptorus::TraceTriple{t[0], t[1], t[2]});
  } else {
    g = bend::group_from_bending(
        bend::BendingAngles(opt.theta_alpha, opt.theta_beta));
  }
  render_limit_set(g, spec, opt.out_path);
  std::cerr << "wrote " << opt.out_path << "\n";
  return 0;
}

int run_verify(const CliOptions& opt) {
  return acceptance::run_and_report(std::cout, opt.seed);
}

}  // namespace

int cli_main(int argc, char** argv) {
  CliOptions opt;
  CLI::App app{"numerical laboratory for bent punctured-torus groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.add_option("--seed", opt.seed, "seed for randomized verification");
  app.add_option("--tol", opt.tol, "scale factor for serialization re-checks");

  CLI::App* solve = app.add_subcommand("solve", "solve one pair of bending angles");
  solve->add_option("--theta-alpha", opt.theta_alpha)->required();
  solve->add_option("--theta-beta", opt.theta_beta)->required();
  solve->add_option("--out", opt.out_path, "write the record as CSV");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep theta for weights (a, b)");
  sweep->add_option("--a", opt.a)->required();
  sweep->add_option("--b", opt.b)->required();
  sweep->add_option("--theta-min", opt.theta_min);
  sweep->add_option("--theta-max", opt.theta_max);
  sweep->add_option("--grid", opt.grid, "number of grid points");
  sweep->add_option("--out", opt.out_path, "CSV path (default stdout)");

  CLI::App* diverge =
      app.add_subcommand("diverge", "sweep theta_beta = theta_alpha^k");
  diverge->add_option("--k", opt.k)->required();
  diverge->add_option("--theta-min", opt.theta_min);
  diverge->add_option("--theta-max", opt.theta_max);
  diverge->add_option("--grid", opt.grid);
  diverge->add_option("--out", opt.out_path);

  CLI::App* diagonal =
      app.add_subcommand("diagonal", "drifting-weight diagonal toward the minimum");
  diagonal->add_option("--a", opt.a)->required();
  diagonal->add_option("--b", opt.b)->required();
  diagonal->add_option("--n-min", opt.n_min);
  diagonal->add_option("--n-max", opt.n_max);
  diagonal->add_option("--grid", opt.grid);
  diagonal->add_option("--out", opt.out_path);

  CLI::App* minimize = app.add_subcommand("minimize", "weighted length minimum");
  minimize->add_option("--a", opt.a)->required();
  minimize->add_option("--b", opt.b)->required();

  CLI::App* line = app.add_subcommand("line", "line of minima for scaled weights");
  line->add_option("--a", opt.a)->required();
  line->add_option("--b", opt.b)->required();
  line->add_option("--t-min", opt.t_min);
  line->add_option("--t-max", opt.t_max);
  line->add_option("--grid", opt.grid);
  line->add_option("--out", opt.out_path);

  CLI::App* render = app.add_subcommand("render", "write a limit-set image (PPM)");
  render->add_option("--theta-alpha", opt.theta_alpha);
  render->add_option("--theta-beta", opt.theta_beta);
  render->add_option("--triple", opt.triple_text, "real traces x,y,z");
  render->add_option("--window", opt.window_text, "re_min,re_max,im_min,im_max");
  render->add_option("--width", opt.width);
  render->add_option("--height", opt.height);
  render->add_option("--depth", opt.depth, "maximum word length");
  render->add_option("--epsilon", opt.epsilon, "chordal refinement cutoff");
  render->add_option("--out", opt.out_path)->required();

  CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
  (void)verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: UsageError: " << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (diverge->parsed()) return run_diverge(opt);
    if (diagonal->parsed()) return run_diagonal(opt);
    if (minimize->parsed()) return run_minimize(opt);
    if (line->parsed()) return run_line(opt);
    if (render->parsed()) return run_render(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: UsageError: no subcommand selected\n";
  return 2;
}

}  // namespace qfb::lab
