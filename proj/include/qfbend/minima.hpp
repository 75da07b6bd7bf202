#pragma once

#include <vector>

#include "qfbend/ptorus.hpp"

namespace qfb::minima {

// Positive weights of the length combination a l_alpha + b l_beta.
// Errors: NonPositiveData on construction.
struct Weights {
  double a = 1.0;
  double b = 1.0;

  Weights(double wa, double wb);
};

// Minimizer of the weighted length over the Fuchsian markings.
struct MinimumReport {
  ptorus::FuchsianPoint point;
  double l_alpha = 0.0;
  double l_beta = 0.0;
  double value = 0.0;        // a l_alpha + b l_beta at the minimum
  double criticality = 0.0;  // largest weighted earthquake derivative
};

double length_value(const ptorus::FuchsianPoint& p, const Weights& w);

// Global minimum of a l_alpha + b l_beta over Fuchsian markings. The
// minimum lies on the locus where the two Markov roots collide (the
// discriminant zero set), reducing the search to a bracketed scalar
// minimization in l_alpha; the bracket is polished with a derivative-sign
// bisection using centered differences. Errors: NoBracket.
MinimumReport kerckhoff_minimum(const Weights& w);

// Minima of a l_alpha + (t b) l_beta for each t in the grid: the line of
// minima traced out by scaling one weight. Errors: NonPositiveData for
// non-positive grid entries.
std::vector<MinimumReport> line_of_minima(const Weights& w, const std::vector<double>& t_grid);

// Compares the small-bending core geometry at angles (a theta, b theta)
// against the weighted minimum: residual is the total difference of the
// two pleating lengths from the minimizing lengths, d the axis separation.
struct LimitResidual {
  double residual = 0.0;
  double d = 0.0;
};

LimitResidual limit_matches_minimum(const Weights& w, double theta);

}  // namespace qfb::minima
