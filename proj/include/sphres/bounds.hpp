#pragma once

#include <vector>

namespace sphres {

/// Resonance-gap lower bounds in terms of obstacle diameter, and the
/// frequency-dependent Fernandez-Lavine data. kappa = Re lambda.

/// Morawetz: inf |Im lambda| > 1 / (4 diam).
double morawetz_gap(double diam);

/// Ralston: inf |Im lambda| >= 2 / diam; sharp for the ball when n = 3, 5.
double ralston_gap(double diam);

/// beta = 1 + (e/2) sqrt(1 + 2/(kappa R)).
double fl_beta(double kappa, double radius);

/// True iff (2 beta kappa R)^2 < 3.
bool fl_nontrivial(double kappa, double radius);

/// kappa at which (2 beta kappa R)^2 = 3, by bisection in kappa R over (1e-6, 1).
double fl_threshold(double radius);

/// High-frequency limit of the Fernandez-Lavine width, 1 / ((2 + e) R).
double fl_asymptote(double radius);

struct BoundRow {
  double kappa = 0.0;
  double ralston = 0.0;
  double morawetz = 0.0;
  double fl_asymptote = 0.0;
  bool fl_nontrivial = false;
};

/// Samples for an obstacle contained in B(0, R); diameter bounds use diam = 2R.
struct BoundCurve {
  double radius = 1.0;
  std::vector<BoundRow> samples;
};

/// kappa_k = kappa_min + k * step for every kappa_k <= kappa_max (+ 1e-9 step slack).
BoundCurve bounds_table(double radius, double kappa_min, double kappa_max, double step);

}  // namespace sphres
