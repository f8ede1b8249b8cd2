#include "sphres/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sphres/errors.hpp"

namespace sphres {
namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw NonPositiveInput(std::string(what) + " must be positive");
}

double threshold_defect(double kappa_r) {
  const double beta = 1.0 + 0.5 * std::numbers::e * std::sqrt(1.0 + 2.0 / kappa_r);
  const double s = 2.0 * beta * kappa_r;
  return s * s - 3.0;
}

}  // namespace

double morawetz_gap(double diam) {
  if (!(diam > 0.0)) throw NonPositiveInput("NonPositiveDiameter: diameter must be positive");
  return 1.0 / (4.0 * diam);
}

double ralston_gap(double diam) {
  if (!(diam > 0.0)) throw NonPositiveInput("NonPositiveDiameter: diameter must be positive");
  return 2.0 / diam;
}

double fl_beta(double kappa, double radius) {
  require_positive(kappa, "kappa");
  require_positive(radius, "radius");
  return 1.0 + 0.5 * std::numbers::e * std::sqrt(1.0 + 2.0 / (kappa * radius));
}

bool fl_nontrivial(double kappa, double radius) {
  const double s = 2.0 * fl_beta(kappa, radius) * kappa * radius;
  return s * s < 3.0;
}

double fl_threshold(double radius) {
  require_positive(radius, "radius");
  double lo = 1e-6;
  double hi = 1.0;
  if (!(threshold_defect(lo) < 0.0 && threshold_defect(hi) > 0.0))
    throw BracketFailure("threshold not bracketed on (1e-6, 1)");
  // The defect is increasing in kappa R; bisect to machine resolution.
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (threshold_defect(mid) < 0.0 ? lo : hi) = mid;
  }
  const double kr = std::abs(threshold_defect(lo)) < std::abs(threshold_defect(hi)) ? lo : hi;
  return kr / radius;
}

double fl_asymptote(double radius) {
  require_positive(radius, "radius");
  return 1.0 / ((2.0 + std::numbers::e) * radius);
}

BoundCurve bounds_table(double radius, double kappa_min, double kappa_max, double step) {
  require_positive(radius, "radius");
  require_positive(kappa_min, "kappa_min");
  require_positive(step, "step");
  if (!(kappa_min < kappa_max)) throw DomainError("kappa_min must be below kappa_max");
  BoundCurve curve{radius, {}};
  const double diam = 2.0 * radius;
  const double gap_r = ralston_gap(diam);
  const double gap_m = morawetz_gap(diam);
  const double asym = fl_asymptote(radius);
  for (long k = 0;; ++k) {
    const double kappa = kappa_min + static_cast<double>(k) * step;
    if (kappa > kappa_max + 1e-9 * step) break;
    curve.samples.push_back({kappa, gap_r, gap_m, asym, fl_nontrivial(kappa, radius)});
  }
  return curve;
}

}  // namespace sphres
