#pragma once

#include <vector>

#include <Eigen/Core>

#include "sphres/bessel_poly.hpp"

namespace sphres {

/// All roots of a polynomial, with scaled residuals
/// |p(z)| / (max_j |a_j| * max(1, |z|)^degree).
struct RootSet {
  Eigen::VectorXcd roots;
  Eigen::VectorXd residuals;
  int iterations = 0;

  Eigen::Index size() const { return roots.size(); }
  double max_residual() const { return residuals.size() ? residuals.maxCoeff() : 0.0; }
};

struct RootOptions {
  double tol = 1e-13;
  int max_iter = 200;
  double residual_threshold = 1e-10;
  double vieta_tol = 1e-9;
};

/// Aberth-Ehrlich simultaneous iteration on the polynomial rescaled by
/// lambda = rho * mu. Throws DegenerateInput for a zero leading coefficient or
/// degree < 1, NonConvergence if residuals stay above threshold.
RootSet roots(const ComplexPoly& p, const RootOptions& opts = {});

/// Degrees up to which the exact-coefficient overload stops at double and at
/// 113-bit precision; above the second limit it refines with 50 digits.
inline constexpr int kDoubleDegreeLimit = 10;
inline constexpr int kQuadDegreeLimit = 32;

/// Decimal digits of working precision used for a polynomial of this degree.
int working_digits(int degree);

/// Roots of sum_j coeffs[j] lambda^j for exactly known Gaussian-integer
/// coefficients. A double pass supplies starting values, which are refined in
/// working_digits(degree) digits and rounded; residuals and the Vieta check are
/// then evaluated on the double polynomial.
RootSet roots(const std::vector<GaussianInt>& coeffs, const RootOptions& opts = {});

/// Scale used by roots(): geometric mean of the root moduli, |a_0 / a_k|^{1/k},
/// or the Cauchy bound 1 + max_j |a_j / a_k| when a_0 vanishes.
double root_radius_estimate(const ComplexPoly& p);

double cauchy_bound(const ComplexPoly& p);

double scaled_residual(const ComplexPoly& p, const Complex& z);

/// True iff the root multiset is closed under lambda -> -conj(lambda), matched
/// within tol (absolute).
bool reflect_symmetry_check(const RootSet& rs, double tol = 1e-9);

/// |sum roots + a_{k-1}/a_k| relative to 1 + |a_{k-1}/a_k|.
double vieta_defect(const ComplexPoly& p, const RootSet& rs);

}  // namespace sphres
