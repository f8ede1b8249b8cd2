#pragma once

// First variation of the resonance at -i of the unit ball in R^3 under a
// normal boundary deformation r = 1 + eps C(theta, phi).
//
// Coordinates on S^2: azimuth theta in [0, 2 pi), latitude phi in [-pi/2, pi/2],
//   X_1 = sin phi,  X_2 = cos phi sin theta,  X_3 = cos phi cos theta,
// so that X is the restriction of the Cartesian coordinates and |X| = 1.
// The threefold resonance moves according to the eigenvalues of
//   M_ij = (3 / 2 pi) int_{S^2} C X_i X_j dvol.

#include <array>
#include <complex>
#include <functional>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "sphres/identities.hpp"

namespace sphres {

struct SphericalHarmonicTerm {
  int l = 0;
  int m = 0;
  double value = 0.0;
};

/// Sum of real orthonormal spherical harmonics; see real_spherical_harmonic.
struct HarmonicExpansion {
  std::vector<SphericalHarmonicTerm> terms;
};

/// Samples on the quadrature grid: azimuths theta_k = 2 pi k / n_theta and
/// latitudes phi_i = asin(s_i) with s_i the n_phi Gauss-Legendre nodes.
/// values[i * n_theta + k] is C(theta_k, phi_i).
struct GridSamples {
  int n_theta = 0;
  int n_phi = 0;
  std::vector<double> values;
};

/// C as a function of the point X on S^2.
struct SurfaceFunction {
  std::function<double(const Eigen::Vector3d&)> fn;
};

struct NormalVariation {
  std::variant<HarmonicExpansion, GridSamples, SurfaceFunction> representation;
  /// Claims the deformation keeps the obstacle inside B(0, 1), i.e. C <= 0.
  bool diameter_constrained = true;

  static NormalVariation uniform();                                 // C = -1
  static NormalVariation translation(const Eigen::Vector3d& shift);  // C = shift . X
  static NormalVariation squash();                                  // C = -X_3^2
  static NormalVariation from_function(std::function<double(const Eigen::Vector3d&)> fn,
                                       bool constrained = true);
};

/// Orthonormal real spherical harmonic with polar axis X_1 and azimuth theta
/// measured from X_3 towards X_2, without the Condon-Shortley factor (-1)^m:
///   m = 0: N_l0 P_l(X_1),  m > 0: sqrt2 N_lm P_l^m(X_1) cos(m theta),
///   m < 0: sqrt2 N_l|m| P_l^|m|(X_1) sin(|m| theta),
/// where P_l^m(x) = (1 - x^2)^{m/2} d^m/dx^m P_l(x).
double real_spherical_harmonic(int l, int m, const Eigen::Vector3d& x);

Eigen::Vector3d sphere_point(double theta, double phi);

struct SphereQuadrature {
  std::vector<Eigen::Vector3d> points;
  std::vector<double> weights;  // sum = 4 pi
};

/// Gauss-Legendre in sin(phi) with `order` nodes times the trapezoid rule in
/// theta with `n_theta` points (2 * order if zero).
SphereQuadrature sphere_quadrature(int order, int n_theta = 0);

/// Values of C on the nodes of sphere_quadrature(order); a grid representation
/// supplies its own nodes and ignores `order`.
struct SampledVariation {
  SphereQuadrature quad;
  std::vector<double> values;
};
SampledVariation sample(const NormalVariation& c, int order);

struct VariationMatrix {
  Eigen::Matrix3d entries = Eigen::Matrix3d::Zero();
  int quad_order = 0;
};

/// M_ij = (3/2pi) int C X_i X_j; throws InvalidGrid for malformed grids or order < 8.
VariationMatrix variation_matrix(const NormalVariation& c, int quad_order = 64);

/// (3/2pi) int C, which equals tr M.
double trace_integral(const NormalVariation& c, int quad_order = 64);

/// Ascending eigenvalues of a symmetric 3x3 matrix: trigonometric solution of
/// the characteristic cubic, then a Rayleigh quotient for the most isolated
/// root and the 2x2 block on its complement, which keeps repeated eigenvalues
/// accurate to rounding.
Eigen::Vector3d eigenvalues(const Eigen::Matrix3d& m);
inline Eigen::Vector3d eigenvalues(const VariationMatrix& m) { return eigenvalues(m.entries); }

/// delta lambda = (i/2) eps mu: first-order motion of -i when z = lambda^2 moves by eps mu.
std::complex<double> resonance_shift(double mu, double eps);

struct DefinitenessReport {
  bool semidefinite = false;
  bool strictly = false;
  Eigen::Vector3d eigenvalues = Eigen::Vector3d::Zero();
};

/// Throws SignViolation if C exceeds 1e-12 at any node.
DefinitenessReport definiteness_report(const NormalVariation& c, int quad_order = 64);

struct RadialNormReport {
  IdentityReport boundary;             // (4pi/3)(-F(1)) against 2 pi e^2 / 3
  double max_antiderivative_error = 0.0;  // relative, over 50 points in [1, 5]
  double normalization = 0.0;          // A = sqrt(3 / (2 pi e^2))
  bool passed = false;
};

/// Checks d/dr[(2r)^{-1} e^{2r} (r-2)] = r^{-2} e^{2r} (r-1)^2 by complex-step
/// differentiation and the resulting boundary constant 2 pi e^2 / 3.
RadialNormReport radial_norm_check();

}  // namespace sphres
