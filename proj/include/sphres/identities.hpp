#pragma once

#include <complex>

#include <Eigen/Core>

#include "sphres/bessel_poly.hpp"

namespace sphres {

/// Outgoing resonant profile of the unit sphere with the e^{i lambda r} factor
/// removed: v(r) = sum_{m=0}^{ell} b_m r^{-m-1}, where
/// b_m = (i/2)^m (ell+m)! / (m! (ell-m)!) lambda^{-m} and b_0 = 1.
/// The full state is v(r) Y(omega) with Y a real spherical harmonic of degree
/// ell normalized in L^2(S^2).
struct RadialState {
  int ell = 0;
  Complex lambda;
  Eigen::VectorXcd coeffs;  // b_0 .. b_ell
  double b0_scale = 1.0;

  Complex value(double r) const;
  Complex derivative(double r) const;
};

struct IdentityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double tolerance_used = 0.0;
  bool passed = false;
};

/// Exterior integrals of a state over r >= 1, reduced to s = 1/r in [0, 1]
/// where every integrand is a polynomial.
struct RadialIntegrals {
  double weighted_radial = 0.0;   // int |(r v)'|^2 r dr        = int_E r^{-1} |d_r(r v)|^2 dx
  double dirichlet = 0.0;         // int |v'|^2 r^2 + l(l+1)|v|^2 dr = int_E |grad v|^2 dx
  double boundary_flux = 0.0;     // |v'(1)|^2                  = int_{r=1} (x.n) |d_nu v|^2 dsigma
};

/// Outgoing-state coefficients for (ell, lambda) with b_0 = 1; no resonance check.
Eigen::VectorXcd outgoing_coefficients(int ell, Complex lambda);

/// Builds the state for a unit-sphere resonance. Throws NotAResonance when
/// |v(1)| > 1e-6; between 1e-8 and 1e-6 lambda is refined by Newton steps on
/// p_ell until |v(1)| <= 1e-8 (NotAResonance if that fails).
RadialState build_resonant_state(int ell, Complex lambda);

/// Gauss-Legendre evaluation; nodes = 0 picks ell + 2 (exact for the degree
/// 2 ell + 1 integrands).
RadialIntegrals radial_integrals(const RadialState& state, int nodes = 0);

/// Polynomials in s whose squared moduli (times s for the first) give the
/// integrands of RadialIntegrals; exposed for finiteness checks at s = 0.
Complex radial_integrand(const RadialState& state, int which, double s);

/// int r^{-1}|d_r(r v)|^2 <= 2 d int |grad v|^2; passes iff lhs/rhs <= 1 + 1e-10.
IdentityReport mor2_check(const RadialState& state, double d = 1.0);

/// -2 Im(lambda) int r^{-1}|d_r(r v)|^2 = 1/2 int |grad v|^2 + 1/2 int (x.n)|d_nu v|^2,
/// to relative tolerance 1e-8.
IdentityReport delv3_check(const RadialState& state);

/// 1/2 int (x.n)|d_nu v|^2 <= 1/2 (4 |Im lambda| diam - 1) int |grad v|^2, slack 1e-10.
IdentityReport theorem1_chain_check(const RadialState& state, double diam = 2.0);

}  // namespace sphres
