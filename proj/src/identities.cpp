#include "sphres/identities.hpp"

#include <cmath>
#include <limits>

#include "sphres/errors.hpp"
#include "sphres/quadrature.hpp"

namespace sphres {
namespace {

constexpr double kBoundaryTol = 1e-8;
constexpr double kRejectTol = 1e-6;

// Coefficient vectors (ascending in s) of
//   0: -(r v)' / s^2 = sum m b_m s^{m-1}      (integrand |.|^2 s)
//   1: -v' / s^2     = sum (m+1) b_m s^m      (integrand |.|^2)
//   2: v / s         = sum b_m s^m            (integrand l(l+1)|.|^2)
Eigen::VectorXcd integrand_poly(const RadialState& st, int which) {
  const Eigen::Index n = st.coeffs.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    switch (which) {
      case 0:
        if (m > 0) out[m - 1] = static_cast<double>(m) * st.coeffs[m];
        break;
      case 1: out[m] = static_cast<double>(m + 1) * st.coeffs[m]; break;
      default: out[m] = st.coeffs[m]; break;
    }
  }
  return out;
}

}  // namespace

Complex RadialState::value(double r) const { return horner(coeffs, Complex(1.0 / r)) / r; }

Complex RadialState::derivative(double r) const {
  Complex acc = 0.0;
  for (Eigen::Index m = coeffs.size() - 1; m >= 0; --m)
    acc = acc / r - static_cast<double>(m + 1) * coeffs[m];
  return acc / (r * r);
}

Eigen::VectorXcd outgoing_coefficients(int ell, Complex lambda) {
  if (ell < 0) throw DomainError("angular momentum must be non-negative");
  if (lambda == Complex(0.0)) throw DomainError("lambda must be non-zero");
  Eigen::VectorXcd b(ell + 1);
  const Complex half_i(0.0, 0.5);
  for (int m = 0; m <= ell; ++m) {
    BigInt c = 1;
    for (int j = ell - m + 1; j <= ell + m; ++j) c *= j;  // (ell+m)!/(ell-m)!
    BigInt mf = 1;
    for (int j = 2; j <= m; ++j) mf *= j;
    const double mag = (c / mf).convert_to<double>();
    b[m] = std::pow(half_i, m) * mag * std::pow(lambda, -m);
  }
  return b;
}

RadialState build_resonant_state(int ell, Complex lambda) {
  RadialState st{ell, lambda, outgoing_coefficients(ell, lambda), 1.0};
  double boundary = std::abs(st.value(1.0));
  if (!(boundary <= kRejectTol))
    throw NotAResonance("|v(1)| = " + std::to_string(boundary) + " for ell=" + std::to_string(ell));
  if (boundary > kBoundaryTol) {
    const ComplexPoly p = p_poly(ell);
    for (int it = 0; it < 8 && boundary > kBoundaryTol; ++it) {
      const auto [val, der] = eval_with_derivative(p, st.lambda);
      st.lambda -= val / der;
      st.coeffs = outgoing_coefficients(ell, st.lambda);
      boundary = std::abs(st.value(1.0));
    }
    if (boundary > kBoundaryTol)
      throw NotAResonance("could not refine lambda to |v(1)| <= 1e-8 for ell=" + std::to_string(ell));
  }
  return st;
}

Complex radial_integrand(const RadialState& state, int which, double s) {
  return horner(integrand_poly(state, which), Complex(s));
}

RadialIntegrals radial_integrals(const RadialState& state, int nodes) {
  const int n = nodes > 0 ? nodes : state.ell + 2;
  const auto rule = GaussLegendre(n).mapped(0.0, 1.0);
  const Eigen::VectorXcd p0 = integrand_poly(state, 0);
  const Eigen::VectorXcd p1 = integrand_poly(state, 1);
  const Eigen::VectorXcd p2 = integrand_poly(state, 2);
  const double ang = static_cast<double>(state.ell) * (state.ell + 1);
  RadialIntegrals out;
  out.weighted_radial = rule.integrate([&](double s) { return std::norm(horner(p0, Complex(s))) * s; });
  out.dirichlet = rule.integrate(
      [&](double s) { return std::norm(horner(p1, Complex(s))) + ang * std::norm(horner(p2, Complex(s))); });
  out.boundary_flux = std::norm(state.derivative(1.0));
  return out;
}

IdentityReport mor2_check(const RadialState& state, double d) {
  if (!(d > 0.0)) throw NonPositiveInput("d must be positive");
  const auto I = radial_integrals(state);
  IdentityReport rep;
  rep.lhs = I.weighted_radial;
  rep.rhs = 2.0 * d * I.dirichlet;
  rep.ratio = rep.lhs / rep.rhs;
  rep.tolerance_used = 1e-10;
  rep.passed = rep.ratio <= 1.0 + rep.tolerance_used;
  return rep;
}

IdentityReport delv3_check(const RadialState& state) {
  const auto I = radial_integrals(state);
  IdentityReport rep;
  rep.lhs = -2.0 * state.lambda.imag() * I.weighted_radial;
  rep.rhs = 0.5 * I.dirichlet + 0.5 * I.boundary_flux;
  rep.ratio = rep.lhs / rep.rhs;
  rep.tolerance_used = 1e-8;
  rep.passed = std::abs(rep.lhs - rep.rhs) <= rep.tolerance_used * (std::abs(rep.lhs) + std::abs(rep.rhs));
  return rep;
}

IdentityReport theorem1_chain_check(const RadialState& state, double diam) {
  if (!(diam > 0.0)) throw NonPositiveInput("diameter must be positive");
  if (!(state.lambda.imag() < 0.0)) throw DomainError("chain inequality needs Im lambda < 0");
  const auto I = radial_integrals(state);
  IdentityReport rep;
  rep.lhs = 0.5 * I.boundary_flux;
  rep.rhs = 0.5 * (4.0 * std::abs(state.lambda.imag()) * diam - 1.0) * I.dirichlet;
  rep.ratio = rep.rhs != 0.0 ? rep.lhs / rep.rhs : std::numeric_limits<double>::infinity();
  rep.tolerance_used = 1e-10;
  rep.passed = rep.lhs <= rep.rhs + rep.tolerance_used;
  return rep;
}

}  // namespace sphres
