#include "sphres/bessel_poly.hpp"

#include <cmath>
#include <sstream>

#include "sphres/errors.hpp"

namespace sphres {
namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

void require_nonnegative(int k) {
  if (k < 0) throw DomainError("polynomial index must be non-negative, got " + std::to_string(k));
}

double to_double(const BigInt& n) { return n.convert_to<double>(); }

}  // namespace

BigInt ReverseBesselPoly::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double ReverseBesselPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

BigInt double_factorial_odd(int k) {
  require_nonnegative(k);
  BigInt r = 1;
  for (int j = 3; j <= 2 * k - 1; j += 2) r *= j;
  return r;
}

ReverseBesselPoly theta_poly(int k) {
  require_nonnegative(k);
  std::vector<BigInt> prev{1};        // theta_0
  if (k == 0) return {0, prev};
  std::vector<BigInt> cur{1, 1};      // theta_1
  for (int n = 2; n <= k; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j] += (2 * n - 1) * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j + 2] += prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {k, cur};
}

std::vector<GaussianInt> p_poly_scaled_exact(int k) {
  require_nonnegative(k);
  // Coefficient of lambda^{k-m}: (i/2)^m (k+m)!/(m!(k-m)!); times 2^k gives
  // i^m 2^{k-m} (k+m)!/(m!(k-m)!), an exact Gaussian integer.
  std::vector<GaussianInt> out(static_cast<std::size_t>(k) + 1);
  for (int m = 0; m <= k; ++m) {
    BigInt mag = factorial(k + m) / (factorial(m) * factorial(k - m));
    mag <<= (k - m);
    GaussianInt& c = out[static_cast<std::size_t>(k - m)];
    switch (m % 4) {
      case 0: c = {mag, 0}; break;
      case 1: c = {0, mag}; break;
      case 2: c = {-mag, 0}; break;
      default: c = {0, -mag}; break;
    }
  }
  return out;
}

ComplexPoly p_poly(int k) {
  const auto exact = p_poly_scaled_exact(k);
  ComplexPoly p;
  p.coeffs.resize(k + 1);
  for (int j = 0; j <= k; ++j) {
    const auto& c = exact[static_cast<std::size_t>(j)];
    p.coeffs[j] = Complex(std::ldexp(to_double(c.re), -k), std::ldexp(to_double(c.im), -k));
  }
  return p;
}

Poly<double> theta_as_double(const ReverseBesselPoly& theta) {
  Poly<double> p;
  p.coeffs.resize(theta.degree + 1);
  for (int j = 0; j <= theta.degree; ++j) p.coeffs[j] = to_double(theta.coeffs[static_cast<std::size_t>(j)]);
  return p;
}

EquivalenceReport p_theta_equivalence(int k_max) {
  if (k_max > 30) throw DomainError("p_theta_equivalence supports k_max <= 30");
  EquivalenceReport report;
  for (int k = 0; k <= k_max; ++k) {
    const auto lhs = p_poly_scaled_exact(k);
    const auto theta = theta_poly(k);
    for (int j = 0; j <= k; ++j) {
      // i^k theta_k(-i lambda) has lambda^j coefficient i^k (-i)^j c_j = i^{k-j} c_j
      // (as (-i)^j = i^{-j}); scale by 2^k to compare against lhs.
      BigInt mag = theta.coeffs[static_cast<std::size_t>(j)] << k;
      GaussianInt rhs;
      switch ((k - j) % 4) {
        case 0: rhs = {mag, 0}; break;
        case 1: rhs = {0, mag}; break;
        case 2: rhs = {-mag, 0}; break;
        default: rhs = {0, -mag}; break;
      }
      if (!(lhs[static_cast<std::size_t>(j)] == rhs)) {
        std::ostringstream msg;
        msg << "mismatch at k=" << k << ", coefficient of lambda^" << j;
        report.ok = false;
        report.failing_k = k;
        report.failing_index = j;
        report.message = msg.str();
        return report;
      }
    }
    report.checked_up_to = k;
  }
  report.message = "p_k = i^k theta_k(-i lambda) holds for k <= " + std::to_string(k_max);
  return report;
}

}  // namespace sphres
