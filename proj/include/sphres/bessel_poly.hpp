#pragma once

// Resonance polynomials of the ball in odd dimensions.
//
// For the unit ball in R^n, n odd, resonances with angular momentum l are the
// zeros of p_k with k = l + (n-3)/2, where
//
//     p_k(lambda) = sum_{m=0}^{k} (i/2)^m (k+m)! / (m! (k-m)!) lambda^{k-m}.
//
// The printed form of this sum is sometimes given with (m-k)! in the
// denominator; that factorial is undefined for m < k, so (k-m)! is used here.
// This reading is the one under which p_1(lambda) = lambda + i.
//
// The exact, integer-coefficient object is the reverse Bessel polynomial
// theta_k, related by p_k(lambda) = i^k theta_k(-i lambda).

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace sphres {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// theta_k(x) = sum_j coeffs[j] x^j with exact integer coefficients.
struct ReverseBesselPoly {
  int degree = 0;
  std::vector<BigInt> coeffs;  // ascending powers, size degree + 1

  BigInt operator()(const BigInt& x) const;
  double operator()(double x) const;
};

/// Dense polynomial with complex double coefficients in ascending powers.
template <typename Scalar>
struct Poly {
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Coeffs coeffs;

  Eigen::Index degree() const { return coeffs.size() - 1; }
  const Scalar& leading() const { return coeffs[coeffs.size() - 1]; }
};

using ComplexPoly = Poly<Complex>;

/// Horner evaluation, starting from the leading coefficient.
template <typename Scalar, typename Arg>
auto horner(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& coeffs, const Arg& x) {
  using Result = decltype(Scalar{} * x);
  Result acc{0};
  for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) acc = acc * x + coeffs[j];
  return acc;
}

template <typename Scalar, typename Arg>
auto eval_poly(const Poly<Scalar>& p, const Arg& x) {
  return horner(p.coeffs, x);
}

/// Value and first derivative in one Horner pass.
template <typename Scalar>
std::pair<Scalar, Scalar> eval_with_derivative(const Poly<Scalar>& p, const Scalar& x) {
  Scalar value{0};
  Scalar deriv{0};
  for (Eigen::Index j = p.coeffs.size() - 1; j >= 0; --j) {
    deriv = deriv * x + value;
    value = value * x + p.coeffs[j];
  }
  return {value, deriv};
}

/// Gaussian integer a + b i with arbitrary-precision parts.
struct GaussianInt {
  BigInt re;
  BigInt im;

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

/// theta_k via theta_k = (2k-1) theta_{k-1} + x^2 theta_{k-2}, theta_0 = 1, theta_1 = x + 1.
ReverseBesselPoly theta_poly(int k);

/// 2^k times the coefficients of p_k (ascending in lambda), assembled term by
/// term from the explicit sum. Each entry is a Gaussian integer.
std::vector<GaussianInt> p_poly_scaled_exact(int k);

/// p_k with complex double coefficients; exact until the final conversion.
ComplexPoly p_poly(int k);

/// theta_k converted to double coefficients.
Poly<double> theta_as_double(const ReverseBesselPoly& theta);

struct EquivalenceReport {
  bool ok = true;
  int checked_up_to = -1;
  std::optional<int> failing_k;
  std::optional<int> failing_index;
  std::string message;
};

/// Checks p_k(lambda) = i^k theta_k(-i lambda) coefficient-wise in exact
/// Gaussian-integer arithmetic for every k <= k_max.
EquivalenceReport p_theta_equivalence(int k_max);

/// (2k-1)!! = (2k)! / (2^k k!).
BigInt double_factorial_odd(int k);

}  // namespace sphres
