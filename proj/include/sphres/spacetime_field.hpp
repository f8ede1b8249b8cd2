#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sphres {

/// Point (t, x1, x2, x3) in Minkowski space.
using SpacetimePoint = Eigen::Vector4d;

/// Complex scalar field u = exp(q(y)) with q quadratic in y = (t, x):
///   q(y) = g . y + 1/2 (y - y0)^T Q (y - y0).
/// All first and second partials are available in closed form.
class SpacetimeField {
 public:
  enum class Kind { exponential, gaussian_modulated };

  /// u = exp(alpha t + beta . x).
  static SpacetimeField exponential(std::complex<double> alpha, const Eigen::Vector3cd& beta);

  /// u = exp(alpha t + beta . x - |y - center|^2 / (2 width^2)) (Euclidean norm in y).
  static SpacetimeField gaussian_modulated(std::complex<double> alpha, const Eigen::Vector3cd& beta,
                                           const SpacetimePoint& center, double width);

  Kind kind() const { return kind_; }

  std::complex<double> value(const SpacetimePoint& y) const;
  /// (u_t, u_x1, u_x2, u_x3)
  Eigen::Vector4cd gradient(const SpacetimePoint& y) const;
  Eigen::Matrix4cd hessian(const SpacetimePoint& y) const;

  /// Wave operator with the -d_t^2 + d_x^2 convention.
  std::complex<double> box(const SpacetimePoint& y) const;

  /// -alpha^2 + beta . beta for exponential fields (zero iff box u = 0).
  std::complex<double> dispersion() const;

 private:
  SpacetimeField() = default;
  std::complex<double> exponent(const SpacetimePoint& y) const;
  Eigen::Vector4cd exponent_gradient(const SpacetimePoint& y) const;

  Kind kind_ = Kind::exponential;
  Eigen::Vector4cd linear_ = Eigen::Vector4cd::Zero();
  Eigen::Matrix4cd quadratic_ = Eigen::Matrix4cd::Zero();
  SpacetimePoint center_ = SpacetimePoint::Zero();
};

/// Largest deviation between the closed-form gradient/Hessian and 4th-order
/// central differences of value/gradient with spacing h.
double derivative_oracle_defect(const SpacetimeField& field, const SpacetimePoint& y, double h);

struct ProtterResidual {
  double lhs = 0.0;     // -Re[conj(box u) (V u + u)]
  double rhs_fd = 0.0;  // divergence of the fluxes by 4th-order central differences
  double residual = 0.0;
};

/// Spatial flux -Re((Vu+u) conj(u_x)) + x/2 (|u_x|^2 - |u_t|^2) and temporal
/// flux Re((Vu+u) conj(u_t)) + t/2 (|u_x|^2 - |u_t|^2), V = t d_t + x . d_x.
/// Returned as (temporal, spatial_1, spatial_2, spatial_3).
Eigen::Vector4d protter_flux(const SpacetimeField& field, const SpacetimePoint& y);

/// Divergence of protter_flux from the exact second derivatives.
double protter_divergence_exact(const SpacetimeField& field, const SpacetimePoint& y);

double protter_lhs(const SpacetimeField& field, const SpacetimePoint& y);

/// Throws SingularPoint for non-finite field data, DomainError for h <= 0.
ProtterResidual protter_residual(const SpacetimeField& field, const SpacetimePoint& y, double h);

struct NamedField {
  std::string name;
  SpacetimeField field;
};

/// Fields used by the Protter verification: an exponential solution of
/// box u = 0, an exponential non-solution, and a Gaussian-modulated wave.
std::vector<NamedField> builtin_fields();

/// Deterministic sample points with t in [0.5, 2] and x in [-1, 1]^3.
std::vector<SpacetimePoint> protter_sample_points(int count, std::uint64_t seed);

}  // namespace sphres
