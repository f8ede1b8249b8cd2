#include "sphres/spacetime_field.hpp"

#include <cmath>
#include <random>

#include "sphres/errors.hpp"

namespace sphres {
namespace {

using cd = std::complex<double>;

template <typename F>
auto central_diff4(F&& f, const SpacetimePoint& y, int axis, double h) {
  SpacetimePoint e = SpacetimePoint::Zero();
  e[axis] = h;
  return (f(y - 2.0 * e) - 8.0 * f(y - e) + 8.0 * f(y + e) - f(y + 2.0 * e)) / (12.0 * h);
}

}  // namespace

SpacetimeField SpacetimeField::exponential(cd alpha, const Eigen::Vector3cd& beta) {
  SpacetimeField f;
  f.kind_ = Kind::exponential;
  f.linear_ << alpha, beta;
  return f;
}

SpacetimeField SpacetimeField::gaussian_modulated(cd alpha, const Eigen::Vector3cd& beta,
                                                  const SpacetimePoint& center, double width) {
  if (!(width > 0.0)) throw NonPositiveInput("gaussian width must be positive");
  SpacetimeField f;
  f.kind_ = Kind::gaussian_modulated;
  f.linear_ << alpha, beta;
  f.quadratic_ = Eigen::Matrix4cd::Identity() * cd(-1.0 / (width * width));
  f.center_ = center;
  return f;
}

cd SpacetimeField::exponent(const SpacetimePoint& y) const {
  const Eigen::Vector4cd d = (y - center_).cast<cd>();
  return (linear_.transpose() * y.cast<cd>())(0) + 0.5 * (d.transpose() * quadratic_ * d)(0);
}

Eigen::Vector4cd SpacetimeField::exponent_gradient(const SpacetimePoint& y) const {
  return linear_ + quadratic_ * (y - center_).cast<cd>();
}

cd SpacetimeField::value(const SpacetimePoint& y) const { return std::exp(exponent(y)); }

Eigen::Vector4cd SpacetimeField::gradient(const SpacetimePoint& y) const {
  return exponent_gradient(y) * value(y);
}

Eigen::Matrix4cd SpacetimeField::hessian(const SpacetimePoint& y) const {
  const Eigen::Vector4cd g = exponent_gradient(y);
  return (quadratic_ + g * g.transpose()) * value(y);
}

cd SpacetimeField::box(const SpacetimePoint& y) const {
  const Eigen::Matrix4cd H = hessian(y);
  return -H(0, 0) + H(1, 1) + H(2, 2) + H(3, 3);
}

cd SpacetimeField::dispersion() const {
  const cd a = linear_[0];
  const Eigen::Vector3cd b = linear_.tail<3>();
  return -a * a + (b.transpose() * b)(0);
}

double derivative_oracle_defect(const SpacetimeField& field, const SpacetimePoint& y, double h) {
  double defect = 0.0;
  const Eigen::Vector4cd grad = field.gradient(y);
  const Eigen::Matrix4cd hess = field.hessian(y);
  for (int a = 0; a < 4; ++a) {
    const cd fd = central_diff4([&](const SpacetimePoint& p) { return field.value(p); }, y, a, h);
    defect = std::max(defect, std::abs(fd - grad[a]));
    const Eigen::Vector4cd col =
        central_diff4([&](const SpacetimePoint& p) -> Eigen::Vector4cd { return field.gradient(p); }, y, a, h);
    defect = std::max(defect, (col - hess.col(a)).cwiseAbs().maxCoeff());
  }
  return defect;
}

Eigen::Vector4d protter_flux(const SpacetimeField& field, const SpacetimePoint& y) {
  const cd u = field.value(y);
  const Eigen::Vector4cd du = field.gradient(y);
  const cd multiplier = (y.cast<cd>().transpose() * du)(0) + u;  // V u + u
  const double energy = du.tail<3>().squaredNorm() - std::norm(du[0]);
  Eigen::Vector4d flux;
  flux[0] = std::real(multiplier * std::conj(du[0])) + 0.5 * y[0] * energy;
  for (int j = 1; j < 4; ++j) flux[j] = -std::real(multiplier * std::conj(du[j])) + 0.5 * y[j] * energy;
  return flux;
}

double protter_divergence_exact(const SpacetimeField& field, const SpacetimePoint& y) {
  const cd u = field.value(y);
  const Eigen::Vector4cd du = field.gradient(y);
  const Eigen::Matrix4cd H = field.hessian(y);
  const cd multiplier = (y.cast<cd>().transpose() * du)(0) + u;
  const double energy = du.tail<3>().squaredNorm() - std::norm(du[0]);
  double div = 0.0;
  for (int a = 0; a < 4; ++a) {
    // d_a (V u + u) = 2 u_a + sum_b y_b u_ab
    const cd d_mult = 2.0 * du[a] + (H.row(a) * y.cast<cd>())(0);
    double d_energy = -2.0 * std::real(std::conj(du[0]) * H(0, a));
    for (int j = 1; j < 4; ++j) d_energy += 2.0 * std::real(std::conj(du[j]) * H(j, a));
    const double sign = a == 0 ? 1.0 : -1.0;
    div += sign * std::real(d_mult * std::conj(du[a]) + multiplier * std::conj(H(a, a))) + 0.5 * energy +
           0.5 * y[a] * d_energy;
  }
  return div;
}

double protter_lhs(const SpacetimeField& field, const SpacetimePoint& y) {
  const cd u = field.value(y);
  const Eigen::Vector4cd du = field.gradient(y);
  const cd multiplier = (y.cast<cd>().transpose() * du)(0) + u;
  return -std::real(std::conj(field.box(y)) * multiplier);
}

ProtterResidual protter_residual(const SpacetimeField& field, const SpacetimePoint& y, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference spacing must be positive");
  ProtterResidual out;
  out.lhs = protter_lhs(field, y);
  double rhs = 0.0;
  for (int a = 0; a < 4; ++a)
    rhs += central_diff4([&](const SpacetimePoint& p) { return protter_flux(field, p)[a]; }, y, a, h);
  out.rhs_fd = rhs;
  out.residual = std::abs(out.lhs - out.rhs_fd);
  if (!std::isfinite(out.lhs) || !std::isfinite(out.rhs_fd))
    throw SingularPoint("field data is not finite near the sample point");
  return out;
}

std::vector<NamedField> builtin_fields() {
  const Eigen::Vector3cd beta_wave(cd(0.4, 0.3), cd(-0.5, 0.2), cd(0.3, -0.6));
  const cd alpha_wave = std::sqrt((beta_wave.transpose() * beta_wave)(0));
  const Eigen::Vector3cd beta_free(cd(0.5, 0.0), cd(-0.3, 0.4), cd(0.0, 0.2));
  return {
      {"exponential-solution", SpacetimeField::exponential(alpha_wave, beta_wave)},
      {"exponential-nonsolution", SpacetimeField::exponential(cd(0.7, -0.2), beta_free)},
      {"gaussian-modulated", SpacetimeField::gaussian_modulated(cd(0.3, 0.5), Eigen::Vector3cd(cd(0.2, 0.1), cd(0.0, -0.4), cd(-0.3, 0.0)),
                                                                SpacetimePoint(1.0, 0.2, -0.1, 0.3), 1.5)},
  };
}

std::vector<SpacetimePoint> protter_sample_points(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Raw 53-bit draws keep the points identical across standard libraries.
  const auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<SpacetimePoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    SpacetimePoint y;
    y[0] = 0.5 + 1.5 * unit();
    for (int a = 1; a < 4; ++a) y[a] = -1.0 + 2.0 * unit();
    pts.push_back(y);
  }
  return pts;
}

}  // namespace sphres
