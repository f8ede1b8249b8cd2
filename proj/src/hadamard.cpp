#include "sphres/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "sphres/errors.hpp"
#include "sphres/quadrature.hpp"

namespace sphres {
namespace {

constexpr double kPi = std::numbers::pi;

SphereQuadrature tensor_rule(int n_phi, int n_theta) {
  const GaussLegendre gl(n_phi);
  SphereQuadrature q;
  q.points.reserve(static_cast<std::size_t>(n_phi) * static_cast<std::size_t>(n_theta));
  q.weights.reserve(q.points.capacity());
  const double dtheta = 2.0 * kPi / n_theta;
  // dvol = cos(phi) dtheta dphi = dtheta d(sin phi)
  for (int i = 0; i < n_phi; ++i) {
    const double phi = std::asin(gl.nodes[i]);
    for (int k = 0; k < n_theta; ++k) {
      q.points.push_back(sphere_point(dtheta * k, phi));
      q.weights.push_back(gl.weights[i] * dtheta);
    }
  }
  return q;
}

struct Sampler {
  const SphereQuadrature& quad;

  std::vector<double> operator()(const HarmonicExpansion& h) const {
    std::vector<double> out(quad.points.size(), 0.0);
    for (const auto& t : h.terms) {
      if (t.l < 0 || std::abs(t.m) > t.l) throw DomainError("spherical harmonic needs |m| <= l");
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += t.value * real_spherical_harmonic(t.l, t.m, quad.points[j]);
    }
    return out;
  }
  std::vector<double> operator()(const GridSamples& g) const { return g.values; }
  std::vector<double> operator()(const SurfaceFunction& f) const {
    std::vector<double> out(quad.points.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.fn(quad.points[j]);
    return out;
  }
};

void validate_grid(const GridSamples& g) {
  if (g.n_theta < 3 || g.n_phi < 2) throw InvalidGrid("grid needs n_theta >= 3 and n_phi >= 2");
  if (g.values.size() != static_cast<std::size_t>(g.n_theta) * static_cast<std::size_t>(g.n_phi))
    throw InvalidGrid("grid has " + std::to_string(g.values.size()) + " values, expected n_theta * n_phi = " +
                      std::to_string(g.n_theta * g.n_phi));
  for (double v : g.values)
    if (!std::isfinite(v)) throw InvalidGrid("grid values must be finite");
}

}  // namespace

NormalVariation NormalVariation::uniform() {
  return from_function([](const Eigen::Vector3d&) { return -1.0; }, true);
}

NormalVariation NormalVariation::translation(const Eigen::Vector3d& shift) {
  return from_function([shift](const Eigen::Vector3d& x) { return shift.dot(x); }, false);
}

NormalVariation NormalVariation::squash() {
  return from_function([](const Eigen::Vector3d& x) { return -x[2] * x[2]; }, true);
}

NormalVariation NormalVariation::from_function(std::function<double(const Eigen::Vector3d&)> fn, bool constrained) {
  return {SurfaceFunction{std::move(fn)}, constrained};
}

Eigen::Vector3d sphere_point(double theta, double phi) {
  return {std::sin(phi), std::cos(phi) * std::sin(theta), std::cos(phi) * std::cos(theta)};
}

double real_spherical_harmonic(int l, int m, const Eigen::Vector3d& x) {
  const double polar = std::acos(std::clamp(x[0], -1.0, 1.0));
  const double azimuth = std::atan2(x[1], x[2]);
  const unsigned am = static_cast<unsigned>(std::abs(m));
  // std::sph_legendre carries (-1)^m; undo it.
  const double sign = (am % 2 == 0) ? 1.0 : -1.0;
  const double base = sign * std::sph_legendre(static_cast<unsigned>(l), am, polar);
  if (m == 0) return base;
  return std::numbers::sqrt2 * base * (m > 0 ? std::cos(am * azimuth) : std::sin(am * azimuth));
}

SphereQuadrature sphere_quadrature(int order, int n_theta) {
  if (order < 1) throw InvalidGrid("quadrature order must be positive");
  return tensor_rule(order, n_theta > 0 ? n_theta : 2 * order);
}

SampledVariation sample(const NormalVariation& c, int order) {
  SampledVariation out;
  if (const auto* g = std::get_if<GridSamples>(&c.representation)) {
    validate_grid(*g);
    out.quad = tensor_rule(g->n_phi, g->n_theta);
  } else {
    if (order < 8) throw InvalidGrid("quad_order must be at least 8");
    out.quad = sphere_quadrature(order);
  }
  out.values = std::visit(Sampler{out.quad}, c.representation);
  return out;
}

VariationMatrix variation_matrix(const NormalVariation& c, int quad_order) {
  const auto s = sample(c, quad_order);
  Eigen::Matrix3d acc = Eigen::Matrix3d::Zero();
  for (std::size_t j = 0; j < s.values.size(); ++j) {
    const Eigen::Vector3d& x = s.quad.points[j];
    acc.noalias() += (s.quad.weights[j] * s.values[j]) * (x * x.transpose());
  }
  VariationMatrix out;
  out.entries = (3.0 / (2.0 * kPi)) * 0.5 * (acc + acc.transpose());
  out.quad_order = std::holds_alternative<GridSamples>(c.representation)
                       ? std::get<GridSamples>(c.representation).n_phi
                       : quad_order;
  return out;
}

double trace_integral(const NormalVariation& c, int quad_order) {
  const auto s = sample(c, quad_order);
  double acc = 0.0;
  for (std::size_t j = 0; j < s.values.size(); ++j) acc += s.quad.weights[j] * s.values[j];
  return 3.0 / (2.0 * kPi) * acc;
}

Eigen::Vector3d eigenvalues(const Eigen::Matrix3d& a) {
  const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  Eigen::Vector3d eig;
  if (off == 0.0) {
    eig = a.diagonal();
    std::sort(eig.data(), eig.data() + 3);
    return eig;
  }
  const double q = a.trace() / 3.0;
  const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) + (a(2, 2) - q) * (a(2, 2) - q) +
                    2.0 * off;
  const double p = std::sqrt(p2 / 6.0);
  const Eigen::Matrix3d b = (a - q * Eigen::Matrix3d::Identity()) / p;
  const double r = std::clamp(b.determinant() / 2.0, -1.0, 1.0);
  const double angle = std::acos(r) / 3.0;
  const double hi = q + 2.0 * p * std::cos(angle);
  const double lo = q + 2.0 * p * std::cos(angle + 2.0 * kPi / 3.0);
  const double mid = 3.0 * q - hi - lo;

  // The cubic loses half the digits near a double root. Keep the most
  // isolated root, sharpen it with a Rayleigh quotient, and solve the
  // remaining 2x2 block on its orthogonal complement.
  const double isolated = (hi - mid > mid - lo) ? hi : lo;
  const Eigen::Matrix3d shifted = a - isolated * Eigen::Matrix3d::Identity();
  Eigen::Vector3d v = shifted.row(0).cross(shifted.row(1)).transpose();
  for (const auto& w : {shifted.row(0).cross(shifted.row(2)), shifted.row(1).cross(shifted.row(2))})
    if (w.squaredNorm() > v.squaredNorm()) v = w.transpose();
  if (v.squaredNorm() == 0.0) {
    eig << lo, mid, hi;
    std::sort(eig.data(), eig.data() + 3);
    return eig;
  }
  v.normalize();
  Eigen::Vector3d u = v.unitOrthogonal();
  Eigen::Vector3d w = v.cross(u);
  const double m11 = u.dot(a * u);
  const double m22 = w.dot(a * w);
  const double m12 = u.dot(a * w);
  const double half = 0.5 * (m11 - m22);
  const double radius = std::hypot(half, m12);
  const double centre = 0.5 * (m11 + m22);
  eig << v.dot(a * v), centre - radius, centre + radius;
  std::sort(eig.data(), eig.data() + 3);
  return eig;
}

std::complex<double> resonance_shift(double mu, double eps) { return std::complex<double>(0.0, 0.5) * eps * mu; }

DefinitenessReport definiteness_report(const NormalVariation& c, int quad_order) {
  const auto s = sample(c, quad_order);
  double cmax = -std::numeric_limits<double>::infinity();
  double cabs = 0.0;
  for (double v : s.values) {
    cmax = std::max(cmax, v);
    cabs = std::max(cabs, std::abs(v));
  }
  if (cmax > 1e-12) throw SignViolation("normal variation reaches " + std::to_string(cmax) + " > 0");
  DefinitenessReport rep;
  rep.eigenvalues = eigenvalues(variation_matrix(c, quad_order));
  const double norm = rep.eigenvalues.cwiseAbs().maxCoeff();
  const double top = rep.eigenvalues[2];
  rep.semidefinite = top <= 1e-10 * norm;
  rep.strictly = cabs > 1e-12 && top <= -1e-10 * norm;
  return rep;
}

RadialNormReport radial_norm_check() {
  using cd = std::complex<double>;
  const auto antiderivative = [](cd r) { return std::exp(2.0 * r) * (r - 2.0) / (2.0 * r); };
  const auto integrand = [](double r) { return std::exp(2.0 * r) * (r - 1.0) * (r - 1.0) / (r * r); };
  RadialNormReport rep;
  constexpr double step = 1e-30;
  for (int j = 0; j < 50; ++j) {
    const double r = 1.0 + 4.0 * j / 49.0;
    const double deriv = std::imag(antiderivative(cd(r, step))) / step;
    const double target = integrand(r);
    // At r = 1 both sides vanish; compare against the scale of the antiderivative.
    const double scale = std::max(std::abs(target), std::abs(antiderivative(cd(r)).real()) * 1e-3);
    rep.max_antiderivative_error = std::max(rep.max_antiderivative_error, std::abs(deriv - target) / scale);
  }
  const double e2 = std::exp(2.0);
  rep.boundary.lhs = 4.0 * kPi / 3.0 * (0.0 - antiderivative(cd(1.0)).real());
  rep.boundary.rhs = 2.0 * kPi * e2 / 3.0;
  rep.boundary.ratio = rep.boundary.lhs / rep.boundary.rhs;
  rep.boundary.tolerance_used = 1e-12;
  rep.boundary.passed = std::abs(rep.boundary.lhs - rep.boundary.rhs) <= 1e-12 * rep.boundary.rhs;
  rep.normalization = std::sqrt(3.0 / (2.0 * kPi * e2));
  rep.passed = rep.boundary.passed && rep.max_antiderivative_error <= 1e-9;
  return rep;
}

}  // namespace sphres
