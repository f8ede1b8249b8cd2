#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

#include "sphres/errors.hpp"
#include "sphres/hadamard.hpp"
#include "sphres/quadrature.hpp"

using namespace sphres;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Quaterniond q(g(rng), g(rng), g(rng), g(rng));
  return q.normalized().toRotationMatrix();
}

// Random polynomial of degree <= 2 in X, as coefficients (c0, c, B).
struct Quadratic {
  double c0;
  Eigen::Vector3d c;
  Eigen::Matrix3d B;
  double operator()(const Eigen::Vector3d& x) const { return c0 + c.dot(x) + x.dot(B * x); }
};

Quadratic random_quadratic(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Quadratic q{g(rng), Eigen::Vector3d(g(rng), g(rng), g(rng)), Eigen::Matrix3d::Zero()};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q.B(i, j) = g(rng);
  return q;
}

// Midpoint rule in (theta, phi) with the cos(phi) area element.
double brute_moment(const std::function<double(const Eigen::Vector3d&)>& f, int n) {
  double acc = 0.0;
  const double dphi = kPi / n, dtheta = 2 * kPi / (2 * n);
  for (int i = 0; i < n; ++i) {
    const double phi = -kPi / 2 + (i + 0.5) * dphi;
    for (int k = 0; k < 2 * n; ++k) acc += f(sphere_point((k + 0.5) * dtheta, phi)) * std::cos(phi) * dphi * dtheta;
  }
  return acc;
}

GridSamples grid_of(const std::function<double(const Eigen::Vector3d&)>& f, int n_theta, int n_phi) {
  const GaussLegendre gl(n_phi);
  GridSamples g{n_theta, n_phi, {}};
  for (int i = 0; i < n_phi; ++i)
    for (int k = 0; k < n_theta; ++k) g.values.push_back(f(sphere_point(2 * kPi * k / n_theta, std::asin(gl.nodes[i]))));
  return g;
}

}  // namespace

TEST_CASE("coordinates lie on the unit sphere") {
  for (double th : {0.0, 1.0, 4.0})
    for (double ph : {-1.2, 0.0, 0.7}) CHECK(sphere_point(th, ph).norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK((sphere_point(0.0, kPi / 2) - Eigen::Vector3d(1, 0, 0)).norm() <= 1e-15);
  CHECK((sphere_point(0.0, 0.0) - Eigen::Vector3d(0, 0, 1)).norm() <= 1e-15);
  CHECK((sphere_point(kPi / 2, 0.0) - Eigen::Vector3d(0, 1, 0)).norm() <= 1e-15);
}

TEST_CASE("quadrature weights and second moments") {
  const auto q = sphere_quadrature(16);
  double total = 0.0;
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  for (std::size_t j = 0; j < q.points.size(); ++j) {
    total += q.weights[j];
    m += q.weights[j] * q.points[j] * q.points[j].transpose();
  }
  CHECK(total == doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK((m - 4 * kPi / 3 * Eigen::Matrix3d::Identity()).norm() <= 1e-13);
}

TEST_CASE("fourth moments: brute force against closed values") {
  const auto x4 = brute_moment([](const Eigen::Vector3d& x) { return std::pow(x[2], 4); }, 1000);
  const auto x2y2 = brute_moment([](const Eigen::Vector3d& x) { return x[0] * x[0] * x[2] * x[2]; }, 1000);
  CHECK(x4 == doctest::Approx(4 * kPi / 5).epsilon(1e-5));
  CHECK(x2y2 == doctest::Approx(4 * kPi / 15).epsilon(1e-5));
}

TEST_CASE("variation matrix examples") {
  const auto u = variation_matrix(NormalVariation::uniform());
  CHECK((u.entries + 2.0 * Eigen::Matrix3d::Identity()).norm() <= 1e-10);
  CHECK(u.quad_order == 64);

  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int n = 0; n < 5; ++n) {
    const Eigen::Vector3d a(g(rng), g(rng), g(rng));
    CHECK(variation_matrix(NormalVariation::translation(a)).entries.norm() <= 1e-12);
  }

  // (3/2pi) * (-int X_i^2 X_3^2): brute-force fourth moments.
  const auto sq = variation_matrix(NormalVariation::squash());
  const double x4 = brute_moment([](const Eigen::Vector3d& x) { return std::pow(x[2], 4); }, 600);
  const double x2y2 = brute_moment([](const Eigen::Vector3d& x) { return x[0] * x[0] * x[2] * x[2]; }, 600);
  CHECK(sq.entries(0, 0) == doctest::Approx(-3 / (2 * kPi) * x2y2).epsilon(1e-5));
  CHECK(sq.entries(2, 2) == doctest::Approx(-3 / (2 * kPi) * x4).epsilon(1e-5));
  const Eigen::Vector3d want(-2.0 / 5, -2.0 / 5, -6.0 / 5);
  CHECK((sq.entries - Eigen::Matrix3d(want.asDiagonal())).norm() <= 1e-12);
}

TEST_CASE("symmetry and trace rule for 20 random C") {
  std::mt19937_64 rng(20);
  for (int n = 0; n < 20; ++n) {
    const auto q = random_quadratic(rng);
    const auto c = NormalVariation::from_function([q](const Eigen::Vector3d& x) { return std::sin(q(x)); }, false);
    const auto m = variation_matrix(c, 32);
    CHECK((m.entries - m.entries.transpose()).norm() <= 1e-12);
    CHECK(std::abs(m.entries.trace() - trace_integral(c, 64)) <= 1e-10);
  }
}

TEST_CASE("rotation equivariance") {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 10; ++n) {
    const auto q = random_quadratic(rng);
    const Eigen::Matrix3d Q = random_rotation(rng);
    const auto c = NormalVariation::from_function(q, false);
    const auto cq = NormalVariation::from_function([q, Q](const Eigen::Vector3d& x) { return q(Q * x); }, false);
    const Eigen::Matrix3d lhs = variation_matrix(cq).entries;
    const Eigen::Matrix3d rhs = Q.transpose() * variation_matrix(c).entries * Q;
    CHECK((lhs - rhs).norm() <= 1e-9);
  }
}

TEST_CASE("quadrature convergence for polynomial C of degree <= 8") {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 10; ++n) {
    const auto a = random_quadratic(rng);
    const auto b = random_quadratic(rng);
    const auto c = NormalVariation::from_function([a, b](const Eigen::Vector3d& x) { return std::pow(a(x), 2) * std::pow(b(x), 2); }, false);
    CHECK((variation_matrix(c, 16).entries - variation_matrix(c, 32).entries).norm() <= 1e-10);
  }
}

TEST_CASE("eigenvalue examples") {
  CHECK((eigenvalues(Eigen::Matrix3d(-2.0 * Eigen::Matrix3d::Identity())) - Eigen::Vector3d(-2, -2, -2)).norm() == 0.0);
  CHECK(eigenvalues(Eigen::Matrix3d(Eigen::Matrix3d::Zero())).norm() == 0.0);
  const Eigen::Matrix3d d = Eigen::Vector3d(-0.4, -0.4, -1.2).asDiagonal();
  CHECK((eigenvalues(d) - Eigen::Vector3d(-1.2, -0.4, -0.4)).norm() <= 1e-15);
}

TEST_CASE("eigenvalues against a QR-based eigensolver") {
  std::mt19937_64 rng(33);
  std::normal_distribution<double> g;
  for (int n = 0; n < 200; ++n) {
    Eigen::Matrix3d a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = g(rng);
    a = 0.5 * (a + a.transpose()).eval();
    if (n % 4 == 1) {  // repeated eigenvalue
      const Eigen::Matrix3d Q = random_rotation(rng);
      a = Q * Eigen::Vector3d(g(rng), 0.7, 0.7).asDiagonal() * Q.transpose();
    } else if (n % 4 == 2) {  // nearly repeated
      const Eigen::Matrix3d Q = random_rotation(rng);
      a = Q * Eigen::Vector3d(-1.3, 0.2, 0.2 + 1e-9).asDiagonal() * Q.transpose();
    }
    const Eigen::Vector3d ours = eigenvalues(a);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(a, Eigen::EigenvaluesOnly);
    const double scale = a.norm();
    CHECK((ours - es.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-13 * scale);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs((a - ours[i] * Eigen::Matrix3d::Identity()).determinant()) <= 1e-10 * std::pow(scale, 3));
  }
}

TEST_CASE("resonance shift") {
  CHECK(resonance_shift(-2.0, 0.01) == Complex(0, -0.01));
  CHECK(resonance_shift(0.0, 0.3) == Complex(0, 0));
  CHECK(std::abs(resonance_shift(-1.2, 0.01) - Complex(0, -0.006)) <= 1e-17);
}

TEST_CASE("uniform shrink matches the dilation law") {
  const auto eig = eigenvalues(variation_matrix(NormalVariation::uniform()));
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const Complex exact = Complex(0, -1) / (1.0 - eps);
    for (int i = 0; i < 3; ++i) {
      const Complex first_order = Complex(0, -1) + resonance_shift(eig[i], eps);
      CHECK(std::abs(first_order - Complex(0, -1) - Complex(0, -eps)) <= 1e-10 * eps);
      CHECK(std::abs(exact - first_order) <= 5 * eps * eps);
    }
  }
}

TEST_CASE("non-positive C moves every direction down") {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 20; ++n) {
    const auto q = random_quadratic(rng);
    const auto c = NormalVariation::from_function([q](const Eigen::Vector3d& x) { return -std::pow(q(x), 2); });
    const auto rep = definiteness_report(c);
    CHECK(rep.semidefinite);
    CHECK(rep.strictly);
    CHECK(rep.eigenvalues.maxCoeff() < 0.0);
    for (int i = 0; i < 3; ++i) CHECK(resonance_shift(rep.eigenvalues[i], 0.01).imag() < 0.0);
  }
}

TEST_CASE("definiteness examples") {
  const auto u = definiteness_report(NormalVariation::uniform());
  CHECK(u.semidefinite);
  CHECK(u.strictly);
  const auto z = definiteness_report(NormalVariation::from_function([](const Eigen::Vector3d&) { return 0.0; }));
  CHECK(z.semidefinite);
  CHECK_FALSE(z.strictly);
  const auto dent = definiteness_report(
      NormalVariation::from_function([](const Eigen::Vector3d& x) { return -std::pow(std::max(0.0, x[2]), 2); }));
  CHECK(dent.semidefinite);
  CHECK(dent.strictly);
  CHECK_THROWS_AS(
      definiteness_report(NormalVariation::from_function([](const Eigen::Vector3d& x) { return x[0] * x[0]; })),
      SignViolation);
}

TEST_CASE("grid representation") {
  const auto f = [](const Eigen::Vector3d& x) { return -x[2] * x[2]; };
  NormalVariation c{grid_of(f, 64, 32), true};
  const auto m = variation_matrix(c);
  CHECK((m.entries - variation_matrix(NormalVariation::squash(), 32).entries).norm() <= 1e-12);
  CHECK(m.quad_order == 32);

  CHECK_THROWS_AS(variation_matrix(NormalVariation{GridSamples{2, 4, std::vector<double>(8, 0.0)}, true}), InvalidGrid);
  CHECK_THROWS_AS(variation_matrix(NormalVariation{GridSamples{4, 4, std::vector<double>(15, 0.0)}, true}), InvalidGrid);
  auto bad = grid_of(f, 8, 4);
  bad.values[3] = std::nan("");
  CHECK_THROWS_AS(variation_matrix(NormalVariation{bad, true}), InvalidGrid);
  CHECK_THROWS_AS(variation_matrix(NormalVariation::uniform(), 4), InvalidGrid);
}

TEST_CASE("real spherical harmonics: convention and orthonormality") {
  const double c1 = std::sqrt(3 / (4 * kPi));
  const Eigen::Vector3d x = Eigen::Vector3d(0.3, -0.5, 0.8).normalized();
  CHECK(real_spherical_harmonic(1, 0, x) == doctest::Approx(c1 * x[0]).epsilon(1e-14));
  CHECK(real_spherical_harmonic(1, 1, x) == doctest::Approx(c1 * x[2]).epsilon(1e-14));
  CHECK(real_spherical_harmonic(1, -1, x) == doctest::Approx(c1 * x[1]).epsilon(1e-14));
  CHECK(real_spherical_harmonic(0, 0, x) == doctest::Approx(1 / std::sqrt(4 * kPi)).epsilon(1e-14));

  const auto q = sphere_quadrature(16);
  std::vector<std::pair<int, int>> lm;
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m) lm.emplace_back(l, m);
  for (const auto& [l1, m1] : lm)
    for (const auto& [l2, m2] : lm) {
      double acc = 0.0;
      for (std::size_t j = 0; j < q.points.size(); ++j)
        acc += q.weights[j] * real_spherical_harmonic(l1, m1, q.points[j]) * real_spherical_harmonic(l2, m2, q.points[j]);
      CHECK(std::abs(acc - (l1 == l2 && m1 == m2 ? 1.0 : 0.0)) <= 1e-12);
    }
}

TEST_CASE("harmonic expansion") {
  // C = -sqrt(4 pi) Y_00 = -1.
  NormalVariation c{HarmonicExpansion{{{0, 0, -std::sqrt(4 * kPi)}}}, true};
  CHECK((variation_matrix(c).entries + 2.0 * Eigen::Matrix3d::Identity()).norm() <= 1e-12);
  NormalVariation l1{HarmonicExpansion{{{1, 1, 2.0}, {1, -1, -1.0}}}, false};
  CHECK(variation_matrix(l1).entries.norm() <= 1e-13);
  NormalVariation bad{HarmonicExpansion{{{1, 2, 1.0}}}, false};
  CHECK_THROWS_AS(variation_matrix(bad), DomainError);
}

TEST_CASE("radial normalization") {
  const auto rep = radial_norm_check();
  CHECK(rep.passed);
  CHECK(rep.max_antiderivative_error <= 1e-9);
  const double e2 = std::exp(2.0);
  CHECK(std::abs(rep.boundary.rhs - 2 * kPi * e2 / 3) <= 1e-12 * rep.boundary.rhs);
  CHECK(std::abs(rep.boundary.lhs - 2 * kPi * e2 / 3) <= 1e-12 * rep.boundary.rhs);
  // F(1) = e^2 (1 - 2) / 2 = -e^2 / 2.
  CHECK(rep.boundary.lhs == doctest::Approx(4 * kPi / 3 * e2 / 2).epsilon(1e-14));
  CHECK(rep.normalization == doctest::Approx(std::sqrt(3 / (2 * kPi * e2))).epsilon(1e-15));
  CHECK(rep.normalization == doctest::Approx(0.2542).epsilon(1e-4));
  // F'(r) by hand: e^{2r} [(r-2)/r + 1/(2r) - (r-2)/(2r^2)] at r = 2.
  const double r = 2.0;
  const double dF = std::exp(2 * r) * ((r - 2) / r + 1 / (2 * r) - (r - 2) / (2 * r * r));
  CHECK(dF == doctest::Approx(std::exp(2 * r) * (r - 1) * (r - 1) / (r * r)).epsilon(1e-12));
}
