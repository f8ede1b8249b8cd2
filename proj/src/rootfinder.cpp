#include "sphres/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "sphres/errors.hpp"

namespace sphres {
namespace {

namespace mp = boost::multiprecision;
using Quad = mp::complex128;
using Wide = mp::cpp_complex<50>;

// Aberth-Ehrlich sweeps on the monic polynomial q (ascending, q.back() == 1)
// in the variable mu = lambda / rho. Converged roots are frozen.
template <typename C>
int aberth(const std::vector<C>& q, std::vector<C>& z, double rho, double tol, double collide, int max_iter) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  const C one(1);
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      C val = q[n];
      C der(0);
      for (std::size_t j = n; j-- > 0;) {
        der = der * z[i] + val;
        val = val * z[i] + q[j];
      }
      if (val == C(0)) {
        done[i] = true;
        continue;
      }
      const C newton = val / der;
      C repulsion(0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        C diff = z[i] - z[j];
        if (abs(diff) < collide) {
          z[i] += C(100 * collide, 100 * collide);
          diff = z[i] - z[j];
        }
        repulsion += one / diff;
      }
      const C step = newton / (one - newton * repulsion);
      z[i] -= step;
      // Tolerance is on lambda = rho * mu.
      if (rho * abs(step) < tol * (1.0 + rho * abs(z[i]))) done[i] = true;
      else all_done = false;
    }
    if (all_done) return iter + 1;
  }
  return iter;
}

std::vector<Complex> unit_circle_starts(Eigen::Index k) {
  std::vector<Complex> z(static_cast<std::size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.25) / static_cast<double>(k);
    z[static_cast<std::size_t>(j)] = std::polar(1.0, angle);
  }
  return z;
}

std::vector<Complex> monic_scaled(const ComplexPoly& p, double rho) {
  const Eigen::Index k = p.degree();
  std::vector<Complex> q(static_cast<std::size_t>(k) + 1);
  for (Eigen::Index j = 0; j <= k; ++j)
    q[static_cast<std::size_t>(j)] = p.coeffs[j] / p.leading() * std::pow(rho, static_cast<double>(j - k));
  return q;
}

template <typename C>
std::vector<C> monic_scaled_exact(const std::vector<GaussianInt>& c, double rho) {
  using Real = typename mp::component_type<C>::type;
  const std::size_t k = c.size() - 1;
  std::vector<C> raw(k + 1);
  for (std::size_t j = 0; j <= k; ++j) raw[j] = C(Real(c[j].re), Real(c[j].im));
  std::vector<C> q(k + 1);
  const Real r(rho);
  Real power(1);  // rho^(j-k), built from the top
  for (std::size_t j = k + 1; j-- > 0;) {
    q[j] = raw[j] / raw[k] * power;
    power /= r;
  }
  return q;
}

template <typename C>
std::vector<C> promote(const std::vector<Complex>& z) {
  std::vector<C> out;
  out.reserve(z.size());
  for (const auto& v : z) out.emplace_back(v.real(), v.imag());
  return out;
}

template <typename C>
std::vector<Complex> demote(const std::vector<C>& z) {
  std::vector<Complex> out;
  out.reserve(z.size());
  for (const auto& v : z) out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  return out;
}

RootSet finish(const ComplexPoly& p, const std::vector<Complex>& mu, double rho, int iter, const RootOptions& opts) {
  const Eigen::Index k = p.degree();
  RootSet rs;
  rs.iterations = iter;
  rs.roots.resize(k);
  rs.residuals.resize(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    rs.roots[j] = rho * mu[static_cast<std::size_t>(j)];
    rs.residuals[j] = scaled_residual(p, rs.roots[j]);
  }
  if (!(rs.max_residual() <= opts.residual_threshold))
    throw NonConvergence("root finder: residual " + std::to_string(rs.max_residual()) + " after " +
                         std::to_string(iter) + " iterations");
  if (!(vieta_defect(p, rs) <= opts.vieta_tol))
    throw NonConvergence("root finder: Vieta sum check failed (defect " + std::to_string(vieta_defect(p, rs)) + ")");
  return rs;
}

void check_degree(const ComplexPoly& p) {
  if (p.coeffs.size() < 2) throw DegenerateInput("root finding needs degree >= 1");
  if (p.leading() == Complex(0.0, 0.0)) throw DegenerateInput("leading coefficient is zero");
}

}  // namespace

double cauchy_bound(const ComplexPoly& p) {
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (Eigen::Index j = 0; j < p.degree(); ++j) m = std::max(m, std::abs(p.coeffs[j]) / lead);
  return 1.0 + m;
}

double root_radius_estimate(const ComplexPoly& p) {
  const auto k = static_cast<double>(p.degree());
  const double a0 = std::abs(p.coeffs[0]);
  if (a0 == 0.0) return cauchy_bound(p);
  // Product of root moduli is |a_0/a_k|; logs keep huge ratios finite.
  return std::exp((std::log(a0) - std::log(std::abs(p.leading()))) / k);
}

double scaled_residual(const ComplexPoly& p, const Complex& z) {
  const double cmax = p.coeffs.cwiseAbs().maxCoeff();
  const double scale = cmax * std::pow(std::max(1.0, std::abs(z)), static_cast<double>(p.degree()));
  return std::abs(eval_poly(p, z)) / scale;
}

RootSet roots(const ComplexPoly& p, const RootOptions& opts) {
  check_degree(p);
  const double rho = root_radius_estimate(p);
  auto z = unit_circle_starts(p.degree());
  const int iter = aberth(monic_scaled(p, rho), z, rho, opts.tol, 1e-14, opts.max_iter);
  return finish(p, z, rho, iter, opts);
}

int working_digits(int degree) {
  if (degree <= kDoubleDegreeLimit) return 16;
  if (degree <= kQuadDegreeLimit) return 33;
  return 50;
}

RootSet roots(const std::vector<GaussianInt>& coeffs, const RootOptions& opts) {
  ComplexPoly p;
  p.coeffs.resize(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    p.coeffs[static_cast<Eigen::Index>(j)] =
        Complex(static_cast<double>(coeffs[j].re), static_cast<double>(coeffs[j].im));
    if (!std::isfinite(p.coeffs[static_cast<Eigen::Index>(j)].real()) ||
        !std::isfinite(p.coeffs[static_cast<Eigen::Index>(j)].imag()))
      throw DegenerateInput("coefficient does not fit in double range");
  }
  check_degree(p);
  const Eigen::Index k = p.degree();
  const double rho = root_radius_estimate(p);

  // Double pass for starting values, then polish at higher precision.
  // The refinement tolerance sits just below double resolution: each pass
  // only has to be accurate to the precision of the rounded result.
  const int digits = working_digits(static_cast<int>(k));
  const double polish_tol = 1e-17;
  auto z = unit_circle_starts(k);
  int iter = aberth(monic_scaled(p, rho), z, rho, opts.tol, 1e-14, digits > 16 ? 50 : opts.max_iter);
  if (digits > 16) {
    auto zq = promote<Quad>(z);
    iter += aberth(monic_scaled_exact<Quad>(coeffs, rho), zq, rho, polish_tol, 1e-30, digits > 33 ? 30 : opts.max_iter);
    z = demote(zq);
  }
  if (digits > 33) {
    auto zw = promote<Wide>(z);
    iter += aberth(monic_scaled_exact<Wide>(coeffs, rho), zw, rho, polish_tol, 1e-45, opts.max_iter);
    z = demote(zw);
  }
  return finish(p, z, rho, iter, opts);
}

double vieta_defect(const ComplexPoly& p, const RootSet& rs) {
  const Eigen::Index k = p.degree();
  const Complex ratio = p.coeffs[k - 1] / p.coeffs[k];
  return std::abs(rs.roots.sum() + ratio) / (1.0 + std::abs(ratio));
}

bool reflect_symmetry_check(const RootSet& rs, double tol) {
  const Eigen::Index n = rs.roots.size();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex target = -std::conj(rs.roots[i]);
    Eigen::Index best = -1;
    double best_dist = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double d = std::abs(rs.roots[j] - target);
      if (d <= best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best < 0) return false;
    used[static_cast<std::size_t>(best)] = true;
  }
  return true;
}

}  // namespace sphres
