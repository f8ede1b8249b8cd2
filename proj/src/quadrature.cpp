#include "sphres/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "sphres/errors.hpp"

namespace sphres {

GaussLegendre::GaussLegendre(int n) : nodes(n), weights(n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  // Newton on P_n from the Chebyshev-like initial guess; nodes are symmetric.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        // one more derivative evaluation at the converged node
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

GaussLegendre GaussLegendre::mapped(double a, double b) const {
  GaussLegendre out;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  out.nodes = (nodes.array() * half + mid).matrix();
  out.weights = weights * half;
  return out;
}

}  // namespace sphres
