#pragma once

#include <Eigen/Core>

namespace sphres {

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree <= 2n - 1.
struct GaussLegendre {
  Eigen::VectorXd nodes;    // ascending
  Eigen::VectorXd weights;

  explicit GaussLegendre(int n);

  /// Nodes and weights mapped affinely onto [a, b].
  GaussLegendre mapped(double a, double b) const;

  template <typename F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R acc = weights[0] * f(nodes[0]);
    for (Eigen::Index j = 1; j < nodes.size(); ++j) acc += weights[j] * f(nodes[j]);
    return acc;
  }

 private:
  GaussLegendre() = default;
};

}  // namespace sphres
