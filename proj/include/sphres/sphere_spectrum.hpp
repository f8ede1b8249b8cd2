#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "sphres/rootfinder.hpp"

namespace sphres {

/// Scattering resonance of the ball B(0, R) in R^n (n odd), Im lambda < 0.
struct Resonance {
  Complex lambda;
  int ell = 0;
  int dim = 3;
  double radius = 1.0;
  std::int64_t multiplicity = 1;
  double residual = 0.0;  // scaled residual of lambda * R as a root of p_k
  bool highlight = false;

  double width() const { return std::abs(lambda.imag()); }
};

/// Resonances sorted by (ell, Re lambda), complete for ell <= ell_max.
struct SpectrumSlice {
  std::vector<Resonance> resonances;
  int ell_max = 0;
  int dim = 3;
  double radius = 1.0;
};

inline constexpr int kMaxPolynomialDegree = 60;

/// Polynomial index k = ell + (n - 3)/2 for odd n >= 3.
int polynomial_index(int dim, int ell);

/// Dimension of the degree-ell spherical-harmonic eigenspace on S^{n-1}.
std::int64_t multiplicity(int ell, int dim);

/// Roots of p_k divided by R, each tagged with its multiplicity.
std::vector<Resonance> resonances_for_ell(int dim, int ell, double radius);

/// All resonances with ell <= ell_max; per-ell work may be spread over
/// `threads` workers, results are merged in a fixed order.
SpectrumSlice spectrum(int dim, int ell_max, double radius, int threads = 1);

struct MinWidth {
  double width = 0.0;
  Resonance witness;
};

/// Smallest |Im lambda| over every resonance with ell <= ell_max.
MinWidth min_width(int dim, int ell_max, double radius, int threads = 1);

/// Unit-sphere, n = 3 resonances for ell <= ell_max with highlight = (ell == highlight_ell).
SpectrumSlice figure1_data(int ell_max, int highlight_ell = 20, int threads = 1);

}  // namespace sphres
