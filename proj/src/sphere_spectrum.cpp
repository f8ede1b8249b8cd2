#include "sphres/sphere_spectrum.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "sphres/errors.hpp"

namespace sphres {
namespace {

void check_dim(int dim) {
  if (dim < 3 || dim % 2 == 0)
    throw UnsupportedDimension("dimension must be odd and >= 3, got " + std::to_string(dim));
}

// Unit-radius root sets are computed once per polynomial index and reused.
const RootSet& unit_roots(int k) {
  static std::mutex mu;
  static std::map<int, RootSet> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  RootSet rs = roots(p_poly_scaled_exact(k));
  std::lock_guard lock(mu);
  return cache.try_emplace(k, std::move(rs)).first->second;
}

bool ordered(const Resonance& a, const Resonance& b) {
  if (a.ell != b.ell) return a.ell < b.ell;
  if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
  return a.lambda.imag() < b.lambda.imag();
}

}  // namespace

int polynomial_index(int dim, int ell) {
  check_dim(dim);
  if (ell < 0) throw DomainError("angular momentum must be non-negative");
  return ell + (dim - 3) / 2;
}

std::int64_t multiplicity(int ell, int dim) {
  if (ell < 0) throw DomainError("angular momentum must be non-negative");
  if (dim < 3) throw UnsupportedDimension("multiplicity needs n >= 3");
  if (ell == 0) return 1;
  // (2l + n - 2)/(n - 2) * C(l + n - 3, l); the product is divisible by n - 2.
  BigInt binom = 1;
  for (int j = 1; j <= ell; ++j) binom = binom * (dim - 3 + j) / j;
  const BigInt m = binom * (2 * ell + dim - 2) / (dim - 2);
  if (m > std::numeric_limits<std::int64_t>::max()) throw DomainError("multiplicity overflows 64 bits");
  return m.convert_to<std::int64_t>();
}

std::vector<Resonance> resonances_for_ell(int dim, int ell, double radius) {
  const int k = polynomial_index(dim, ell);
  if (!(radius > 0.0)) throw NonPositiveInput("radius must be positive");
  if (k > kMaxPolynomialDegree)
    throw DegreeTooLarge("polynomial degree " + std::to_string(k) + " exceeds " +
                         std::to_string(kMaxPolynomialDegree));
  std::vector<Resonance> out;
  if (k == 0) return out;
  const RootSet& rs = unit_roots(k);
  const auto mult = multiplicity(ell, dim);
  out.reserve(static_cast<std::size_t>(rs.size()));
  for (Eigen::Index j = 0; j < rs.size(); ++j) {
    if (!(rs.roots[j].imag() < 0.0))
      throw NumericError("root of p_" + std::to_string(k) + " is not in the lower half plane");
    out.push_back(Resonance{rs.roots[j] / radius, ell, dim, radius, mult, rs.residuals[j], false});
  }
  std::sort(out.begin(), out.end(), ordered);
  return out;
}

SpectrumSlice spectrum(int dim, int ell_max, double radius, int threads) {
  check_dim(dim);
  if (ell_max < 0) throw DomainError("ell_max must be non-negative");
  std::vector<std::vector<Resonance>> per_ell(static_cast<std::size_t>(ell_max) + 1);
  const int workers = std::clamp(threads, 1, ell_max + 1);
  if (workers == 1) {
    for (int ell = 0; ell <= ell_max; ++ell) per_ell[static_cast<std::size_t>(ell)] = resonances_for_ell(dim, ell, radius);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int ell = w; ell <= ell_max; ell += workers)
            per_ell[static_cast<std::size_t>(ell)] = resonances_for_ell(dim, ell, radius);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  SpectrumSlice slice{{}, ell_max, dim, radius};
  for (auto& rs : per_ell) slice.resonances.insert(slice.resonances.end(), rs.begin(), rs.end());
  return slice;
}

MinWidth min_width(int dim, int ell_max, double radius, int threads) {
  if (ell_max < 1) throw DomainError("min_width needs ell_max >= 1");
  const auto slice = spectrum(dim, ell_max, radius, threads);
  if (slice.resonances.empty()) throw DomainError("no resonances in range");
  MinWidth best{std::numeric_limits<double>::infinity(), {}};
  for (const auto& r : slice.resonances) {
    if (r.width() < best.width) best = {r.width(), r};
  }
  return best;
}

SpectrumSlice figure1_data(int ell_max, int highlight_ell, int threads) {
  auto slice = spectrum(3, ell_max, 1.0, threads);
  for (auto& r : slice.resonances) r.highlight = (r.ell == highlight_ell);
  return slice;
}

}  // namespace sphres
