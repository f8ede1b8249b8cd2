#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sphres/errors.hpp"
#include "sphres/sphere_spectrum.hpp"

using namespace sphres;

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t c = 1;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

// Harmonic polynomials of degree l in n variables: homogeneous polynomials of
// degree l minus those of degree l - 2 (the image of multiplication by |x|^2).
std::int64_t harmonic_dimension(int l, int n) { return binom(l + n - 1, n - 1) - binom(l + n - 3, n - 1); }

// Brute-force count of monomials x^a with |a| = l, for small n and l.
std::int64_t monomials(int l, int n) {
  if (n == 1) return 1;
  std::int64_t c = 0;
  for (int a = 0; a <= l; ++a) c += monomials(l - a, n - 1);
  return c;
}

}  // namespace

TEST_CASE("examples") {
  const auto r = resonances_for_ell(3, 1, 1.0);
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0].lambda - Complex(0, -1)) <= 1e-15);
  CHECK(r[0].multiplicity == 3);
  CHECK(resonances_for_ell(3, 0, 1.0).empty());
  const auto r2 = resonances_for_ell(3, 1, 2.0);
  CHECK(std::abs(r2[0].lambda - Complex(0, -0.5)) <= 1e-15);

  CHECK(multiplicity(5, 3) == 11);
  CHECK(multiplicity(0, 3) == 1);
  CHECK(multiplicity(0, 7) == 1);
  CHECK(multiplicity(1, 5) == 5);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(resonances_for_ell(4, 1, 1.0), UnsupportedDimension);
  CHECK_THROWS_AS(resonances_for_ell(1, 1, 1.0), UnsupportedDimension);
  CHECK_THROWS_AS(resonances_for_ell(3, 61, 1.0), DegreeTooLarge);
  CHECK_THROWS_AS(resonances_for_ell(5, 60, 1.0), DegreeTooLarge);
  CHECK_THROWS_AS(resonances_for_ell(3, 1, 0.0), NonPositiveInput);
  CHECK_THROWS_AS(resonances_for_ell(3, -1, 1.0), DomainError);
  CHECK_THROWS_AS(polynomial_index(2, 0), UnsupportedDimension);
}

TEST_CASE("polynomial index") {
  CHECK(polynomial_index(3, 4) == 4);
  CHECK(polynomial_index(5, 4) == 5);
  CHECK(polynomial_index(9, 0) == 3);
}

TEST_CASE("multiplicity matches the harmonic-polynomial count") {
  for (int n : {3, 5, 7, 9})
    for (int l = 0; l <= 12; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      CHECK(harmonic_dimension(l, n) == monomials(l, n) - (l >= 2 ? monomials(l - 2, n) : 0));
      CHECK(multiplicity(l, n) == harmonic_dimension(l, n));
    }
}

TEST_CASE("multiplicity is 2l + 1 in three dimensions for l <= 100") {
  for (int l = 0; l <= 100; ++l) CHECK(multiplicity(l, 3) == 2 * l + 1);
}

TEST_CASE("count and width bound for the unit sphere, l <= 30") {
  const auto s = spectrum(3, 30, 1.0);
  CHECK(s.resonances.size() == 30u * 31u / 2u);
  for (const auto& r : s.resonances) {
    CHECK(r.lambda.imag() < 0.0);
    CHECK(r.width() >= 1.0 - 1e-9);
    CHECK(r.residual <= 1e-9);
    CHECK(r.multiplicity == 2 * r.ell + 1);
  }
  for (int L : {1, 5, 17}) CHECK(spectrum(3, L, 1.0).resonances.size() == static_cast<std::size_t>(L * (L + 1) / 2));
}

TEST_CASE("slice is sorted by (ell, Re lambda)") {
  const auto s = spectrum(5, 12, 1.0);
  for (std::size_t j = 1; j < s.resonances.size(); ++j) {
    const auto& a = s.resonances[j - 1];
    const auto& b = s.resonances[j];
    CHECK((a.ell < b.ell || (a.ell == b.ell && a.lambda.real() <= b.lambda.real())));
  }
}

TEST_CASE("dilation covariance") {
  for (double R : {0.5, 2.0, 3.0, 7.25}) {
    for (int ell : {1, 4, 13, 30}) {
      const auto unit = resonances_for_ell(3, ell, 1.0);
      const auto scaled = resonances_for_ell(3, ell, R);
      REQUIRE(unit.size() == scaled.size());
      for (std::size_t j = 0; j < unit.size(); ++j) CHECK(scaled[j].lambda == unit[j].lambda / R);
    }
  }
}

TEST_CASE("min width") {
  const auto m3 = min_width(3, 30, 1.0);
  CHECK(std::abs(m3.width - 1.0) <= 1e-9);
  CHECK(m3.witness.ell == 1);
  CHECK(std::abs(m3.witness.lambda - Complex(0, -1)) <= 1e-9);
  const auto m5 = min_width(5, 30, 1.0);
  CHECK(std::abs(m5.width - 1.0) <= 1e-9);
  CHECK(m5.witness.ell == 0);
  CHECK(std::abs(min_width(3, 30, 0.5).width - 2.0) <= 1e-9);
  CHECK_THROWS_AS(min_width(3, 0, 1.0), DomainError);
}

TEST_CASE("figure 1 data") {
  const auto f1 = figure1_data(1);
  REQUIRE(f1.resonances.size() == 1);
  CHECK_FALSE(f1.resonances[0].highlight);
  const auto f2 = figure1_data(2);
  CHECK(f2.resonances.size() == 3);
  const auto f20 = figure1_data(20, 20);
  std::size_t hl = 0;
  for (const auto& r : f20.resonances) hl += r.highlight ? 1 : 0;
  CHECK(hl == 20);
}

TEST_CASE("threaded spectrum equals the serial one") {
  const auto a = spectrum(3, 40, 1.0, 1);
  const auto b = spectrum(3, 40, 1.0, 3);
  REQUIRE(a.resonances.size() == b.resonances.size());
  for (std::size_t j = 0; j < a.resonances.size(); ++j) {
    CHECK(a.resonances[j].lambda == b.resonances[j].lambda);
    CHECK(a.resonances[j].ell == b.resonances[j].ell);
  }
}

TEST_CASE("higher dimensions are reported, not asserted") {
  for (int n : {7, 9}) {
    const auto m = min_width(n, 20, 1.0);
    CHECK(std::isfinite(m.width));
    CHECK(m.width > 0.0);
    MESSAGE("n = " << n << ": min width over l <= 20 is " << m.width << " at l = " << m.witness.ell);
  }
}
