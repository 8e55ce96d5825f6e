#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "vnorm/numrange.hpp"

using namespace vnorm;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double poly_abs(double c0, double c1, double c2, ComplexScalar z) {
  const std::complex<double> w(z.re, z.im);
  return std::abs((c2 * w + c1) * w + c0);
}

}  // namespace

TEST_SUITE("numrange") {

TEST_CASE("boundary endpoints are pinned") {
  const ComplexScalar start = boundary_point(0.0, Branch::Upper);
  CHECK(std::abs(start.re - 0.5) <= 1e-12);
  CHECK(std::abs(start.im) <= 1e-12);

  const ComplexScalar mid = boundary_point(std::numbers::pi, Branch::Upper);
  // ((1 - cos(pi))/pi^2, (pi - sin(pi))/pi^2) = (2/pi^2, 1/pi).
  CHECK(std::abs(mid.re - 2.0 / (std::numbers::pi * std::numbers::pi)) <= 1e-12);
  CHECK(std::abs(mid.im - 1.0 / std::numbers::pi) <= 1e-12);

  const ComplexScalar end = boundary_point(kTwoPi, Branch::Upper);
  CHECK(std::abs(end.re) <= 1e-12);
  CHECK(std::abs(end.im - 1.0 / kTwoPi) <= 1e-12);
}

TEST_CASE("series and closed form join smoothly at the switch point") {
  // Straddling t = 0.1: under the cutoff the series truncation is below
  // rounding, above it the closed form's cancellation error is eps/t^2 ~ 2e-14.
  const ComplexScalar below = boundary_point(0.1 * (1.0 - 1e-12), Branch::Upper);
  const ComplexScalar above = boundary_point(0.1 * (1.0 + 1e-12), Branch::Upper);
  CHECK(std::abs(below.re - above.re) <= 1e-13);
  CHECK(std::abs(below.im - above.im) <= 1e-13);
}

TEST_CASE("lower branch is the conjugate of the upper branch") {
  for (double t : {0.3, 1.0, 2.5, 4.0, 6.0}) {
    CAPTURE(t);
    const ComplexScalar up = boundary_point(t, Branch::Upper);
    const ComplexScalar dn = boundary_point(t, Branch::Lower);
    CHECK(up.re == dn.re);
    CHECK(up.im == -dn.im);
  }
}

TEST_CASE("segment branch runs up the imaginary axis") {
  const ComplexScalar a = boundary_point(0.0, Branch::Segment);
  CHECK(a.re == 0.0);
  CHECK(a.im == doctest::Approx(-1.0 / kTwoPi).epsilon(1e-14));
  const ComplexScalar b = boundary_point(kTwoPi, Branch::Segment);
  CHECK(b.im == doctest::Approx(1.0 / kTwoPi).epsilon(1e-14));
  const ComplexScalar m = boundary_point(std::numbers::pi, Branch::Segment);
  CHECK(m.re == 0.0);
  CHECK(std::abs(m.im) <= 1e-15);
}

TEST_CASE("boundary_point rejects parameters outside [0, 2*pi]") {
  CHECK_THROWS_AS(boundary_point(-0.1, Branch::Upper), std::domain_error);
  CHECK_THROWS_AS(boundary_point(kTwoPi + 0.1, Branch::Lower), std::domain_error);
}

TEST_CASE("support function values") {
  CHECK(support_function(0.0) == 0.5);
  CHECK(support_function(std::numbers::pi / 2) ==
        doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
  CHECK(std::abs(support_function(std::numbers::pi)) <= 1e-15);
  CHECK_THROWS_AS(support_function(4.0), std::domain_error);
}

TEST_CASE("support function dominates the sampled boundary") {
  // max Re(e^{i theta} z) over boundary samples must match h(theta).
  const int n_theta = 64;
  const int n_samples = 4096;
  for (int k = 0; k < n_theta; ++k) {
    const double theta = -std::numbers::pi + kTwoPi * k / (n_theta - 1.0);
    double best = -1e300;
    for (int i = 0; i < n_samples; ++i) {
      const double t = kTwoPi * i / (n_samples - 1.0);
      for (Branch br : {Branch::Upper, Branch::Lower, Branch::Segment}) {
        const ComplexScalar z = boundary_point(t, br);
        best = std::max(best, z.re * std::cos(theta) - z.im * std::sin(theta));
      }
    }
    CAPTURE(theta);
    CHECK(std::abs(best - support_function(theta)) <= 1e-6);
  }
}

TEST_CASE("max of |z| over the range is 1/2 at z = 1/2") {
  const MaxOnW m = max_abs_on_w(0.0, 1.0, 0.0);
  CHECK(m.value == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(m.argmax.re == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(std::abs(m.argmax.im) <= 1e-5);
}

TEST_CASE("max of a constant is its modulus") {
  const MaxOnW m = max_abs_on_w(-3.25, 0.0, 0.0);
  CHECK(m.value == doctest::Approx(3.25).epsilon(1e-14));
}

TEST_CASE("max of |z^2| over the range is 1/4") {
  const MaxOnW m = max_abs_on_w(0.0, 0.0, 1.0);
  CHECK(m.value == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("max of the Crouzeix example polynomial") {
  // p(z) = z^2 + 0.685 z - 0.167: max over the range is |p(1/2)| = 0.4255.
  const MaxOnW m = max_abs_on_w(-0.167, 0.685, 1.0);
  CHECK(m.value == doctest::Approx(0.4255).epsilon(1e-9));
  CHECK(m.argmax.re == doctest::Approx(0.5).epsilon(1e-4));
  // Perturbing tau moves the max accordingly.
  const MaxOnW m2 = max_abs_on_w(-0.167316, 0.685, 1.0);
  CHECK(m2.value == doctest::Approx(0.425184).epsilon(1e-6));
}

TEST_CASE("crouzeix_ratio at the example point") {
  const CrouzeixReport r = crouzeix_ratio({0.685, -0.167});
  CHECK(r.norm == doctest::Approx(0.650094647).epsilon(1e-6));
  CHECK(r.max_on_w == doctest::Approx(0.4255).epsilon(1e-9));
  CHECK(r.ratio == doctest::Approx(1.527837009).epsilon(1e-5));
  CHECK(r.ratio == r.norm / r.max_on_w);  // definitionally exact
}

TEST_CASE("crouzeix_ratio of z^2") {
  const CrouzeixReport r = crouzeix_ratio({0.0, 0.0});
  CHECK(r.max_on_w == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(r.ratio == doctest::Approx(1.13765148742).epsilon(1e-6));
}

TEST_CASE("roots_to_coeffs") {
  const RealQuadPoly a = roots_to_coeffs(RootsKind::RealPair, 0.191, -0.876);
  CHECK(a.sigma == doctest::Approx(0.685).epsilon(1e-15));
  CHECK(a.tau == doctest::Approx(-0.167316).epsilon(1e-12));

  const RealQuadPoly b = roots_to_coeffs(RootsKind::ConjugatePair, 0.25, 0.5);
  CHECK(b.sigma == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(b.tau == doctest::Approx(0.3125).epsilon(1e-15));

  // (z - x1)(z - x2) vanishes at both zeros.
  const std::complex<double> z1(0.25, 0.5);
  const std::complex<double> v = (z1 + b.sigma) * z1 + b.tau;
  CHECK(std::abs(v) <= 1e-15);
}

TEST_CASE("ratios stay below 1 + sqrt(2) on spot checks") {
  const double bound = 1.0 + std::sqrt(2.0);
  std::mt19937_64 rng(29);
  for (int k = 0; k < 25; ++k) {
    const RealQuadPoly p{4.0 * u01(rng) - 2.0, 4.0 * u01(rng) - 2.0};
    CAPTURE(p.sigma);
    CAPTURE(p.tau);
    CHECK(crouzeix_ratio(p).ratio <= bound);
  }
}

TEST_CASE("max over the range dominates the value at zero") {
  // z = 0 lies in the closed range, so max |p| >= |p(0)| = |tau|.
  std::mt19937_64 rng(31);
  for (int k = 0; k < 50; ++k) {
    const double c0 = 4.0 * u01(rng) - 2.0;
    const double c1 = 4.0 * u01(rng) - 2.0;
    const MaxOnW m = max_abs_on_w(c0, c1, 1.0);
    CAPTURE(c0);
    CAPTURE(c1);
    CHECK(m.value >= std::abs(c0) - 1e-12);
    CHECK(m.value >= poly_abs(c0, c1, 1.0, m.argmax) - 1e-12);
  }
}

}  // TEST_SUITE
