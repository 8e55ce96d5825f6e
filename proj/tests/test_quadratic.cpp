#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "vnorm/quadratic.hpp"

using namespace vnorm;

namespace {

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Residuals of the two defining quartics in omega.
double omega1_residual(const RealQuadPoly& p, double delta, double w) {
  const double c = p.sigma * p.sigma - 2.0 * p.tau;
  return delta * w * w * w * w + c * w * w - 1.0;
}

double omega2_residual(const RealQuadPoly& p, double delta, double w) {
  const double c = p.sigma * p.sigma - 2.0 * p.tau;
  return delta * w * w * w * w - c * w * w - 1.0;
}

}  // namespace

TEST_SUITE("quadratic") {

TEST_CASE("omegas at sigma = tau = 0") {
  auto [w1, w2] = omegas({0.0, 0.0}, 1.0);
  CHECK(w1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w2 == doctest::Approx(1.0).epsilon(1e-15));
  // delta w^4 = 1 at delta = 1/16 gives omega = 2.
  auto [v1, v2] = omegas({0.0, 0.0}, 1.0 / 16.0);
  CHECK(v1 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(v2 == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("omegas satisfy their quartics") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const RealQuadPoly p{4.0 * u01(rng) - 2.0, 4.0 * u01(rng) - 2.0};
    const double delta = std::pow(10.0, -6.0 + 7.0 * u01(rng));
    CAPTURE(p.sigma);
    CAPTURE(p.tau);
    CAPTURE(delta);
    auto [w1, w2] = omegas(p, delta);
    CHECK(w1 > 0.0);
    CHECK(w2 > 0.0);
    CHECK(std::abs(omega1_residual(p, delta, w1)) <= 1e-12 * (1.0 + delta * std::pow(w1, 4)));
    CHECK(std::abs(omega2_residual(p, delta, w2)) <= 1e-12 * (1.0 + delta * std::pow(w2, 4)));
  }
}

TEST_CASE("omegas rejects non-positive delta") {
  CHECK_THROWS_AS(omegas({0.0, 0.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(omegas({1.0, 1.0}, -0.5), std::domain_error);
}

TEST_CASE("unscaled caps at omega1 = omega2 = pi/2") {
  const double w = std::numbers::pi / 2;
  const OmegaCaps c = omega_caps(w, w, false);
  CHECK(c.cap0 == doctest::Approx(std::cosh(w)).epsilon(1e-14));  // cos(pi/2) = 0
  CHECK(c.cap1 == doctest::Approx(w * std::sinh(w) + w).epsilon(1e-14));
  CHECK(c.cap2 == doctest::Approx(w * w * std::cosh(w)).epsilon(1e-14));
  CHECK(c.cap3 == doctest::Approx(w * w * w * (std::sinh(w) - 1.0)).epsilon(1e-14));
}

TEST_CASE("small-omega caps follow their leading Taylor terms") {
  const double w = 1e-4;
  const OmegaCaps c = omega_caps(w, w, false);
  // cosh w - cos w = w^2 + O(w^6); w sinh w + w sin w = 2 w^2 + O(w^6);
  // w^2 cosh w + w^2 cos w = 2 w^2 + O(w^4); cap3 = w^3(sinh w - sin w) = O(w^6).
  // cap0 subtracts two values near 1, so its relative accuracy is ~eps/w^2.
  CHECK(c.cap0 == doctest::Approx(w * w).epsilon(1e-7));
  CHECK(c.cap1 == doctest::Approx(2.0 * w * w).epsilon(1e-8));
  CHECK(c.cap2 == doctest::Approx(2.0 * w * w).epsilon(1e-8));
  CHECK(std::abs(c.cap3) < 1e-16);
}

TEST_CASE("scaled caps stay finite for huge omega1") {
  const OmegaCaps c = omega_caps(800.0, 1.0, true);
  CHECK(std::isfinite(c.cap0));
  CHECK(std::isfinite(c.cap3));
  // e^{-w} cosh w -> 1/2 and the cos term is crushed by e^{-w}.
  CHECK(c.cap0 == 0.5);
  CHECK(c.cap2 == doctest::Approx(0.5 * 800.0 * 800.0).epsilon(1e-14));
}

TEST_CASE("scaled caps equal e^{-omega1} times the unscaled caps") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const double w1 = 0.1 + 8.0 * u01(rng);
    const double w2 = 0.1 + 8.0 * u01(rng);
    CAPTURE(w1);
    CAPTURE(w2);
    const OmegaCaps s = omega_caps(w1, w2, true);
    const OmegaCaps u = omega_caps(w1, w2, false);
    const double e1 = std::exp(-w1);
    // Each cap is a difference/sum of two terms that can cancel, so compare
    // at the scale of the un-cancelled term sums.
    const double m0 = e1 * (std::cosh(w1) + 1.0);
    const double m1 = e1 * (w1 * std::sinh(w1) + w2);
    const double m2 = e1 * (w1 * w1 * std::cosh(w1) + w2 * w2);
    const double m3 = e1 * (w1 * w1 * w1 * std::sinh(w1) + w2 * w2 * w2);
    CHECK(std::abs(s.cap0 - e1 * u.cap0) <= 1e-13 * m0);
    CHECK(std::abs(s.cap1 - e1 * u.cap1) <= 1e-13 * m1);
    CHECK(std::abs(s.cap2 - e1 * u.cap2) <= 1e-13 * m2);
    CHECK(std::abs(s.cap3 - e1 * u.cap3) <= 1e-13 * m3);
  }
}

TEST_CASE("omega_system bundles omegas and caps consistently") {
  const RealQuadPoly p{0.5, -0.3};
  const OmegaSystem sys = omega_system(p, 0.2);
  auto [w1, w2] = omegas(p, 0.2);
  CHECK(sys.omega1 == w1);
  CHECK(sys.omega2 == w2);
  CHECK(sys.scaled);
  const OmegaCaps c = omega_caps(w1, w2, true);
  CHECK(sys.cap0 == c.cap0);
  CHECK(sys.cap3 == c.cap3);
}

TEST_CASE("characteristic function for V^2 alone factors through the caps") {
  // At sigma = tau = 0 the determinant collapses to delta^2 (cap2^2 - cap1*cap3).
  for (double delta : {0.01, 0.05, 0.1, 0.5}) {
    CAPTURE(delta);
    const OmegaSystem s = omega_system({0.0, 0.0}, delta);
    const double expected = delta * delta * (s.cap2 * s.cap2 - s.cap1 * s.cap3);
    CHECK(char_fn({0.0, 0.0}, delta) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("characteristic root of V^2 sits at gamma0^{-4}") {
  const VSquaredNorm v2 = norm_v_squared();
  const double delta_star = 1.0 / std::pow(v2.gamma0, 4);
  const CharValue at_root = char_eval({0.0, 0.0}, delta_star);
  CHECK(std::abs(at_root.value) <= 1e-9 * at_root.magnitude);
}

TEST_CASE("scaled and unscaled characteristic evaluations agree") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) {
    const RealQuadPoly p{4.0 * u01(rng) - 2.0, 4.0 * u01(rng) - 2.0};
    const double delta = std::pow(10.0, -3.0 + 4.0 * u01(rng));
    const auto [w1, w2] = omegas(p, delta);
    if (w1 > 300.0) continue;  // unscaled form overflows
    CAPTURE(p.sigma);
    CAPTURE(p.tau);
    CAPTURE(delta);
    const double scaled = char_fn(p, delta);
    const double unscaled = char_fn_unscaled(p, delta);
    const double factor = std::exp(-2.0 * w1);
    const CharValue cv = char_eval(p, delta);
    // Compare at the common magnitude scale, not relatively: near roots both
    // values sit deep below their magnitudes.
    CHECK(std::abs(scaled - factor * unscaled) <= 1e-10 * (cv.magnitude + 1e-300));
  }
}

TEST_CASE("norm of V^2 and its gamma0") {
  const VSquaredNorm v2 = norm_v_squared();
  CHECK(v2.gamma0 == doctest::Approx(1.875104068712).epsilon(1e-11));
  CHECK(v2.norm == doctest::Approx(0.284412871855).epsilon(1e-10));
  CHECK(v2.norm == doctest::Approx(0.2844).epsilon(2e-4));
}

TEST_CASE("norm_quadratic at sigma = tau = 0 matches the closed form") {
  const NormResult r = norm_quadratic({0.0, 0.0});
  const VSquaredNorm v2 = norm_v_squared();
  REQUIRE(r.status == QuadStatus::RootFound);
  CHECK(r.norm == doctest::Approx(v2.norm).epsilon(1e-8));
  REQUIRE(r.delta_star.has_value());
  CHECK(*r.delta_star == doctest::Approx(1.0 / std::pow(v2.gamma0, 4)).epsilon(1e-8));
}

TEST_CASE("norm_quadratic on the flat example (-1, 1)") {
  const NormResult r = norm_quadratic({-1.0, 1.0});
  CHECK(r.status == QuadStatus::NoRoot);
  CHECK(r.norm == 1.0);
  CHECK(r.roots_found.empty());
  CHECK(!r.delta_star.has_value());
}

TEST_CASE("norm_quadratic at the Crouzeix example point") {
  const NormResult r = norm_quadratic({0.685, -0.167});
  REQUIRE(r.status == QuadStatus::RootFound);
  CHECK(r.norm == doctest::Approx(0.650094647).epsilon(1e-6));
  REQUIRE(r.delta_star.has_value());
  CHECK(*r.delta_star == doctest::Approx(0.394734050).epsilon(1e-6));
}

TEST_CASE("norm_quadratic resolves a many-root oscillatory case") {
  // At (2, -2) the characteristic function oscillates with frequency ~1/sqrt(delta),
  // so roots accumulate at delta -> 0; the scan resolves the leading ones and
  // must pin the largest, which alone determines the norm.
  const NormResult r = norm_quadratic({2.0, -2.0});
  REQUIRE(r.status == QuadStatus::RootFound);
  REQUIRE(r.delta_star.has_value());
  CHECK(*r.delta_star == doctest::Approx(1.213086024).epsilon(1e-5));
  CHECK(r.roots_found.size() >= 3);
  for (std::size_t i = 1; i < r.roots_found.size(); ++i) {
    CHECK(r.roots_found[i - 1] < r.roots_found[i]);
  }
  CHECK(r.roots_found.back() == *r.delta_star);
}

TEST_CASE("norm_quadratic properties on random coefficients") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const RealQuadPoly p{4.0 * u01(rng) - 2.0, 4.0 * u01(rng) - 2.0};
    CAPTURE(p.sigma);
    CAPTURE(p.tau);
    const NormResult r = norm_quadratic(p);
    CHECK(r.norm >= std::abs(p.tau));
    const double reach = 1.0 + std::abs(p.sigma) + std::abs(p.tau);
    const double delta_max = reach * reach - p.tau * p.tau;
    if (r.status == QuadStatus::RootFound) {
      REQUIRE(r.delta_star.has_value());
      CHECK(*r.delta_star > 0.0);
      CHECK(*r.delta_star <= delta_max);
      const CharValue cv = char_eval(p, *r.delta_star);
      CHECK(std::abs(cv.value) <= 1e-6 * (1.0 + cv.magnitude));
      CHECK(r.norm == doctest::Approx(std::hypot(p.tau, std::sqrt(*r.delta_star))));
    } else {
      CHECK(r.norm == std::abs(p.tau));
    }
  }
}

TEST_CASE("monic norms on pinned points") {
  CHECK(norm_monic_quadratic({0.0, 0.0}) == 1.0);
  CHECK(norm_monic_quadratic({-1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(norm_monic_quadratic({-0.05, 0.05}) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(norm_monic_quadratic({-0.125, 0.125}) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("monic norm scaling identity is exact") {
  // For eta != 0 the implementation is literally |eta| * norm_quadratic(...).
  const MonicAtZeroQuad q{0.7, -0.4};
  const NormResult full = norm_monic_quadratic_full(q);
  const NormResult base = norm_quadratic({q.xi / q.eta, 1.0 / q.eta});
  CHECK(full.norm == std::abs(q.eta) * base.norm);
  CHECK(full.status == base.status);
}

TEST_CASE("monic norm with eta = 0 reduces to the affine closed form") {
  const NormResult r = norm_monic_quadratic_full({2.0, 0.0});
  CHECK(r.status == QuadStatus::ClosedForm);
  CHECK(r.norm == doctest::Approx(norm_affine({2.0, 0.0})).epsilon(1e-12));
  CHECK(r.roots_found.empty());
}

TEST_CASE("flat_region_contains membership table") {
  CHECK(flat_region_contains({0.0, 0.0}));
  CHECK(flat_region_contains({-1.0, 1.0}));
  CHECK(flat_region_contains({-0.125, 0.125}));
  CHECK(!flat_region_contains({1.0, 1.0}));    // needs xi <= 0
  CHECK(!flat_region_contains({0.0, 3.0}));    // third inequality fails
  CHECK(!flat_region_contains({-2.0, 2.0}));   // second inequality fails
  CHECK(!flat_region_contains({-3.0, 0.1}));
}

TEST_CASE("norms are flat across sampled flat-region points") {
  std::mt19937_64 rng(33);
  int tested = 0;
  while (tested < 30) {
    const MonicAtZeroQuad q{-3.0 * u01(rng), 4.0 * u01(rng)};
    if (!flat_region_contains(q)) continue;
    ++tested;
    CAPTURE(q.xi);
    CAPTURE(q.eta);
    CHECK(norm_monic_quadratic(q) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

}  // TEST_SUITE
