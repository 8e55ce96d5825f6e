#include "vnorm/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "vnorm/numrange.hpp"
#include "vnorm/parallel.hpp"

namespace vnorm {

namespace {

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string point_name(const char* prefix, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s(%.6g, %.6g)", prefix, a, b);
  return buf;
}

}  // namespace

std::vector<CheckResult> verify_golden() {
  std::vector<CheckResult> checks;
  const double two_over_pi = 2.0 / std::numbers::pi;
  checks.push_back(make_check("norm_linear(0) = 2/pi", norm_linear({0.0, 0.0}).norm,
                              two_over_pi, 1e-9));
  checks.push_back(make_check("norm_imag_axis(0) = 2/pi", norm_imag_axis(0.0), two_over_pi, 1e-12));

  const Minimizer m = minimizer();
  checks.push_back(make_check("minimizer mu0", m.mu0, -0.2429626850, 1e-9));
  checks.push_back(make_check("minimizer min_norm", m.min_norm, 0.5495393994, 1e-9));
  checks.push_back(
      make_check("norm_linear(mu0+5)", norm_linear({m.mu0 + 5.0, 0.0}).norm, 5.265379338, 1e-8));
  checks.push_back(
      make_check("norm_linear(mu0-5)", norm_linear({m.mu0 - 5.0, 0.0}).norm, 5.253007667, 1e-8));

  const VSquaredNorm v2 = norm_v_squared();
  checks.push_back(make_check("norm_v_squared", v2.norm, 0.2844, 5e-5));
  checks.push_back(make_check("norm_quadratic(0,0) vs norm_v_squared",
                              norm_quadratic({0.0, 0.0}).norm, v2.norm, 1e-8));
  checks.push_back(make_check("norm_quadratic(0.685,-0.167)",
                              norm_quadratic({0.685, -0.167}).norm, 0.6501, 1e-3));
  checks.push_back(
      make_check("norm_monic_quadratic(-1,1)", norm_monic_quadratic({-1.0, 1.0}), 1.0, 1e-6));
  checks.push_back(make_check("norm_monic_quadratic(-1/8,1/8)",
                              norm_monic_quadratic({-0.125, 0.125}), 1.0, 1e-6));

  const CrouzeixReport best = crouzeix_ratio({0.685, -0.167});
  checks.push_back(make_check("crouzeix(0.685,-0.167) max_on_w", best.max_on_w, 0.4255, 1e-3));
  checks.push_back(make_check("crouzeix(0.685,-0.167) ratio", best.ratio, 1.5278, 2e-3));
  const RealQuadPoly from_roots = roots_to_coeffs(RootsKind::RealPair, 0.191, -0.876);
  checks.push_back(make_check("crouzeix(roots 0.191,-0.876) ratio",
                              crouzeix_ratio(from_roots).ratio, 1.5258, 2e-3));
  return checks;
}

std::vector<CheckResult> verify_oracle(int n, int jobs, std::uint64_t seed) {
  const double tol = 20.0 / n;
  const int count = 100;
  std::mt19937_64 rng(seed);
  struct Point {
    double a, b;
    bool quadratic;
  };
  std::vector<Point> points;
  points.reserve(2 * count);
  for (int i = 0; i < count; ++i) {
    points.push_back({4.0 * u01(rng) - 2.0, 4.0 * u01(rng) - 2.0, true});
  }
  for (int i = 0; i < count; ++i) {
    points.push_back({6.0 * u01(rng) - 3.0, 6.0 * u01(rng) - 3.0, false});
  }

  std::vector<CheckResult> checks(points.size());
  parallel_for(points.size(), jobs, [&](std::size_t i) {
    const Point& pt = points[i];
    if (pt.quadratic) {
      const double analytic = norm_quadratic({pt.a, pt.b}).norm;
      const double oracle = oracle_norm({pt.b, 0.0}, {pt.a, 0.0}, {1.0, 0.0}, n, seed).value;
      checks[i] = make_check(point_name("quad sigma,tau=", pt.a, pt.b), analytic, oracle, tol);
    } else {
      const double analytic = norm_linear({pt.a, pt.b}).norm;
      const double oracle = oracle_norm({pt.a, pt.b}, {1.0, 0.0}, {0.0, 0.0}, n, seed).value;
      checks[i] = make_check(point_name("linear mu=", pt.a, pt.b), analytic, oracle, tol);
    }
  });
  return checks;
}

std::vector<CheckResult> verify_flat(std::uint64_t seed) {
  const int wanted = 200;
  std::mt19937_64 rng(seed);
  std::vector<MonicAtZeroQuad> points;
  points.reserve(wanted);
  int draws = 0;
  while (static_cast<int>(points.size()) < wanted && draws < 1000000) {
    ++draws;
    const MonicAtZeroQuad q{-3.0 * u01(rng), 4.0 * u01(rng)};
    if (flat_region_contains(q)) points.push_back(q);
  }

  std::vector<CheckResult> checks(points.size());
  parallel_for(points.size(), 0, [&](std::size_t i) {
    checks[i] = make_check(point_name("flat xi,eta=", points[i].xi, points[i].eta),
                           norm_monic_quadratic(points[i]), 1.0, 1e-6);
  });
  if (static_cast<int>(points.size()) < wanted) {
    checks.push_back(make_check("flat sampler yield", static_cast<double>(points.size()),
                                static_cast<double>(wanted), 0.0));
  }
  return checks;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void print_checks(const std::vector<CheckResult>& checks, std::ostream& os) {
  int passed = 0;
  for (const CheckResult& c : checks) {
    char buf[192];
    std::snprintf(buf, sizeof(buf), "%-44s got %.12g want %.12g tol %.2g  %s\n",
                  c.name.c_str(), c.got, c.want, c.tol, c.pass ? "PASS" : "FAIL");
    os << buf;
    if (c.pass) ++passed;
  }
  os << passed << '/' << checks.size() << " checks passed\n";
}

}  // namespace vnorm
