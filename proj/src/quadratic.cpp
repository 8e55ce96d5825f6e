#include "vnorm/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vnorm/rootfind.hpp"

namespace vnorm {

const char* quad_status_name(QuadStatus s) {
  switch (s) {
    case QuadStatus::RootFound: return "RootFound";
    case QuadStatus::NoRoot: return "NoRoot";
    case QuadStatus::ClosedForm: return "ClosedForm";
  }
  return "Unknown";
}

std::pair<double, double> omegas(const RealQuadPoly& p, double delta) {
  if (!(delta > 0.0)) throw std::domain_error("omegas: delta must be positive");
  const double c = p.sigma * p.sigma - 2.0 * p.tau;
  const double s = std::sqrt(c * c + 4.0 * delta);
  // Quadratic-formula solutions for w = omega^2, each written in the branch
  // that avoids subtracting nearly equal quantities.
  const double w1 = c >= 0.0 ? 2.0 / (c + s) : (s - c) / (2.0 * delta);
  const double w2 = c >= 0.0 ? (c + s) / (2.0 * delta) : 2.0 / (s - c);
  return {std::sqrt(w1), std::sqrt(w2)};
}

OmegaCaps omega_caps(double omega1, double omega2, bool scaled) {
  const double w1 = omega1, w2 = omega2;
  OmegaCaps caps;
  if (scaled) {
    const double e1 = std::exp(-w1);
    const double e2 = std::exp(-2.0 * w1);
    const double ch = 0.5 * (1.0 + e2);  // e^{-w1} cosh(w1)
    const double sh = 0.5 * (1.0 - e2);  // e^{-w1} sinh(w1)
    caps.cap0 = ch - e1 * std::cos(w2);
    caps.cap1 = w1 * sh + e1 * w2 * std::sin(w2);
    caps.cap2 = w1 * w1 * ch + e1 * w2 * w2 * std::cos(w2);
    caps.cap3 = w1 * w1 * w1 * sh - e1 * w2 * w2 * w2 * std::sin(w2);
  } else {
    caps.cap0 = std::cosh(w1) - std::cos(w2);
    caps.cap1 = w1 * std::sinh(w1) + w2 * std::sin(w2);
    caps.cap2 = w1 * w1 * std::cosh(w1) + w2 * w2 * std::cos(w2);
    caps.cap3 = w1 * w1 * w1 * std::sinh(w1) - w2 * w2 * w2 * std::sin(w2);
  }
  return caps;
}

OmegaSystem omega_system(const RealQuadPoly& p, double delta, bool scaled) {
  const auto [w1, w2] = omegas(p, delta);
  const OmegaCaps caps = omega_caps(w1, w2, scaled);
  OmegaSystem sys;
  sys.delta = delta;
  sys.omega1 = w1;
  sys.omega2 = w2;
  sys.cap0 = caps.cap0;
  sys.cap1 = caps.cap1;
  sys.cap2 = caps.cap2;
  sys.cap3 = caps.cap3;
  sys.scaled = scaled;
  return sys;
}

namespace {

CharValue char_from_caps(const RealQuadPoly& p, double delta, const OmegaCaps& c) {
  const double s = p.sigma, t = p.tau, d = delta;
  const double b1 = t * c.cap0 + s * t * c.cap1 - d * c.cap2;
  const double b2 =
      (t - s * s) * c.cap0 - s * (s * s - 2.0 * t) * c.cap1 - d * c.cap2 - s * d * c.cap3;
  const double b3 = s * t * c.cap0 + (s * s * t - 2.0 * t * t - d) * c.cap1 + t * d * c.cap3;
  const double b4 = -s * c.cap0 + (t - s * s) * c.cap1 - d * c.cap3;
  const double p12 = b1 * b2;
  const double p34 = b3 * b4;
  // Rounding floor of the determinant: each bracket carries an absolute error
  // of order eps times the sum of its term magnitudes (the brackets themselves
  // cancel internally), so the determinant is only trustworthy above
  // eps * (B1*B2 + B3*B4) with Bi those term sums -- not above the often far
  // smaller eps * (|b1*b2| + |b3*b4|).
  const double a0 = std::abs(c.cap0), a1 = std::abs(c.cap1);
  const double a2 = std::abs(c.cap2), a3 = std::abs(c.cap3);
  const double sa = std::abs(s), ta = std::abs(t);
  const double m1 = ta * a0 + sa * ta * a1 + d * a2;
  const double m2 = (ta + sa * sa) * a0 + sa * (sa * sa + 2.0 * ta) * a1 + d * a2 + sa * d * a3;
  const double m3 = sa * ta * a0 + (sa * sa * ta + 2.0 * ta * ta + d) * a1 + ta * d * a3;
  const double m4 = sa * a0 + (ta + sa * sa) * a1 + d * a3;
  return {p12 - p34, m1 * m2 + m3 * m4};
}

}  // namespace

CharValue char_eval(const RealQuadPoly& p, double delta) {
  const auto [w1, w2] = omegas(p, delta);
  return char_from_caps(p, delta, omega_caps(w1, w2, true));
}

double char_fn(const RealQuadPoly& p, double delta) { return char_eval(p, delta).value; }

double char_fn_unscaled(const RealQuadPoly& p, double delta) {
  const auto [w1, w2] = omegas(p, delta);
  return char_from_caps(p, delta, omega_caps(w1, w2, false)).value;
}

namespace {

constexpr double kSignificance = 512.0 * std::numeric_limits<double>::epsilon();

// True when the characteristic function provably changes sign across r at a
// magnitude resolvable in double precision. Near delta -> 0 the two bracket
// products of the determinant cancel to far below rounding noise, and the
// computed value wobbles around zero without the exact function having any
// root there; such wobbles never clear the |b1*b2| + |b3*b4| noise floor,
// while genuine simple roots do so already at tiny probe offsets.
bool significant_crossing(const RealQuadPoly& p, double r, double delta_max, double tol) {
  double h = std::max(32.0 * tol, 1e-12 * r);
  const double h_max = std::max(1e-4 * delta_max, 256.0 * h);
  for (; h <= h_max; h *= 4.0) {
    double lo = r - h;
    if (lo <= 0.0) lo = 0.5 * r;
    const CharValue a = char_eval(p, lo);
    const CharValue b = char_eval(p, r + h);
    if (std::abs(a.value) > kSignificance * a.magnitude &&
        std::abs(b.value) > kSignificance * b.magnitude) {
      return (a.value < 0.0) != (b.value < 0.0);
    }
  }
  return false;
}

std::vector<RootResult> validated_roots(const RealQuadPoly& p, double lo, double hi,
                                        int n_starts, double tol) {
  auto f = [&](double d) { return char_eval(p, d).value; };
  std::vector<RootResult> candidates = scan_roots(f, lo, hi, n_starts, tol);
  std::vector<RootResult> kept;
  for (const RootResult& r : candidates) {
    if (significant_crossing(p, r.root, hi, tol)) kept.push_back(r);
  }
  return kept;
}

void merge_roots(std::vector<RootResult>& into, const std::vector<RootResult>& more,
                 double tol) {
  into.insert(into.end(), more.begin(), more.end());
  std::sort(into.begin(), into.end(),
            [](const RootResult& a, const RootResult& b) { return a.root < b.root; });
  std::vector<RootResult> unique;
  for (const RootResult& r : into) {
    if (!unique.empty() && std::abs(r.root - unique.back().root) < 10.0 * tol) {
      if (r.residual < unique.back().residual) unique.back() = r;
    } else {
      unique.push_back(r);
    }
  }
  into = std::move(unique);
}

bool largest_agree(const std::vector<RootResult>& a, const std::vector<RootResult>& b,
                   double threshold) {
  if (a.empty() && b.empty()) return true;
  if (a.empty() != b.empty()) return false;
  return std::abs(a.back().root - b.back().root) <= threshold;
}

}  // namespace

NormResult norm_quadratic(const RealQuadPoly& p, const QuadSolveOptions& opts) {
  const double reach = 1.0 + std::abs(p.sigma) + std::abs(p.tau);
  const double delta_max = reach * reach - p.tau * p.tau;
  const double delta_min = 1e-10 * delta_max;

  // Two resolutions always, a third when their largest roots disagree: roots
  // may accumulate near zero, so coverage completeness is checked rather than
  // assumed.
  std::vector<RootResult> roots = validated_roots(p, delta_min, delta_max, opts.n_starts, opts.tol);
  std::vector<RootResult> finer =
      validated_roots(p, delta_min, delta_max, 2 * opts.n_starts, opts.tol);
  const bool agree = largest_agree(roots, finer, 1e-6 * delta_max);
  merge_roots(roots, finer, opts.tol);
  if (!agree) {
    merge_roots(roots, validated_roots(p, delta_min, delta_max, 4 * opts.n_starts, opts.tol),
                opts.tol);
  }

  NormResult out;
  out.roots_found.reserve(roots.size());
  for (const RootResult& r : roots) out.roots_found.push_back(r.root);
  if (!roots.empty()) {
    const double delta_star = roots.back().root;
    out.status = QuadStatus::RootFound;
    out.delta_star = delta_star;
    out.norm = std::hypot(p.tau, std::sqrt(delta_star));
  } else {
    out.status = QuadStatus::NoRoot;
    out.norm = std::abs(p.tau);
  }
  return out;
}

VSquaredNorm norm_v_squared() {
  auto g = [](double x) { return std::cosh(x) * std::cos(x) + 1.0; };
  const double lo = std::numbers::pi / 2;
  const double hi = std::numbers::pi;
  RootResult r = bisect({g, lo, hi, 1e-13, 200});
  RootResult polished = newton_refine(g, r.root, 1e-13, 50, lo, hi);
  const double gamma0 =
      (converged(polished) && polished.residual <= r.residual) ? polished.root : r.root;
  return {1.0 / (gamma0 * gamma0), gamma0};
}

NormResult norm_monic_quadratic_full(const MonicAtZeroQuad& q, const QuadSolveOptions& opts) {
  NormResult out;
  if (q.eta == 0.0) {
    out.status = QuadStatus::ClosedForm;
    out.norm = norm_affine({q.xi, 0.0});
    return out;
  }
  out = norm_quadratic({q.xi / q.eta, 1.0 / q.eta}, opts);
  out.norm *= std::abs(q.eta);
  return out;
}

double norm_monic_quadratic(const MonicAtZeroQuad& q) {
  return norm_monic_quadratic_full(q).norm;
}

bool flat_region_contains(const MonicAtZeroQuad& q) {
  const double xi = q.xi, eta = q.eta;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  if (!(xi <= 0.0)) return false;
  if (!(4.0 * eta * eta / pi2 - 2.0 * eta + xi * xi <= 0.0)) return false;
  return (4.0 * xi / pi2 - 1.0) * eta * eta + (xi * xi - 2.0 * xi) * eta + xi * xi * xi >= 0.0;
}

}  // namespace vnorm
