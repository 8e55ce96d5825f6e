#include "vnorm/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace vnorm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kBranchSamples = 4096;
constexpr int kSegmentSamples = 1024;

double clamp_parameter(double t) {
  if (t < 0.0 || t > kTwoPi + 1e-9) {
    throw std::domain_error("boundary_point: t must lie in [0, 2*pi]");
  }
  return std::min(t, kTwoPi);
}

// Maximizes g on [a, b] by golden-section search down to interval width tol;
// g is assumed unimodal on the (already bracketed) interval.
double golden_max(const std::function<double(double)>& g, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = g(c), fd = g(d);
  while (b - a > tol) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = g(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = g(c);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

ComplexScalar boundary_point(double t, Branch branch) {
  const double tt = clamp_parameter(t);
  if (branch == Branch::Segment) {
    return {0.0, (tt - std::numbers::pi) / (kTwoPi * std::numbers::pi)};
  }
  double re, im;
  if (tt < 0.1) {
    // Series around t = 0: the closed forms lose ~eps/t^2 digits to the
    // subtractions 1 - cos(t) and t - sin(t), while the truncated series stays
    // below double rounding everywhere under the cutoff.
    const double t2 = tt * tt;
    re = 0.5 + t2 * (-1.0 / 24.0 +
                     t2 * (1.0 / 720.0 + t2 * (-1.0 / 40320.0 + t2 / 3628800.0)));
    im = tt * (1.0 / 6.0 + t2 * (-1.0 / 120.0 + t2 * (1.0 / 5040.0 - t2 / 362880.0)));
  } else {
    re = (1.0 - std::cos(tt)) / (tt * tt);
    im = (tt - std::sin(tt)) / (tt * tt);
  }
  if (branch == Branch::Lower) im = -im;
  return {re, im};
}

double support_function(double theta) { return lumer_slope(theta); }

MaxOnW max_abs_on_w(double c0, double c1, double c2) {
  auto value_at = [&](ComplexScalar z) {
    const std::complex<double> w(z.re, z.im);
    return std::abs((c2 * w + c1) * w + c0);
  };

  // Coarse pass over the upper boundary curve and the upper half segment;
  // real coefficients make |p| conjugation-symmetric.
  double best_value = -1.0;
  bool best_on_segment = false;
  double best_param = 0.0;
  for (int i = 0; i < kBranchSamples; ++i) {
    const double t = kTwoPi * i / (kBranchSamples - 1);
    const double v = value_at(boundary_point(t, Branch::Upper));
    if (v > best_value) {
      best_value = v;
      best_on_segment = false;
      best_param = t;
    }
  }
  const double segment_top = 1.0 / kTwoPi;
  for (int j = 0; j < kSegmentSamples; ++j) {
    const double y = segment_top * j / (kSegmentSamples - 1);
    const double v = value_at({0.0, y});
    if (v > best_value) {
      best_value = v;
      best_on_segment = true;
      best_param = y;
    }
  }

  MaxOnW out;
  if (best_on_segment) {
    const double step = segment_top / (kSegmentSamples - 1);
    auto g = [&](double y) { return value_at({0.0, y}); };
    const double y_star = golden_max(g, std::max(0.0, best_param - step),
                                     std::min(segment_top, best_param + step), 1e-12);
    const double v = g(y_star);
    if (v >= best_value) {
      out.value = v;
      out.argmax = {0.0, y_star};
    } else {
      out.value = best_value;
      out.argmax = {0.0, best_param};
    }
  } else {
    const double step = kTwoPi / (kBranchSamples - 1);
    auto g = [&](double t) { return value_at(boundary_point(t, Branch::Upper)); };
    const double t_star = golden_max(g, std::max(0.0, best_param - step),
                                     std::min(kTwoPi, best_param + step), 1e-12);
    const double v = g(t_star);
    if (v >= best_value) {
      out.value = v;
      out.argmax = boundary_point(t_star, Branch::Upper);
    } else {
      out.value = best_value;
      out.argmax = boundary_point(best_param, Branch::Upper);
    }
  }
  return out;
}

CrouzeixReport crouzeix_ratio(const RealQuadPoly& p) {
  CrouzeixReport report;
  report.poly = p;
  report.norm = norm_quadratic(p).norm;
  const MaxOnW m = max_abs_on_w(p.tau, p.sigma, 1.0);
  report.max_on_w = m.value;
  report.argmax_z = m.argmax;
  report.ratio = report.norm / m.value;
  return report;
}

RealQuadPoly roots_to_coeffs(RootsKind kind, double u, double v) {
  if (kind == RootsKind::RealPair) return {-(u + v), u * v};
  return {-2.0 * u, u * u + v * v};
}

}  // namespace vnorm
