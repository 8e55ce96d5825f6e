#include "vnorm/rootfind.hpp"

#include <algorithm>
#include <cmath>

namespace vnorm {

namespace {

double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

RootResult bisect(const RootTask& task) {
  RootResult out;
  double a = task.lo, b = task.hi;
  double fa = task.f(a), fb = task.f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    out.status = RootStatus::NonFinite;
    out.root = std::isfinite(fa) ? b : a;
    out.residual = quiet_nan();
    return out;
  }
  if (fa == 0.0) {
    out.root = a;
    return out;
  }
  if (fb == 0.0) {
    out.root = b;
    return out;
  }
  if ((fa < 0.0) == (fb < 0.0)) {
    out.status = RootStatus::NoSignChange;
    out.root = std::abs(fa) <= std::abs(fb) ? a : b;
    out.residual = std::min(std::abs(fa), std::abs(fb));
    return out;
  }
  for (int it = 1; it <= task.max_iter; ++it) {
    out.iterations = it;
    const double mid = 0.5 * (a + b);
    const double fm = task.f(mid);
    if (!std::isfinite(fm)) {
      out.status = RootStatus::NonFinite;
      out.root = mid;
      out.residual = quiet_nan();
      return out;
    }
    if (fm == 0.0) {
      out.root = mid;
      out.residual = 0.0;
      return out;
    }
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
    if (b - a < task.tol) {
      out.root = 0.5 * (a + b);
      out.residual = std::abs(task.f(out.root));
      return out;
    }
  }
  out.status = RootStatus::Diverged;
  out.root = 0.5 * (a + b);
  out.residual = std::abs(task.f(out.root));
  return out;
}

RootResult newton_refine(const RealFn& f, double x0, double tol, int max_iter,
                         double guard_lo, double guard_hi) {
  RootResult out;
  double x = x0;
  for (int it = 1; it <= max_iter; ++it) {
    out.iterations = it;
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      out.status = RootStatus::Diverged;
      out.root = x;
      out.residual = quiet_nan();
      return out;
    }
    const double h = std::max(1e-7, 1e-7 * std::abs(x));
    // Difference probes stay inside the guard interval, where f is defined.
    const double xp = std::min(x + h, guard_hi);
    const double xm = std::max(x - h, guard_lo);
    const double d = (f(xp) - f(xm)) / (xp - xm);
    if (!std::isfinite(d) || d == 0.0) {
      out.status = RootStatus::Diverged;
      out.root = x;
      out.residual = std::abs(fx);
      return out;
    }
    const double step = fx / d;
    const double xn = x - step;
    if (!(xn >= guard_lo && xn <= guard_hi)) {
      out.status = RootStatus::Diverged;
      out.root = x;
      out.residual = std::abs(fx);
      return out;
    }
    x = xn;
    if (std::abs(step) < tol) {
      out.root = x;
      out.residual = std::abs(f(x));
      return out;
    }
  }
  out.status = RootStatus::Diverged;
  out.root = x;
  out.residual = std::abs(f(x));
  return out;
}

std::vector<RootResult> scan_roots(const RealFn& f, double lo, double hi, int n_starts,
                                   double tol) {
  // f is only guaranteed to be defined on [lo, hi], so Newton is guarded to
  // exactly that interval and never probes beyond it.
  const double width = hi - lo;
  const double guard_lo = lo;
  const double guard_hi = hi;

  // One shared grid: endpoints plus the n_starts interior Newton launch points.
  const int n_grid = n_starts + 2;
  std::vector<double> xs(n_grid), fs(n_grid);
  for (int k = 0; k < n_grid; ++k) {
    xs[k] = k == n_grid - 1 ? hi : lo + width * k / (n_grid - 1);
    fs[k] = f(xs[k]);
  }
  const double scale_lo = std::isfinite(fs.front()) ? std::abs(fs.front()) : 0.0;
  const double scale_hi = std::isfinite(fs.back()) ? std::abs(fs.back()) : 0.0;
  const double accept = 1e-9 * (1.0 + std::max(scale_lo, scale_hi));

  std::vector<RootResult> found;
  auto collect = [&](const RootResult& r) {
    if (!converged(r)) return;
    if (!(r.root >= lo && r.root <= hi)) return;
    if (!(r.residual <= accept)) return;
    found.push_back(r);
  };

  for (int k = 1; k <= n_starts; ++k) {
    collect(newton_refine(f, xs[k], tol, 100, guard_lo, guard_hi));
  }

  for (int k = 0; k + 1 < n_grid; ++k) {
    const double fa = fs[k], fb = fs[k + 1];
    if (!std::isfinite(fa) || !std::isfinite(fb)) continue;
    if (fa == 0.0) {
      collect({RootStatus::Converged, xs[k], 0.0, 0});
      continue;
    }
    if ((fa < 0.0) == (fb < 0.0)) continue;
    RootResult r = bisect({f, xs[k], xs[k + 1], tol, 200});
    if (converged(r)) {
      // Let Newton sharpen the residual, but never leave the bracket.
      RootResult pol = newton_refine(f, r.root, tol, 50, xs[k], xs[k + 1]);
      if (converged(pol) && pol.residual <= r.residual) r = pol;
    }
    collect(r);
  }
  if (fs.back() == 0.0) collect({RootStatus::Converged, hi, 0.0, 0});

  std::sort(found.begin(), found.end(),
            [](const RootResult& a, const RootResult& b) { return a.root < b.root; });
  std::vector<RootResult> unique;
  for (const RootResult& r : found) {
    if (!unique.empty() && std::abs(r.root - unique.back().root) < 10.0 * tol) {
      if (r.residual < unique.back().residual) unique.back() = r;
    } else {
      unique.push_back(r);
    }
  }
  return unique;
}

std::optional<RootResult> largest_root_scan(const RealFn& f, double lo, double hi,
                                            int n_starts, double tol) {
  std::vector<RootResult> roots = scan_roots(f, lo, hi, n_starts, tol);
  if (roots.empty()) return std::nullopt;
  return roots.back();
}

}  // namespace vnorm
