#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace vnorm {

using RealFn = std::function<double(double)>;

enum class RootStatus { Converged, NoSignChange, NonFinite, Diverged };

// Bracketed root-finding task: f is evaluated on [lo, hi]; tol is an absolute
// tolerance on x; max_iter caps the bisection steps.
struct RootTask {
  RealFn f;
  double lo = 0.0;
  double hi = 1.0;
  double tol = 1e-12;
  int max_iter = 200;
};

struct RootResult {
  RootStatus status = RootStatus::Converged;
  double root = 0.0;
  double residual = 0.0;  // |f(root)| when the status carries a usable point
  int iterations = 0;
};

inline bool converged(const RootResult& r) { return r.status == RootStatus::Converged; }

// Bisection on [task.lo, task.hi]. Needs a sign change (an exact zero at an
// endpoint counts); shrinks the bracket until its width drops below task.tol.
RootResult bisect(const RootTask& task);

// Newton iteration from x0 with a central-difference derivative
// (step h = max(1e-7, 1e-7*|x|), probes clamped into [guard_lo, guard_hi] so
// f is never evaluated outside the guards). Converged when the Newton step
// falls below tol; Diverged when an iterate leaves [guard_lo, guard_hi], the
// derivative degenerates, or max_iter runs out first.
RootResult newton_refine(const RealFn& f, double x0, double tol, int max_iter,
                         double guard_lo = -std::numeric_limits<double>::infinity(),
                         double guard_hi = std::numeric_limits<double>::infinity());

// All roots of f on [lo, hi]: Newton multistart from n_starts interior points
// plus bisection of every sign change on the (n_starts+2)-point grid; f is
// never evaluated outside [lo, hi]. Roots are kept only when
// |f(root)| <= 1e-9 * (1 + max(|f(lo)|, |f(hi)|)), then deduplicated within
// 10*tol (best residual wins) and sorted ascending.
std::vector<RootResult> scan_roots(const RealFn& f, double lo, double hi, int n_starts,
                                   double tol);

// Largest element of scan_roots, or empty when no root is detected.
std::optional<RootResult> largest_root_scan(const RealFn& f, double lo, double hi,
                                            int n_starts, double tol);

}  // namespace vnorm
