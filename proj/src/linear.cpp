#include "vnorm/linear.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "vnorm/rootfind.hpp"

namespace vnorm {

namespace {

constexpr double kPhiEps = 1e-13;
constexpr double kPhiTol = 1e-13;
constexpr int kPreScanCells = 1024;

// The positive solution of beta^2 * phi * rho^2 + rho - phi = 0, written so it
// stays stable for small beta*phi (equals phi when beta = 0).
double rho_of_phi(double phi, double beta) {
  if (beta == 0.0) return phi;
  const double q = beta * phi;
  return 2.0 * phi / (1.0 + std::sqrt(1.0 + 4.0 * q * q));
}

}  // namespace

LinearNormSolution norm_linear(ComplexScalar mu) {
  const double alpha = mu.re;
  const double beta = mu.im;
  auto g = [&](double phi) {
    return std::cos(phi) / std::sin(phi) - alpha * rho_of_phi(phi, beta);
  };
  const double lo = kPhiEps;
  const double hi = std::numbers::pi - kPhiEps;

  // Dense pre-scan: g runs from ~+1/eps down to ~-1/eps, so at least one sign
  // change exists. Uniqueness of the solution is expected but not relied on:
  // the smallest phi (largest candidate norm) wins and extra brackets are
  // reported once.
  double bra = lo, brb = hi;
  bool have_bracket = false;
  int n_brackets = 0;
  double x_prev = lo, f_prev = g(lo);
  for (int k = 1; k <= kPreScanCells; ++k) {
    const double x = k == kPreScanCells ? hi : lo + (hi - lo) * k / kPreScanCells;
    const double fx = g(x);
    if (std::isfinite(f_prev) && std::isfinite(fx) &&
        (f_prev == 0.0 || (f_prev < 0.0) != (fx < 0.0))) {
      ++n_brackets;
      if (!have_bracket) {
        bra = x_prev;
        brb = x;
        have_bracket = true;
      }
    }
    x_prev = x;
    f_prev = fx;
  }
  static std::atomic<bool> warned{false};
  if (n_brackets > 1 && !warned.exchange(true)) {
    std::fprintf(stderr,
                 "vnorm: norm_linear found %d sign changes for mu=(%g,%g); "
                 "using the smallest phi\n",
                 n_brackets, alpha, beta);
  }

  RootResult r = bisect({g, bra, brb, kPhiTol, 200});
  RootResult polished = newton_refine(g, r.root, kPhiTol, 50, bra, brb);
  const double phi =
      (converged(polished) && polished.residual <= r.residual) ? polished.root : r.root;

  LinearNormSolution out;
  out.phi = phi;
  out.rho = rho_of_phi(phi, beta);
  out.norm = std::hypot(alpha, 1.0 / out.rho);
  return out;
}

double norm_affine(ComplexScalar nu) {
  const double m = std::hypot(nu.re, nu.im);
  if (m == 0.0) return 1.0;
  const ComplexScalar inv{(nu.re / m) / m, -(nu.im / m) / m};
  return m * norm_linear(inv).norm;
}

double norm_imag_axis(double beta) {
  const double inv_pi = 1.0 / std::numbers::pi;
  return inv_pi + std::hypot(beta, inv_pi);
}

Minimizer minimizer() {
  auto h = [](double rho) { return rho + std::tan(rho); };
  const double lo = std::numbers::pi / 2 + 1e-9;
  const double hi = std::numbers::pi - 1e-9;
  RootResult r = bisect({h, lo, hi, kPhiTol, 200});
  RootResult polished = newton_refine(h, r.root, kPhiTol, 50, lo, hi);
  const double rho0 =
      (converged(polished) && polished.residual <= r.residual) ? polished.root : r.root;
  Minimizer out;
  out.rho0 = rho0;
  out.mu0 = -1.0 / (rho0 * rho0);
  out.min_norm = std::sqrt(out.mu0 * out.mu0 - out.mu0);
  return out;
}

double lumer_slope(double theta) {
  if (std::abs(theta) > std::numbers::pi) {
    throw std::domain_error("lumer_slope: theta must lie in [-pi, pi]");
  }
  if (std::abs(theta) < 1e-8) return 0.5;
  return std::sin(theta) / (2.0 * theta);
}

}  // namespace vnorm
