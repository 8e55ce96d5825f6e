#pragma once

#include <optional>
#include <vector>

#include "vnorm/linear.hpp"

namespace vnorm {

// Coefficients of p(V) = V^2 + sigma*V + tau*I.
struct RealQuadPoly {
  double sigma = 0.0;
  double tau = 0.0;
};

// Coefficients of q(V) = I + xi*V + eta*V^2.
struct MonicAtZeroQuad {
  double xi = 0.0;
  double eta = 0.0;
};

struct OmegaCaps {
  double cap0 = 0.0;
  double cap1 = 0.0;
  double cap2 = 0.0;
  double cap3 = 0.0;
};

// The frequencies omega1, omega2 attached to a candidate delta together with
// the cap values; when scaled, every cap carries the factor e^{-omega1} so it
// stays finite for arbitrarily small delta.
struct OmegaSystem {
  double delta = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double cap0 = 0.0;
  double cap1 = 0.0;
  double cap2 = 0.0;
  double cap3 = 0.0;
  bool scaled = true;
};

enum class QuadStatus { RootFound, NoRoot, ClosedForm };

const char* quad_status_name(QuadStatus s);

struct NormResult {
  double norm = 0.0;
  QuadStatus status = QuadStatus::NoRoot;
  std::optional<double> delta_star;  // largest root when status == RootFound
  std::vector<double> roots_found;   // all validated roots, ascending
};

struct QuadSolveOptions {
  int n_starts = 256;
  double tol = 1e-12;
};

// The unique positive solutions of
//   delta*w1^4 + (sigma^2 - 2 tau)*w1^2 - 1 = 0,
//   delta*w2^4 - (sigma^2 - 2 tau)*w2^2 - 1 = 0,
// evaluated in cancellation-free form. Throws std::domain_error for delta <= 0.
std::pair<double, double> omegas(const RealQuadPoly& p, double delta);

// cap0 = cosh w1 - cos w2, cap1 = w1 sinh w1 + w2 sin w2,
// cap2 = w1^2 cosh w1 + w2^2 cos w2, cap3 = w1^3 sinh w1 - w2^3 sin w2.
// With scaled = true each value is multiplied by e^{-w1}, which keeps every
// cap finite however large w1 grows.
OmegaCaps omega_caps(double omega1, double omega2, bool scaled);

// Convenience bundle of omegas + omega_caps for one delta.
OmegaSystem omega_system(const RealQuadPoly& p, double delta, bool scaled = true);

// Value and rounding-noise scale of the characteristic determinant. The
// determinant is the difference of two bracket products b1*b2 - b3*b4, and
// each bracket is itself a cancellation-prone sum; magnitude = B1*B2 + B3*B4
// with Bi the sum of the absolute term magnitudes of bracket i, so a computed
// value can be told apart from rounding noise only when it exceeds
// magnitude * O(eps).
struct CharValue {
  double value = 0.0;
  double magnitude = 0.0;
};

CharValue char_eval(const RealQuadPoly& p, double delta);

// The characteristic function whose largest positive root delta gives
// ||p(V)|| = sqrt(tau^2 + delta). Evaluated with scaled caps; since every term
// is a product of two cap-linear brackets, this equals e^{-2 omega1} times the
// literal determinant and has the same roots.
double char_fn(const RealQuadPoly& p, double delta);

// Literal (unscaled) evaluation; overflows for small delta, kept for
// cross-checking the scaled form where cosh(omega1) is representable.
double char_fn_unscaled(const RealQuadPoly& p, double delta);

// ||V^2 + sigma V + tau I|| through the largest validated root of char_fn on
// (delta_min, delta_max) with delta_max = (1+|sigma|+|tau|)^2 - tau^2; when no
// root survives, the norm is |tau|.
NormResult norm_quadratic(const RealQuadPoly& p, const QuadSolveOptions& opts = {});

struct VSquaredNorm {
  double norm = 0.0;
  double gamma0 = 0.0;
};

// ||V^2|| = gamma0^{-2} with gamma0 the smallest positive solution of
// cosh(g) cos(g) = -1.
VSquaredNorm norm_v_squared();

// ||I + xi V + eta V^2|| via the scaling
// |eta| * ||V^2 + (xi/eta) V + (1/eta) I|| (eta != 0), or norm_affine(xi).
double norm_monic_quadratic(const MonicAtZeroQuad& q);

// Same computation with the full solver report; for eta = 0 the status is
// ClosedForm and the root metadata is empty. delta_star and roots_found refer
// to the rescaled polynomial (sigma, tau) = (xi/eta, 1/eta).
NormResult norm_monic_quadratic_full(const MonicAtZeroQuad& q,
                                     const QuadSolveOptions& opts = {});

// True when (xi, eta) satisfies the three inequalities that force
// ||I + xi V + eta V^2|| = 1.
bool flat_region_contains(const MonicAtZeroQuad& q);

}  // namespace vnorm
