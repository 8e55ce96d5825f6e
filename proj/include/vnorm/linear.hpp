#pragma once

#include <complex>

namespace vnorm {

// A complex scalar mu = re + i*im, kept as a plain aggregate so call sites can
// write {alpha, beta}.
struct ComplexScalar {
  double re = 0.0;
  double im = 0.0;
};

inline std::complex<double> to_std(ComplexScalar z) { return {z.re, z.im}; }

// Solution of the norm equation for V + mu*I: the norm itself together with
// the auxiliary quantities rho and phi = rho / (1 - im^2 * rho^2) that solve
// cot(phi) = re * rho with phi in (0, pi).
struct LinearNormSolution {
  double norm = 0.0;
  double rho = 0.0;
  double phi = 0.0;
};

// Location and value of the global minimum of alpha -> ||V + alpha*I|| over
// the reals, plus the rho0 solving rho + tan(rho) = 0 on (pi/2, pi).
struct Minimizer {
  double mu0 = 0.0;
  double min_norm = 0.0;
  double rho0 = 0.0;
};

// ||V + mu*I|| = sqrt(re^2 + 1/rho^2), with rho obtained by solving
// cot(phi) = re * rho(phi) on phi in (0, pi).
LinearNormSolution norm_linear(ComplexScalar mu);

// ||I + nu*V||; equals 1 at nu = 0 and |nu| * norm_linear(1/nu) otherwise.
double norm_affine(ComplexScalar nu);

// Closed form ||V + i*beta*I|| = 1/pi + sqrt(beta^2 + 1/pi^2).
double norm_imag_axis(double beta);

// Global minimizer of the real-axis norm; mu0 = -1/rho0^2 and
// min_norm = sqrt(mu0^2 - mu0).
Minimizer minimizer();

// One-sided slope of r -> ||I + r e^{i theta} V|| at r = 0: sin(theta)/(2 theta),
// with the removable singularity filled (1/2 for |theta| < 1e-8).
// Throws std::domain_error for |theta| > pi.
double lumer_slope(double theta);

}  // namespace vnorm
