#include "vnorm/oracle.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

namespace vnorm {

DiscreteVolterra discretize_volterra(int n) {
  if (n < 2) throw std::domain_error("discretize_volterra: need n >= 2");
  DiscreteVolterra m;
  m.n = n;
  m.weights = Eigen::MatrixXd::Zero(n, n);
  const double below = 1.0 / n;
  const double diag = 0.5 / n;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) m.weights(j, k) = below;
    m.weights(j, j) = diag;
  }
  return m;
}

Eigen::MatrixXcd poly_of_matrix(const DiscreteVolterra& m, ComplexScalar c0, ComplexScalar c1,
                                ComplexScalar c2) {
  const std::complex<double> z0 = to_std(c0), z1 = to_std(c1), z2 = to_std(c2);
  const Eigen::MatrixXcd a = m.weights.cast<std::complex<double>>();
  Eigen::MatrixXcd out = z1 * a;
  out.diagonal().array() += z0;
  if (z2 != std::complex<double>(0.0)) out += z2 * (a * a);
  return out;
}

namespace {

using ApplyFn = std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

Eigen::VectorXcd seeded_start(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto u01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  Eigen::VectorXcd x(n);
  for (int i = 0; i < n; ++i) x(i) = std::complex<double>(1.0 + 0.1 * (u01() - 0.5), 0.0);
  x /= x.norm();
  return x;
}

// Power iteration on B = A^H A expressed through the two applications; returns
// sqrt of the converged Rayleigh quotient, i.e. the largest singular value of A.
PowerIterResult power_norm(int n, const ApplyFn& apply_a, const ApplyFn& apply_ah,
                           std::uint64_t seed) {
  Eigen::VectorXcd x = seeded_start(n, seed);
  Eigen::VectorXcd ax(n), y(n);
  PowerIterResult out;
  double lambda_prev = 0.0;
  for (int it = 1; it <= kPowerIterCap; ++it) {
    out.iterations = it;
    apply_a(x, ax);
    apply_ah(ax, y);
    const double lambda = x.dot(y).real();
    const double y_norm = y.norm();
    if (y_norm == 0.0) {
      out.value = 0.0;
      out.converged = true;
      return out;
    }
    if (it > 1 && std::abs(lambda - lambda_prev) < 1e-12 * std::abs(lambda)) {
      out.value = std::sqrt(std::max(lambda, 0.0));
      out.converged = true;
      return out;
    }
    lambda_prev = lambda;
    x = y / y_norm;
  }
  out.value = std::sqrt(std::max(lambda_prev, 0.0));
  out.converged = false;
  return out;
}

// (V x)_j = (sum_{k<=j} x_k)/n - x_j/(2n): running prefix sum.
void apply_volterra(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
  const Eigen::Index n = x.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double half = 0.5 * inv_n;
  std::complex<double> run(0.0);
  for (Eigen::Index j = 0; j < n; ++j) {
    run += x(j);
    y(j) = run * inv_n - x(j) * half;
  }
}

// (V^T x)_j = (sum_{k>=j} x_k)/n - x_j/(2n): running suffix sum.
void apply_volterra_t(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
  const Eigen::Index n = x.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double half = 0.5 * inv_n;
  std::complex<double> run(0.0);
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    run += x(j);
    y(j) = run * inv_n - x(j) * half;
  }
}

}  // namespace

PowerIterResult operator_norm_2(const Eigen::MatrixXcd& a, std::uint64_t seed) {
  const int n = static_cast<int>(a.rows());
  const Eigen::MatrixXcd ah = a.adjoint();
  ApplyFn apply_a = [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) { y = a * x; };
  ApplyFn apply_ah = [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) { y = ah * x; };
  return power_norm(n, apply_a, apply_ah, seed);
}

PowerIterResult oracle_norm(ComplexScalar c0, ComplexScalar c1, ComplexScalar c2, int n,
                            std::uint64_t seed) {
  if (n < 2) throw std::domain_error("oracle_norm: need n >= 2");
  const std::complex<double> z0 = to_std(c0), z1 = to_std(c1), z2 = to_std(c2);
  const bool quadratic = z2 != std::complex<double>(0.0);
  Eigen::VectorXcd t1(n), t2(n);
  ApplyFn apply_a = [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
    apply_volterra(x, t1);
    if (quadratic) {
      apply_volterra(t1, t2);
      y = z0 * x + z1 * t1 + z2 * t2;
    } else {
      y = z0 * x + z1 * t1;
    }
  };
  ApplyFn apply_ah = [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
    apply_volterra_t(x, t1);
    if (quadratic) {
      apply_volterra_t(t1, t2);
      y = std::conj(z0) * x + std::conj(z1) * t1 + std::conj(z2) * t2;
    } else {
      y = std::conj(z0) * x + std::conj(z1) * t1;
    }
  };
  return power_norm(n, apply_a, apply_ah, seed);
}

PowerIterResult oracle_support(double theta, int n, std::uint64_t seed) {
  if (std::abs(theta) > std::numbers::pi) {
    throw std::domain_error("oracle_support: theta must lie in [-pi, pi]");
  }
  if (n < 2) throw std::domain_error("oracle_support: need n >= 2");
  const std::complex<double> phase(std::cos(theta), std::sin(theta));
  // ||M||_1 = (n-1)/n + 1/(2n) bounds the spectrum of the Hermitian part, so
  // the shifted matrix is positive semidefinite and its top eigenvalue equals
  // its largest singular value.
  const double shift = (n - 1.0) / n + 0.5 / n;
  Eigen::VectorXcd t1(n), t2(n);
  ApplyFn apply_b = [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
    apply_volterra(x, t1);
    apply_volterra_t(x, t2);
    y = 0.5 * (phase * t1 + std::conj(phase) * t2) + shift * x;
  };
  PowerIterResult out = power_norm(n, apply_b, apply_b, seed);
  out.value -= shift;
  return out;
}

}  // namespace vnorm
