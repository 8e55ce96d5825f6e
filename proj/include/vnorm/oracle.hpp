#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "vnorm/linear.hpp"

namespace vnorm {

// Midpoint-rule discretization of integration from 0 to x at the nodes
// x_j = (j - 1/2)/n: weight 1/n strictly below the diagonal, 1/(2n) on it.
struct DiscreteVolterra {
  int n = 0;
  Eigen::MatrixXd weights;
};

// Throws std::domain_error for n < 2.
DiscreteVolterra discretize_volterra(int n);

// c2*M^2 + c1*M + c0*I as a dense complex matrix (one matrix multiply).
Eigen::MatrixXcd poly_of_matrix(const DiscreteVolterra& m, ComplexScalar c0, ComplexScalar c1,
                                ComplexScalar c2);

struct PowerIterResult {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;  // false: iteration cap hit; value is the last iterate
};

inline constexpr int kPowerIterCap = 10000;
inline constexpr std::uint64_t kDefaultOracleSeed = 42;

// Largest singular value by power iteration on A^H A from a deterministic
// seeded start vector; converged when successive Rayleigh quotients agree to
// a relative 1e-12, capped at kPowerIterCap iterations.
PowerIterResult operator_norm_2(const Eigen::MatrixXcd& a,
                                std::uint64_t seed = kDefaultOracleSeed);

// operator_norm_2(poly_of_matrix(discretize_volterra(n), c0, c1, c2)) computed
// matrix-free: the discretization applies in O(n) through prefix/suffix sums,
// which makes n = 4000 with thousands of iterations affordable. Agrees with
// the dense path to rounding (covered by tests).
PowerIterResult oracle_norm(ComplexScalar c0, ComplexScalar c1, ComplexScalar c2, int n,
                            std::uint64_t seed = kDefaultOracleSeed);

// Largest eigenvalue of the Hermitian part (e^{i theta} M + adjoint)/2 of the
// discretization, via the same iteration after a positive spectral shift
// (the 1-norm bound of M) that is subtracted from the result.
PowerIterResult oracle_support(double theta, int n, std::uint64_t seed = kDefaultOracleSeed);

}  // namespace vnorm
