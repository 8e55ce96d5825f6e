#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vnorm/oracle.hpp"

namespace vnorm {

struct CheckResult {
  std::string name;
  double got = 0.0;
  double want = 0.0;
  double tol = 0.0;
  bool pass = false;
};

inline CheckResult make_check(std::string name, double got, double want, double tol) {
  const bool pass = std::abs(got - want) <= tol;
  return CheckResult{std::move(name), got, want, tol, pass};
}

// Analytic solvers against pinned reference constants.
std::vector<CheckResult> verify_golden();

// Random coefficient boxes against the discretization at size n with
// tolerance 20/n: 100 quadratics with (sigma, tau) in [-2,2]^2 and 100 linear
// mu in [-3,3]^2.
std::vector<CheckResult> verify_oracle(int n, int jobs = 0,
                                       std::uint64_t seed = kDefaultOracleSeed);

// 200 points rejection-sampled from the flat-norm region inside
// [-3,0]x[0,4]; each must give ||I + xi V + eta V^2|| = 1 to 1e-6.
std::vector<CheckResult> verify_flat(std::uint64_t seed = kDefaultOracleSeed);

bool all_pass(const std::vector<CheckResult>& checks);
void print_checks(const std::vector<CheckResult>& checks, std::ostream& os);

}  // namespace vnorm
