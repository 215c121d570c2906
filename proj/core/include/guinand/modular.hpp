#pragma once

#include <vector>

#include "guinand/policy.hpp"
#include "guinand/report.hpp"

namespace guinand::modular {

// lambda(iy) = (theta2(iy) / theta3(iy))^4, strictly inside (0, 1).
double lambda_modular(double y);

// The special-value suite: lambda(i) = 1/2, theta3(i) = pi^{1/4}/Gamma(3/4),
// and the reciprocal relation lambda(i/M) = 1 - lambda(iM) for M in {2,3,5}.
std::vector<CheckResult> special_value_checks(double tol_rel = 1e-12);

// 16 beta(r) = theta2(ir)^4.
CheckResult beta_theta_link(double r, double tol_rel = 1e-12);

// F(N iy) = (theta3(iNy)/theta3(iy))^4 lambda(iNy); returns the factor and
// verifies the decomposition theta2^4(iNy) = F * theta3^4(iy) numerically.
double F_factor(int N, double y, CheckResult* decomposition = nullptr);

}  // namespace guinand::modular
