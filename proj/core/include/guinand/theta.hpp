#pragma once

#include <cstdint>
#include <vector>

#include "guinand/policy.hpp"

namespace guinand::theta {

// Exact integer q-expansion of a theta power.  For kinds 3 and 4,
// coefficients[k] is the coefficient of q^k.  theta2 carries a fractional
// prefactor: theta2^p = 2^p q^{p/4} S(q)^p with S integral, and we store the
// coefficients of 2^p S(q)^p, so coefficients[k] belongs to q^{k + p/4}.
// q_offset_quarters records that offset (p for kind 2, 0 otherwise).
struct QExpansion {
    int kind = 3;             // theta index, one of {2, 3, 4}
    int power = 1;            // one of {1, 2, 4, 8}
    int q_offset_quarters = 0;
    std::vector<std::int64_t> coefficients;
    std::size_t length() const { return coefficients.size(); }
};

// theta_kind(iy) for y > 0, q = exp(-pi y).  Direct series for y >= 1; for
// y < 1 the modular transformation theta_k(iy) = y^{-1/2} theta_{k'}(i/y)
// (with 2 <-> 4 and 3 <-> 3) moves the evaluation into the fast regime.
double theta(int kind, double y);

QExpansion theta_power_coeffs(int kind, int power, int nmax);

// alpha(u) = sum_{k>=1} a(k) exp(-pi k u)
// beta(u)  = sum_{l>=1} b(l) exp(-pi l u)
// Direct summation for u above the crossover (1/4 for alpha, 1 for beta);
// below it, alpha goes through the log-derivative of theta4 and beta through
// beta(u) = theta4^4(i/u) / (16 u^2).
double alpha(double u, const TruncationPolicy& policy = {});
double beta(double u, const TruncationPolicy& policy = {});

// (d/dy) log theta4(iy).  Positive for all y > 0 and equal to
// 2*pi*alpha(y); decays like 2*pi*exp(-pi*y) as y grows.
double log_deriv_theta4(double y);

}  // namespace guinand::theta
