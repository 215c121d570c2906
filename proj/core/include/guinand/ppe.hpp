#pragma once

#include "guinand/policy.hpp"

namespace guinand::ppe {

// Both sides of the prime power equation at translate parameter x, plus the
// decomposition of the right side.  rhs_total is the exact sum of the three
// component fields.
struct PPETerms {
    double x = 1.0;
    double lhs_prime_sum = 0.0;
    double bessel_boundary = 0.0;
    double log_pi_term = 0.0;
    double archimedean = 0.0;
    double rhs_total = 0.0;
    double residual_abs = 0.0;
    double residual_rel = 0.0;
};

// sqrt(x) [ sum_n Lambda(n) alpha(xn) beta(1/(xn))
//         + sum_n (Lambda(n)/n) alpha(x/n) beta(n/x) ].
double lhs_prime_sum(double x, const TruncationPolicy& policy = {});

// sqrt(x) Ghat(i/2) + (1/sqrt x) Ghat(-i/2), i.e.
//   sqrt(x)   * 2 sum_j sum_{d|j} a(d) b(j/d) K(0, 2 pi sqrt j)
// + 1/sqrt(x) * 2 sum_j sum_{d|j} a(d) b(j/d) (j/d^2)^{1/2} K(1, 2 pi sqrt j).
// A translate by log x multiplies Ghat(t) by x^{-it}, which at t = +-i/2
// gives x^{+-1/2}; the boundary value Ghat(i/2) is the one scaled by sqrt x.
double bessel_boundary_terms(double x, const KernelConfig& cfg = {});

// sqrt(x) integral_0^inf J(e^v, x)/(1 - e^{-2v}) dv
//   - euler_gamma sqrt(x) alpha(x) beta(1/x), with
// J(e^v, x) = 2 e^{-2v} alpha(x) beta(1/x)
//             - e^{-v} alpha(x e^{-v}) beta(e^v / x)
//             - alpha(x e^v) beta(e^{-v} / x).
// J vanishes at v = 0; the integrand extends continuously with value
// -(3/2) alpha(x) beta(1/x) there.
double archimedean_log(double x, const TruncationPolicy& policy = {});

// Same quantity from the spectral side:
// (1/2 pi) integral Re psi(1/4 + it/2) Re[x^{-it} Ghat(t)] dt.
// Independent evaluation route for archimedean_log.
double archimedean_spectral(double x, const KernelConfig& cfg = {});

// Full two-sided assembly:
// rhs = bessel_boundary - sqrt(x) log(pi) alpha(x) beta(1/x) + archimedean.
// flip_archimedean_orientation flips the sign of the log(pi) term, for
// diagnosing the orientation question only.
PPETerms V_of_x(double x, const KernelConfig& cfg = {},
                bool flip_archimedean_orientation = false);

// f(x) + f(1/x) - f(1)(sqrt x + 1/sqrt x) applied to both sides of the
// equation; the combination cancels the Bessel boundary terms and the
// returned value is the residual of what remains.
double bessel_eliminated_residual(double x, const KernelConfig& cfg = {});

namespace detail {
// Integrand of the digamma integral (after the 1/(1 - e^{-2v}) division),
// exposed for tests of the v -> 0 limit and the tail decay.
double archimedean_integrand(double v, double x, const TruncationPolicy& policy = {});
}  // namespace detail

}  // namespace guinand::ppe
