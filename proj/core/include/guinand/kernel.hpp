#pragma once

#include <complex>

#include "guinand/policy.hpp"
#include "guinand/report.hpp"
#include "guinand/specfun.hpp"

namespace guinand::kernel {

using cplx = std::complex<double>;

// g(v, x) = e^{v/2} exp(-(x/2)(e^v + e^{-v})); its Fourier transform in v
// is 2 K(1/2 + it, x).
double g_pair(double v, double x);

// G(v) in closed form: e^{v/2} alpha(e^v) beta(e^{-v}).
double G_closed(double v, const TruncationPolicy& policy = {});

// G(v) as the divisor-weighted double sum
//   sum_{j>=1} sum_{d|j} a(d) b(j/d) (j/d^2)^{1/4} g(v - log sqrt(j/d^2), 2 pi sqrt(j)),
// truncated at cfg.j_max.  Equal to G_closed by rearrangement; evaluated
// independently so the rearrangement is testable.
double G_series(double v, const KernelConfig& cfg = {});

// Ghat(t) = 2 sum_{j} sum_{d|j} a(d) b(j/d) (j/d^2)^{(1/2 + it)/2} K(1/2 + it, 2 pi sqrt(j)).
// Real t is the Fourier axis; imaginary t up to |Im t| <= 3 covers the
// boundary values (t = +-i/2) and the factorization checks.
cplx G_hat_series(cplx t, const KernelConfig& cfg = {});
cplx G_hat_series(cplx t, const KernelConfig& cfg,
                  const specfun::BesselOptions& bessel_opt);

// E(s) with E(s) zeta(s) = Ghat((s - 1/2)/i):
//   E(s) = 2 [s(s+1) / (32 pi^2 sqrt 2)] (2^{s/2} - 2^{-s/2})
//          (2^{(s-1)/2} - 2^{-(s-1)/2}) pi^{-s/2} Gamma(s/2) zeta*(s+1).
// The leading 2 comes from the Fourier pair ghat = 2K.
cplx E_factor(cplx s);

// Two-sided check of E(s) zeta(s) = Ghat((s-1/2)/i).  The ratio
// lhs/rhs is reported so a constant-factor mismatch would be visible.
CheckResult verify_factorization(cplx s, const KernelConfig& cfg = {},
                                 double tol_rel = 1e-6);

// Weight-8 variant: lhs = [s(s+2)(s+3)/(256 pi^3 sqrt 2)] 2^{s/2}
// (2^{(s-1)/2} - 2^{-(s-1)/2}) zeta*(s) zeta*(s+3); rhs is the double sum
// with B (the Cauchy square of b) in place of b and no factor 2.  The
// adjudicating output is the ratio; callers gate on ratio constancy in s.
CheckResult verify_weight8(cplx s, const KernelConfig& cfg = {});

}  // namespace guinand::kernel
