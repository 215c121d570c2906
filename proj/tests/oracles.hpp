#pragma once

// Test-only reference implementations, independent of the library's
// evaluation routes.

#include <complex>

namespace oracles {

using cplx = std::complex<double>;

// Alternating-series (Borwein) zeta; independent of Euler-Maclaurin.
// Accurate to ~1e-14 for Re s > 0 and moderate |Im s|.
cplx zeta_borwein(cplx s, int n = 60);

// Gamma(x) for real x > 0 by quadrature of the Euler integral.
double gamma_euler_integral(double x);

// Truncated partial-fraction digamma: log N - sum_{n=0}^{N} 1/(n+w).
cplx digamma_partial_fraction(cplx w, long n_terms);

// K_0(x) from the ascending series (x <= ~10).
double bessel_k0_series(double x);

// Direct partial sums of the coefficient-weighted exponential series.
double alpha_direct(double u, int terms);
double beta_direct(double u, int terms);

// Brute-force divisor sum.
long long sigma1_brute(long long n);

}  // namespace oracles
