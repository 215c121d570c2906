#pragma once

#include <complex>
#include <vector>

#include "guinand/policy.hpp"

namespace guinand::specfun {

using cplx = std::complex<double>;

// Gamma via a 9-term Lanczos approximation (g = 7), reflection for
// Re z < 1/2.  Relative accuracy ~1e-14 on the domain used here.
cplx gamma_c(cplx z);

// log Gamma, principal-branch pieces composed so the imaginary part is
// continuous along vertical lines in the right half-plane.
cplx log_gamma_c(cplx z);

// Digamma by upward recurrence into |z| >= 12 plus the asymptotic series.
cplx digamma_c(cplx z);

// Riemann zeta by Euler-Maclaurin; the cutoff scales with |Im s| so the
// routine stays accurate for the ordinate range used by the zero scan.
cplx zeta_c(cplx s);

// zeta*(s) = pi^{-s/2} Gamma(s/2) zeta(s); symmetric under s -> 1-s.
cplx zeta_star(cplx s);

struct BesselOptions {
    double rel_tol = 1e-12;
    // Results predicted to be below this magnitude are computed in plain
    // double precision (their absolute error is already negligible).
    double abs_floor = 0.0;
};

// Modified Bessel function of the second kind of complex order:
//   K(s, x) = integral_0^inf cosh(s t) exp(-x cosh t) dt,  x > 0.
// Trapezoidal quadrature of the entire integrand; when the oscillation of
// cosh(i Im(s) t) cancels more digits than double precision holds, the same
// quadrature runs in 50-digit MPFR arithmetic.  Supported: |Re s| <= 4.5,
// |Im s| <= 44, x >= 0.05.
cplx bessel_k(cplx s, double x, const BesselOptions& opt = {});

struct ZetaZeroList {
    std::vector<double> ordinates;  // strictly increasing positive ordinates
    double refine_tol = 1e-9;
};

// Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) log pi.
double riemann_siegel_theta(double t);

// Hardy Z(t) = exp(i theta(t)) zeta(1/2 + it); real for real t.
double hardy_z(double t);

// First `count` ordinates (count <= 100) by sign changes of Z on a 0.1 grid,
// bisection-refined.  The count is checked against the zero-counting
// estimate theta(T)/pi + 1; a persistent mismatch throws.
ZetaZeroList zeta_zeros(int count, double refine_tol = 1e-9);

namespace detail {
// Test hook: force the quadrature onto the double or MPFR path.
cplx bessel_k_forced(cplx s, double x, bool force_mp, double rel_tol = 1e-12);
}  // namespace detail

}  // namespace guinand::specfun
