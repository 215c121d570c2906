// K(s, x) = integral_0^inf cosh(s t) exp(-x cosh t) dt for complex s, x > 0.
//
// The integrand is entire and even in t, so the infinite trapezoidal rule
// converges geometrically; step and truncation are sized from the strip
// bound exp(-(pi/2)(2 pi / h - |Im s|)).  The catch is cancellation: the
// integrand peaks near exp(-x) while |K| can be as small as
// exp(-pi |Im s| / 2), so roughly (pi |Im s| / 2 - x) / ln 10 decimal digits
// cancel.  When more than a couple of digits cancel, the identical sum runs
// in 50-digit MPFR arithmetic instead of double.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "guinand/specfun.hpp"

namespace guinand::specfun {

namespace {

namespace mp = boost::multiprecision;
using mp50 = mp::number<mp::mpfr_float_backend<50>, mp::et_off>;

constexpr double kPi = std::numbers::pi;
constexpr double kLn10 = 2.302585092994046;

struct QuadPlan {
    double h;        // initial trapezoid step
    double T;        // truncation point
    double conv_tol; // relative agreement required between refinements
    bool absolute;   // interpret conv_tol as an absolute bound
};

template <class Real>
cplx trapezoid(double sigma_d, double tau_d, double x_d, double h_d, double T) {
    using std::cos;
    using std::cosh;
    using std::exp;
    using std::sin;
    using std::sinh;
    const Real sigma = sigma_d, tau = tau_d, x = x_d, h = h_d;
    Real sre = exp(-x) / 2;  // t = 0 node of the even integrand
    Real sim = 0;
    const long n = static_cast<long>(T / h_d) + 1;
    for (long k = 1; k <= n; ++k) {
        Real t = h * k;
        Real e = exp(-x * cosh(t));
        if (e == 0) break;
        Real st = sigma * t, tt = tau * t;
        sre += cosh(st) * cos(tt) * e;
        sim += sinh(st) * sin(tt) * e;
    }
    return {static_cast<double>(sre * h), static_cast<double>(sim * h)};
}

template <class Real>
cplx refine(const QuadPlan& plan, double sigma, double tau, double x) {
    double h = plan.h;
    cplx prev = trapezoid<Real>(sigma, tau, x, h, plan.T);
    for (int iter = 0; iter < 5; ++iter) {
        h *= 0.5;
        cplx cur = trapezoid<Real>(sigma, tau, x, h, plan.T);
        double diff = std::abs(cur - prev);
        double bound = plan.absolute ? plan.conv_tol
                                     : plan.conv_tol * std::max(std::abs(cur), 1e-308);
        if (diff <= bound) return cur;
        prev = cur;
    }
    throw std::runtime_error("bessel_k: quadrature did not converge");
}

}  // namespace

cplx bessel_k(cplx s, double x, const BesselOptions& opt) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be > 0");
    const double sigma = std::abs(s.real());
    const double tau = std::abs(s.imag());
    if (sigma > 4.6 || tau > 44.0 || x < 0.05)
        throw std::domain_error("bessel_k: (s, x) outside the supported domain");
    if (!(opt.rel_tol > 0.0) || opt.rel_tol < 1e-14)
        throw std::invalid_argument("bessel_k: rel_tol must be in [1e-14, inf)");

    // K is even in s and conjugate-symmetric, so fold into the first
    // quadrant; a sign flip of exactly one of Re s, Im s conjugates K.
    const bool conjugate = (s.real() < 0.0) != (s.imag() < 0.0);

    // Magnitude estimate from the saddle of nu t - x cosh t, and the
    // integrand peak on the real axis; the gap is the cancellation loss.
    const cplx nu(sigma, tau);
    const cplx tstar = std::asinh(nu / x);
    const double mag_ln = (nu * tstar - x * std::cosh(tstar)).real();
    const double t0 = std::asinh(sigma / x);
    const double peak_ln = sigma * t0 - x * std::cosh(t0);
    const double loss_ln = std::max(0.0, peak_ln - mag_ln);

    // depth_ln: how far below the integrand peak the final accuracy target
    // sits.  Relative targets add the cancellation loss; an absolute floor
    // (opt.abs_floor, interpreted as an acceptable absolute error) may cap
    // the depth, which keeps callers that integrate over many K values on
    // the fast double path.
    const double rel_digits = -std::log10(opt.rel_tol);
    double depth_ln = rel_digits * kLn10 + loss_ln;
    bool absolute_mode = false;
    if (opt.abs_floor > 0.0) {
        double abs_depth = peak_ln - std::log(opt.abs_floor) + 2.0 * kLn10;
        if (abs_depth < depth_ln) {
            depth_ln = std::max(2.0 * kLn10, abs_depth);
            absolute_mode = true;
        }
    }
    const double total_digits = depth_ln / kLn10 + 3.0;

    QuadPlan plan;
    const double spread = tau + 0.6366 * (depth_ln + 10.0);
    plan.h = 2.0 * kPi / (1.25 * spread);
    const double drop = depth_ln + 12.0;
    double T = 1.0;
    while (T < 40.0 && sigma * T - x * std::cosh(T) > peak_ln - drop) T += 0.25;
    plan.T = T;
    plan.absolute = absolute_mode;
    plan.conv_tol = absolute_mode ? 0.5 * opt.abs_floor : opt.rel_tol;

    cplx k;
    if (total_digits <= 15.0) {
        k = refine<double>(plan, sigma, tau, x);
    } else if (total_digits <= 48.0) {
        k = refine<mp50>(plan, sigma, tau, x);
    } else {
        throw std::domain_error("bessel_k: cancellation exceeds the supported precision");
    }
    return conjugate ? std::conj(k) : k;
}

namespace detail {

cplx bessel_k_forced(cplx s, double x, bool force_mp, double rel_tol) {
    const double sigma = std::abs(s.real());
    const double tau = std::abs(s.imag());
    const bool conjugate = (s.real() < 0.0) != (s.imag() < 0.0);
    const cplx nu(sigma, tau);
    const cplx tstar = std::asinh(nu / x);
    const double mag_ln = (nu * tstar - x * std::cosh(tstar)).real();
    const double t0 = std::asinh(sigma / x);
    const double peak_ln = sigma * t0 - x * std::cosh(t0);
    const double loss_ln = std::max(0.0, peak_ln - mag_ln);
    const double rel_digits = -std::log10(rel_tol);

    QuadPlan plan;
    const double spread = tau + 0.6366 * (rel_digits * kLn10 + loss_ln + 10.0);
    plan.h = 2.0 * kPi / (1.25 * spread);
    const double drop = rel_digits * kLn10 + loss_ln + 12.0;
    double T = 1.0;
    while (T < 40.0 && sigma * T - x * std::cosh(T) > peak_ln - drop) T += 0.25;
    plan.T = T;
    plan.conv_tol = rel_tol;
    plan.absolute = false;

    cplx k = force_mp ? refine<mp50>(plan, sigma, tau, x)
                      : refine<double>(plan, sigma, tau, x);
    return conjugate ? std::conj(k) : k;
}

}  // namespace detail

}  // namespace guinand::specfun
