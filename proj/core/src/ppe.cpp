#include "guinand/ppe.hpp"

#include <cmath>
#include <numbers>

#include "guinand/arith.hpp"
#include "guinand/kernel.hpp"
#include "guinand/quad.hpp"
#include "guinand/specfun.hpp"
#include "guinand/theta.hpp"

namespace guinand::ppe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

int prime_sum_cutoff(double x, const TruncationPolicy& policy) {
    // Covers the e^{-pi n / x} envelope of the slow sum and the e^{-pi x n}
    // envelope of the fast one.
    double lg = std::log(1.0 / policy.tail_epsilon);
    double n1 = x / kPi * lg;
    double n2 = lg / (kPi * x);
    return static_cast<int>(std::ceil(std::max(n1, n2))) + 64;
}

}  // namespace

double lhs_prime_sum(double x, const TruncationPolicy& policy) {
    if (!(x > 0.0)) throw std::domain_error("lhs_prime_sum: x must be > 0");
    policy.validate();
    const int nmax = prime_sum_cutoff(x, policy);
    if (static_cast<std::size_t>(nmax) > policy.max_terms)
        throw TruncationError("lhs_prime_sum: cutoff exceeds max_terms", 0.0);
    double fast = 0.0, slow = 0.0;
    for (int n = 2; n <= nmax; ++n) {
        double lam = arith::von_mangoldt(static_cast<std::uint64_t>(n));
        if (lam == 0.0) continue;
        double xn = x * n;
        fast += lam * theta::alpha(xn, policy) * theta::beta(1.0 / xn, policy);
        slow += lam / n * theta::alpha(x / n, policy) * theta::beta(n / x, policy);
    }
    return std::sqrt(x) * (fast + slow);
}

double bessel_boundary_terms(double x, const KernelConfig& cfg) {
    if (!(x > 0.0)) throw std::domain_error("bessel_boundary_terms: x must be > 0");
    cfg.validate();
    double g_plus = 0.0;   // Ghat(i/2)  = 2 sum a b K(0, .)
    double g_minus = 0.0;  // Ghat(-i/2) = 2 sum a b (j/d^2)^{1/2} K(1, .)
    for (int j = 1; j <= cfg.j_max; ++j) {
        double c0 = 0.0, c1 = 0.0;
        for (auto [d, jd] : arith::divisor_pairs(static_cast<std::uint64_t>(j))) {
            std::int64_t bv = arith::coeff(arith::Kind::b, jd);
            if (bv == 0) continue;
            double ab = static_cast<double>(arith::coeff(arith::Kind::a, d) * bv);
            c0 += ab;
            c1 += ab * std::sqrt(static_cast<double>(j)) / static_cast<double>(d);
        }
        if (c0 == 0.0 && c1 == 0.0) continue;
        double xj = 2.0 * kPi * std::sqrt(static_cast<double>(j));
        double k0 = specfun::bessel_k(std::complex<double>(0.0, 0.0), xj).real();
        double k1 = specfun::bessel_k(std::complex<double>(1.0, 0.0), xj).real();
        g_plus += 2.0 * c0 * k0;
        g_minus += 2.0 * c1 * k1;
        if (c0 * k0 + c1 * k1 < cfg.policy.tail_epsilon * 1e-3 * (g_plus + g_minus) && j >= 16)
            break;
    }
    return std::sqrt(x) * g_plus + g_minus / std::sqrt(x);
}

namespace detail {

double archimedean_integrand(double v, double x, const TruncationPolicy& policy) {
    double ab = theta::alpha(x, policy) * theta::beta(1.0 / x, policy);
    if (v < 1e-7) return -1.5 * ab;  // J(1, x) = 0; limit J'(0)/2
    double ev = std::exp(v);
    double j = 2.0 * std::exp(-2.0 * v) * ab -
               std::exp(-v) * theta::alpha(x / ev, policy) * theta::beta(ev / x, policy) -
               theta::alpha(x * ev, policy) * theta::beta(1.0 / (x * ev), policy);
    return j / (1.0 - std::exp(-2.0 * v));
}

}  // namespace detail

double archimedean_log(double x, const TruncationPolicy& policy) {
    if (!(x > 0.0)) throw std::domain_error("archimedean_log: x must be > 0");
    policy.validate();
    const double ab = theta::alpha(x, policy) * theta::beta(1.0 / x, policy);
    auto f = [&](double v) { return detail::archimedean_integrand(v, x, policy); };

    // [0, 1] carries the removable singularity: fixed fine panels.
    double acc = 0.0;
    for (int i = 0; i < 4; ++i)
        acc += quad::gauss_panel(f, 0.25 * i, 0.25 * (i + 1));
    // Tail panels out to where every J component is dead; the slow piece
    // alpha(x e^{-v}) beta(e^v / x) peaks near v = log x, so the range must
    // scale with log x rather than stop at a fixed point.
    const double v_end = std::max(1.0, std::log(x)) + 24.0;
    const double w = policy.quad_step;
    for (double a = 1.0; a < v_end; a += w)
        acc += quad::gauss_panel(f, a, std::min(a + w, v_end));

    return std::sqrt(x) * acc - kEulerGamma * std::sqrt(x) * ab;
}

double archimedean_spectral(double x, const KernelConfig& cfg) {
    if (!(x > 0.0)) throw std::domain_error("archimedean_spectral: x must be > 0");
    cfg.validate();
    const double scale = std::abs(kernel::G_hat_series(std::complex<double>(0.0, 0.0), cfg).real());
    specfun::BesselOptions opt;
    opt.abs_floor = 1e-11 * scale;

    auto f = [&](double t) {
        double re_psi = specfun::digamma_c({0.25, 0.5 * t}).real();
        std::complex<double> gh = kernel::G_hat_series(std::complex<double>(t, 0.0), cfg, opt);
        std::complex<double> rot = std::exp(std::complex<double>(0.0, -t * std::log(x)));
        return re_psi * (rot * gh).real();
    };

    // Even integrand: integrate [0, T] and double.  Ghat decays at least
    // like exp(-pi t / 4); T = 30 puts the tail far below the target.
    const double T = 30.0;
    const double w = std::max(0.25, cfg.policy.quad_step);
    double acc = 0.0;
    for (double a = 0.0; a < T; a += w)
        acc += quad::gauss_panel(f, a, std::min(a + w, T), 16);
    return acc / kPi;
}

PPETerms V_of_x(double x, const KernelConfig& cfg, bool flip_archimedean_orientation) {
    if (!(x > 0.0)) throw std::domain_error("V_of_x: x must be > 0");
    cfg.validate();
    PPETerms t;
    t.x = x;
    t.lhs_prime_sum = lhs_prime_sum(x, cfg.policy);
    t.bessel_boundary = bessel_boundary_terms(x, cfg);
    double ab = theta::alpha(x, cfg.policy) * theta::beta(1.0 / x, cfg.policy);
    t.log_pi_term = -std::sqrt(x) * std::log(kPi) * ab;
    if (flip_archimedean_orientation) t.log_pi_term = -t.log_pi_term;
    t.archimedean = archimedean_log(x, cfg.policy);
    t.rhs_total = t.bessel_boundary + t.log_pi_term + t.archimedean;
    t.residual_abs = std::abs(t.lhs_prime_sum - t.rhs_total);
    double s = std::max(std::abs(t.lhs_prime_sum), std::abs(t.rhs_total));
    t.residual_rel = s > 0.0 ? t.residual_abs / s : 0.0;
    return t;
}

double bessel_eliminated_residual(double x, const KernelConfig& cfg) {
    if (!(x > 0.0)) throw std::domain_error("bessel_eliminated_residual: x must be > 0");
    PPETerms a = V_of_x(x, cfg);
    PPETerms b = V_of_x(1.0 / x, cfg);
    PPETerms one = V_of_x(1.0, cfg);
    const double comb = std::sqrt(x) + 1.0 / std::sqrt(x);
    double lhs = a.lhs_prime_sum + b.lhs_prime_sum - one.lhs_prime_sum * comb;
    double rhs = a.rhs_total + b.rhs_total - one.rhs_total * comb;
    return std::abs(lhs - rhs);
}

}  // namespace guinand::ppe
