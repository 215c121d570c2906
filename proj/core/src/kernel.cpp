#include "guinand/kernel.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "guinand/arith.hpp"
#include "guinand/specfun.hpp"
#include "guinand/theta.hpp"

namespace guinand::kernel {

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{j<=j_max} [sum_{d|j} a(d) w(j/d) (j/d^2)^{s/2}] K(s, 2 pi sqrt j)
// with w = b, or w = B for the weight-8 variant.  The Bessel factor decays
// like exp(-2 pi sqrt j), so the tail is cut once a crude envelope bound
// drops far below both the running sum and the accumulated term magnitudes
// (the latter keeps near-cancelling sums, e.g. at a zero ordinate, honest).
cplx weighted_bessel_sum(cplx s, const KernelConfig& cfg, bool weight8,
                         const specfun::BesselOptions& opt) {
    cfg.validate();
    const double sigma = s.real();
    const double eps = cfg.policy.tail_epsilon;

    std::vector<double> w(static_cast<std::size_t>(cfg.j_max) + 1, 0.0);
    if (weight8) {
        std::vector<double> b(w.size(), 0.0);
        for (int n = 1; n <= cfg.j_max; ++n)
            b[n] = static_cast<double>(arith::coeff(arith::Kind::b, n));
        for (int n = 2; n <= cfg.j_max; ++n) {
            double acc = 0.0;
            for (int i = 1; i < n; ++i) acc += b[i] * b[n - i];
            w[n] = acc;
        }
    } else {
        for (int n = 1; n <= cfg.j_max; ++n)
            w[n] = static_cast<double>(arith::coeff(arith::Kind::b, n));
    }

    cplx acc = 0.0;
    double cum_abs = 0.0;
    int below = 0;
    for (int j = 1; j <= cfg.j_max; ++j) {
        cplx coeff = 0.0;
        double coeff_abs = 0.0;
        for (auto [d, jd] : arith::divisor_pairs(static_cast<std::uint64_t>(j))) {
            double wv = w[jd];
            if (wv == 0.0) continue;
            double av = static_cast<double>(arith::coeff(arith::Kind::a, d));
            double base = static_cast<double>(j) / (static_cast<double>(d) * static_cast<double>(d));
            coeff += av * wv * std::pow(cplx(base, 0.0), s / 2.0);
            coeff_abs += av * wv * std::pow(base, sigma / 2.0);
        }
        const double x = 2.0 * kPi * std::sqrt(static_cast<double>(j));
        if (coeff_abs != 0.0) {
            cplx kv = specfun::bessel_k(s, x, opt);
            acc += coeff * kv;
            cum_abs += coeff_abs * std::abs(kv);
        }

        // Tail envelope: |K(s,x)| <= K(Re s, x) <= ~6 e^{-x + sigma^2/(2x)}.
        double env = 6.0 * std::exp(-x + sigma * sigma / (2.0 * x));
        double bound = coeff_abs * env;
        if (opt.abs_floor > 0.0 && bound < 0.02 * opt.abs_floor && j >= 9) break;
        if (j >= 16 && bound < eps * 1e-3 * std::max(cum_abs, std::abs(acc)))
            ++below;
        else
            below = 0;
        if (below >= 3) break;
    }
    return acc;
}

}  // namespace

double g_pair(double v, double x) {
    if (!(x > 0.0)) throw std::domain_error("g_pair: x must be > 0");
    return std::exp(0.5 * v - 0.5 * x * (std::exp(v) + std::exp(-v)));
}

double G_closed(double v, const TruncationPolicy& policy) {
    double ev = std::exp(v);
    return std::exp(0.5 * v) * theta::alpha(ev, policy) * theta::beta(1.0 / ev, policy);
}

double G_series(double v, const KernelConfig& cfg) {
    cfg.validate();
    double acc = 0.0;
    for (int j = 1; j <= cfg.j_max; ++j) {
        for (auto [d, jd] : arith::divisor_pairs(static_cast<std::uint64_t>(j))) {
            std::int64_t bv = arith::coeff(arith::Kind::b, jd);
            if (bv == 0) continue;
            std::int64_t av = arith::coeff(arith::Kind::a, d);
            double ratio = static_cast<double>(j) / (static_cast<double>(d) * static_cast<double>(d));
            // (j/d^2)^{1/4} g(v - T, 2 pi sqrt j) with T = (1/2) log (j/d^2)
            double shifted = v - 0.5 * std::log(ratio);
            acc += static_cast<double>(av * bv) * std::pow(ratio, 0.25) *
                   g_pair(shifted, 2.0 * kPi * std::sqrt(static_cast<double>(j)));
        }
    }
    return acc;
}

cplx G_hat_series(cplx t, const KernelConfig& cfg) {
    return G_hat_series(t, cfg, specfun::BesselOptions{});
}

cplx G_hat_series(cplx t, const KernelConfig& cfg,
                  const specfun::BesselOptions& bessel_opt) {
    if (std::abs(t.imag()) > 3.0)
        throw std::invalid_argument("G_hat_series: |Im t| must be <= 3");
    cplx s = cplx(0.5, 0.0) + cplx(0.0, 1.0) * t;
    return 2.0 * weighted_bessel_sum(s, cfg, false, bessel_opt);
}

cplx E_factor(cplx s) {
    if (s == cplx(0.0, 0.0) || s == cplx(-1.0, 0.0))
        throw std::domain_error("E_factor: pole at s = 0 or s = -1");
    const double ln2 = std::numbers::ln2;
    cplx f1 = std::exp(s / 2.0 * ln2) - std::exp(-s / 2.0 * ln2);
    cplx f2 = std::exp((s - 1.0) / 2.0 * ln2) - std::exp(-(s - 1.0) / 2.0 * ln2);
    cplx pref = s * (s + 1.0) / (32.0 * kPi * kPi * std::numbers::sqrt2);
    return 2.0 * pref * f1 * f2 * std::pow(kPi, -s / 2.0) *
           specfun::gamma_c(s / 2.0) * specfun::zeta_star(s + 1.0);
}

CheckResult verify_factorization(cplx s, const KernelConfig& cfg, double tol_rel) {
    cplx lhs = E_factor(s) * specfun::zeta_c(s);
    cplx rhs = 2.0 * weighted_bessel_sum(s, cfg, false, specfun::BesselOptions{});
    CheckResult c = CheckResult::make(
        "factorization@s=" + std::to_string(s.real()) +
            (s.imag() != 0.0 ? "+" + std::to_string(s.imag()) + "i" : ""),
        rhs, lhs, tol_rel);
    if (std::abs(rhs) > 0.0) c.ratio = lhs / rhs;
    return c;
}

CheckResult verify_weight8(cplx s, const KernelConfig& cfg) {
    cplx f = std::exp((s - 1.0) / 2.0 * std::numbers::ln2) -
             std::exp(-(s - 1.0) / 2.0 * std::numbers::ln2);
    cplx lhs = s * (s + 2.0) * (s + 3.0) /
               (256.0 * kPi * kPi * kPi * std::numbers::sqrt2) *
               std::exp(s / 2.0 * std::numbers::ln2) * f *
               specfun::zeta_star(s) * specfun::zeta_star(s + 3.0);
    cplx rhs = weighted_bessel_sum(s, cfg, true, specfun::BesselOptions{});
    CheckResult c = CheckResult::make(
        "weight8@s=" + std::to_string(s.real()), rhs, lhs, 1e-6);
    if (std::abs(rhs) > 0.0) c.ratio = lhs / rhs;
    return c;
}

}  // namespace guinand::kernel
