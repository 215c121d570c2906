#include <doctest.h>

#include <cmath>
#include <numbers>

#include "guinand/arith.hpp"
#include "guinand/kernel.hpp"
#include "guinand/quad.hpp"
#include "guinand/specfun.hpp"
#include "guinand/theta.hpp"

using namespace guinand;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST_CASE("g_pair values and symmetry") {
    CHECK(kernel::g_pair(0.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    double v = 1.3, x = 4.0;
    CHECK(std::exp(-v / 2.0) * kernel::g_pair(v, x) ==
          doctest::Approx(std::exp(v / 2.0) * kernel::g_pair(-v, x)).epsilon(1e-15));
    CHECK_THROWS_AS(kernel::g_pair(0.0, -1.0), std::domain_error);
}

TEST_CASE("Fourier transform of g is 2K(1/2+it, x)") {
    double t = 2.0, x = 3.0;
    auto re = [&](double v) { return std::cos(t * v) * kernel::g_pair(v, x); };
    auto im = [&](double v) { return std::sin(t * v) * kernel::g_pair(v, x); };
    double qr = 0.0, qi = 0.0;
    for (double a = -14.0; a < 14.0; a += 0.5) {
        qr += quad::gauss_panel(re, a, a + 0.5);
        qi += quad::gauss_panel(im, a, a + 0.5);
    }
    cplx ref = 2.0 * specfun::bessel_k({0.5, t}, x);
    CHECK(std::abs(cplx(qr, qi) - ref) / std::abs(ref) < 1e-9);
}

TEST_CASE("G closed form against the divisor double sum") {
    CHECK(kernel::G_closed(0.0) ==
          doctest::Approx(theta::alpha(1.0) * theta::beta(1.0)).epsilon(1e-14));
    CHECK(kernel::G_series(0.0) == doctest::Approx(kernel::G_closed(0.0)).epsilon(1e-10));
    CHECK(kernel::G_series(1.5) == doctest::Approx(kernel::G_closed(1.5)).epsilon(1e-9));
    CHECK(kernel::G_series(std::log(2.0)) ==
          doctest::Approx(std::sqrt(2.0) * theta::alpha(2.0) * theta::beta(0.5))
              .epsilon(1e-9));
    // reflection: e^{v/2} G(-v) = alpha(e^{-v}) beta(e^{v})
    double v = 1.3;
    CHECK(std::exp(v / 2.0) * kernel::G_series(-v) ==
          doctest::Approx(theta::alpha(std::exp(-v)) * theta::beta(std::exp(v)))
              .epsilon(1e-9));
    // decay
    CHECK(kernel::G_closed(8.0) < 1e-300);
}

TEST_CASE("Ghat at the boundary points and conjugate symmetry") {
    KernelConfig cfg;
    // t = i/2 makes every (j/d^2) power equal 1.
    cplx at_i2 = kernel::G_hat_series(cplx(0.0, 0.5), cfg);
    double direct = 0.0;
    for (int j = 1; j <= cfg.j_max; ++j) {
        double c = 0.0;
        for (auto [d, jd] : arith::divisor_pairs(static_cast<std::uint64_t>(j)))
            c += static_cast<double>(arith::coeff(arith::Kind::a, d) *
                                     arith::coeff(arith::Kind::b, jd));
        if (c != 0.0)
            direct += 2.0 * c *
                      specfun::bessel_k({0.0, 0.0}, 2.0 * kPi * std::sqrt(double(j))).real();
    }
    CHECK(at_i2.real() == doctest::Approx(direct).epsilon(1e-10));
    CHECK(std::abs(at_i2.imag()) < 1e-18);

    cplx plus = kernel::G_hat_series(cplx(3.0, 0.0), cfg);
    cplx minus = kernel::G_hat_series(cplx(-3.0, 0.0), cfg);
    CHECK(minus.real() == doctest::Approx(plus.real()).epsilon(1e-13));
    CHECK(minus.imag() == doctest::Approx(-plus.imag()).epsilon(1e-13));

    // leading term of Ghat(0) is 2 K(1/2, 2 pi)
    double lead = 2.0 * specfun::bessel_k({0.5, 0.0}, 2.0 * kPi).real();
    CHECK(lead == doctest::Approx(1.8674e-3).epsilon(1e-4));
    CHECK(kernel::G_hat_series(cplx(0.0, 0.0), cfg).real() > lead);

    CHECK_THROWS_AS(kernel::G_hat_series(cplx(0.0, 3.5), cfg), std::invalid_argument);
}

TEST_CASE("E factor zeros, conjugation, and the s = 2 identity") {
    CHECK(std::abs(kernel::E_factor({1.0, 0.0})) == 0.0);
    cplx s(2.0, 3.0);
    cplx a = kernel::E_factor(std::conj(s));
    cplx b = std::conj(kernel::E_factor(s));
    CHECK(std::abs(a - b) / std::abs(b) < 1e-13);
    CHECK_THROWS_AS(kernel::E_factor({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(kernel::E_factor({-1.0, 0.0}), std::domain_error);

    cplx lhs = kernel::E_factor({2.0, 0.0}) * specfun::zeta_c({2.0, 0.0});
    cplx rhs = kernel::G_hat_series(cplx(0.0, -1.5));
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-8);
}

TEST_CASE("factorization identity") {
    for (cplx s : {cplx(2.0, 0.0), cplx(3.0, 0.7)}) {
        auto c = kernel::verify_factorization(s, {}, 1e-7);
        CHECK(c.pass);
        CHECK(c.rel_err < 1e-8);
        CHECK(std::abs(c.ratio - cplx(1.0, 0.0)) < 1e-7);
    }
}

TEST_CASE("factorization identity on the sigma-t grid") {
    for (double sigma : {0.5, 1.5, 2.0}) {
        for (double t : {0.0, 5.0, 10.0, 20.0}) {
            cplx s(sigma, t);
            cplx lhs = kernel::E_factor(s) * specfun::zeta_c(s);
            if (std::abs(lhs) < 1e-30) continue;
            cplx rhs = kernel::G_hat_series((s - 0.5) / cplx(0.0, 1.0));
            CHECK(std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)) < 1e-6);
        }
    }
}

TEST_CASE("Ghat dips at the first zero ordinate") {
    auto zeros = specfun::zeta_zeros(1);
    double g = zeros.ordinates[0];
    double mid = std::abs(kernel::G_hat_series(cplx(g, 0.0)));
    double side = std::max(std::abs(kernel::G_hat_series(cplx(g - 0.5, 0.0))),
                           std::abs(kernel::G_hat_series(cplx(g + 0.5, 0.0))));
    CHECK(mid < 1e-3 * side);
}

TEST_CASE("truncation stability in j_max") {
    for (double t : {0.0, 10.0}) {
        KernelConfig base;
        KernelConfig doubled;
        doubled.j_max = 2 * base.j_max;
        cplx a = kernel::G_hat_series(cplx(t, 0.0), base);
        cplx b = kernel::G_hat_series(cplx(t, 0.0), doubled);
        CHECK(std::abs(a - b) / std::abs(b) < 1e-12);
    }
}

TEST_CASE("kernel config validation") {
    KernelConfig cfg;
    cfg.j_max = 10;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = KernelConfig{};
    CHECK_NOTHROW(cfg.validate());
    // tail bound honored by the default: exp(-2 pi sqrt(200)) << tail_epsilon
    CHECK(std::exp(-2.0 * kPi * std::sqrt(200.0)) < cfg.policy.tail_epsilon);
}

TEST_CASE("weight-8 variant has constant ratio (and the ratio is 1)") {
    std::vector<cplx> ratios;
    for (double s : {2.0, 2.5, 3.0}) {
        auto c = kernel::verify_weight8({s, 0.0});
        ratios.push_back(c.ratio);
        CHECK(std::abs(c.ratio - cplx(1.0, 0.0)) < 1e-4);
    }
    for (auto& r : ratios)
        CHECK(std::abs(r / ratios.front() - 1.0) < 1e-6);
}
