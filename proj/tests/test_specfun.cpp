#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "guinand/specfun.hpp"
#include "oracles.hpp"

using namespace guinand::specfun;
using oracles::cplx;
constexpr double kPi = std::numbers::pi;

TEST_CASE("gamma at classic points") {
    CHECK(gamma_c({5.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_c({0.5, 0.0}).real() == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    CHECK(gamma_c({0.75, 0.0}).real() ==
          doctest::Approx(oracles::gamma_euler_integral(0.75)).epsilon(1e-8));
    CHECK(gamma_c({0.75, 0.0}).real() == doctest::Approx(1.2254167).epsilon(1e-6));
    CHECK_THROWS_AS(gamma_c({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(gamma_c({-3.0, 0.0}), std::domain_error);
}

TEST_CASE("gamma recurrence and conjugation on random points") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> re(0.1, 5.0), im(-20.0, 20.0);
    for (int i = 0; i < 50; ++i) {
        cplx z(re(rng), im(rng));
        cplx lhs = gamma_c(z + 1.0);
        cplx rhs = z * gamma_c(z);
        CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-12);
        CHECK(std::abs(gamma_c(std::conj(z)) - std::conj(gamma_c(z))) /
                  std::abs(gamma_c(z)) < 1e-13);
    }
}

TEST_CASE("log gamma consistent with gamma") {
    for (cplx z : {cplx(0.25, 7.0), cplx(3.0, -2.0), cplx(1.0, 30.0)}) {
        cplx g = std::exp(log_gamma_c(z));
        CHECK(std::abs(g - gamma_c(z)) / std::abs(g) < 1e-12);
    }
}

TEST_CASE("digamma classic values") {
    CHECK(digamma_c({1.0, 0.0}).real() ==
          doctest::Approx(-std::numbers::egamma).epsilon(1e-13));
    CHECK(digamma_c({0.5, 0.0}).real() ==
          doctest::Approx(-std::numbers::egamma - 2.0 * std::numbers::ln2).epsilon(1e-13));
    CHECK(digamma_c({0.25, 0.0}).real() ==
          doctest::Approx(-std::numbers::egamma - 3.0 * std::numbers::ln2 - kPi / 2.0)
              .epsilon(1e-13));
    CHECK_THROWS_AS(digamma_c({-2.0, 0.0}), std::domain_error);
}

TEST_CASE("digamma against the truncated partial-fraction expansion") {
    for (double t : {0.0, 1.0, 5.0}) {
        cplx w(0.25, 0.5 * t);
        cplx ref = oracles::digamma_partial_fraction(w, 1'000'000);
        CHECK(std::abs(digamma_c(w) - ref) < 1e-6);
    }
}

TEST_CASE("zeta at classic points and against the alternating-series oracle") {
    CHECK(zeta_c({2.0, 0.0}).real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));
    CHECK(zeta_c({3.0, 0.0}).real() ==
          doctest::Approx(oracles::zeta_borwein({3.0, 0.0}).real()).epsilon(1e-13));
    CHECK(zeta_c({3.0, 0.0}).real() == doctest::Approx(1.2020569).epsilon(1e-7));
    for (cplx s : {cplx(0.5, 3.0), cplx(1.5, 10.0), cplx(2.0, 25.0), cplx(0.3, 2.0)}) {
        cplx ref = oracles::zeta_borwein(s);
        CHECK(std::abs(zeta_c(s) - ref) / std::abs(ref) < 1e-10);
    }
    CHECK_THROWS_AS(zeta_c({1.0, 0.0}), std::domain_error);
}

TEST_CASE("completed zeta: values and functional equation") {
    CHECK(zeta_star({2.0, 0.0}).real() == doctest::Approx(kPi / 6.0).epsilon(1e-13));
    CHECK(zeta_star({3.0, 0.0}).real() == doctest::Approx(0.1913214).epsilon(1e-6));
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> re(0.1, 0.9), im(-8.0, 8.0);
    for (int i = 0; i < 20; ++i) {
        cplx s(re(rng), im(rng));
        cplx a = zeta_star(s), b = zeta_star(1.0 - s);
        CHECK(std::abs(a - b) / std::abs(a) < 1e-9);
    }
    cplx s(0.3, 2.0);
    CHECK(std::abs(zeta_star(s) - zeta_star(1.0 - s)) / std::abs(zeta_star(s)) < 1e-9);
}

TEST_CASE("bessel_k half-integer closed form") {
    double x = 2.0 * kPi;
    double ref = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
    CHECK(bessel_k({0.5, 0.0}, x).real() == doctest::Approx(ref).epsilon(1e-11));
    // K_{3/2}(x) = sqrt(pi/2x) e^{-x} (1 + 1/x)
    CHECK(bessel_k({1.5, 0.0}, 3.0).real() ==
          doctest::Approx(std::sqrt(kPi / 6.0) * std::exp(-3.0) * (1.0 + 1.0 / 3.0))
              .epsilon(1e-11));
}

TEST_CASE("bessel_k series oracle and evenness") {
    CHECK(bessel_k({0.0, 0.0}, 1.0).real() ==
          doctest::Approx(oracles::bessel_k0_series(1.0)).epsilon(1e-11));
    CHECK(bessel_k({0.0, 0.0}, 1.0).real() == doctest::Approx(0.4210244).epsilon(1e-7));
    cplx a = bessel_k({1.3, 2.0}, 3.0);
    cplx b = bessel_k({-1.3, -2.0}, 3.0);
    CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-14));
    CHECK(a.imag() == doctest::Approx(b.imag()).epsilon(1e-14));
    cplx c = bessel_k({1.3, -2.0}, 3.0);
    CHECK(c.real() == doctest::Approx(a.real()).epsilon(1e-14));
    CHECK(c.imag() == doctest::Approx(-a.imag()).epsilon(1e-14));
}

TEST_CASE("bessel_k three-term recurrence") {
    for (auto [s, x] : std::vector<std::pair<cplx, double>>{
             {{0.5, 0.0}, 3.0}, {{1.0, 1.0}, 5.0}, {{2.0, 0.0}, 8.0}}) {
        cplx lhs = bessel_k(s - 1.0, x) + 2.0 * s / x * bessel_k(s, x);
        cplx rhs = bessel_k(s + 1.0, x);
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-9);
    }
}

TEST_CASE("bessel_k double and MPFR paths agree where both are valid") {
    // Mild oscillation: both paths meet a 1e-9 target.
    for (double tau : {2.0, 4.0}) {
        cplx s(0.5, tau);
        cplx d = detail::bessel_k_forced(s, 2.0 * kPi, false, 1e-9);
        cplx m = detail::bessel_k_forced(s, 2.0 * kPi, true, 1e-9);
        CHECK(std::abs(d - m) / std::abs(m) < 1e-9);
    }
    // Strong cancellation: the MPFR path at two different tolerances is
    // self-consistent where double cannot reach.
    cplx s(0.5, 25.0);
    cplx m1 = detail::bessel_k_forced(s, 2.0 * kPi, true, 1e-10);
    cplx m2 = detail::bessel_k_forced(s, 2.0 * kPi, true, 1e-13);
    CHECK(std::abs(m1 - m2) / std::abs(m2) < 1e-10);
}

TEST_CASE("bessel_k domain errors") {
    CHECK_THROWS_AS(bessel_k({0.0, 0.0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k({0.0, 0.0}, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k({5.5, 0.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k({0.0, 50.0}, 1.0), std::domain_error);
}

TEST_CASE("zeta zero ordinates") {
    ZetaZeroList one = zeta_zeros(1);
    REQUIRE(one.ordinates.size() == 1);
    CHECK(one.ordinates[0] == doctest::Approx(14.134725).epsilon(1e-7));
    ZetaZeroList five = zeta_zeros(5);
    REQUIRE(five.ordinates.size() == 5);
    CHECK(five.ordinates[1] == doctest::Approx(21.022040).epsilon(1e-7));
    for (std::size_t i = 1; i < five.ordinates.size(); ++i)
        CHECK(five.ordinates[i] > five.ordinates[i - 1]);
    for (double g : five.ordinates)
        CHECK(std::abs(zeta_c({0.5, g})) < 1e-7);
    CHECK_THROWS_AS(zeta_zeros(0), std::invalid_argument);
    CHECK_THROWS_AS(zeta_zeros(101), std::invalid_argument);
}

TEST_CASE("hardy Z is real-valued rotation of zeta") {
    // |Z(t)| must equal |zeta(1/2 + it)|.
    for (double t : {5.0, 14.0, 17.0, 29.5}) {
        CHECK(std::abs(hardy_z(t)) ==
              doctest::Approx(std::abs(zeta_c({0.5, t}))).epsilon(1e-9));
    }
}
