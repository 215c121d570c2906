#include <doctest.h>

#include <cmath>
#include <numbers>

#include "guinand/arith.hpp"
#include "guinand/specfun.hpp"
#include "guinand/theta.hpp"
#include "oracles.hpp"

using namespace guinand;
namespace th = guinand::theta;

namespace {
constexpr double kPi = std::numbers::pi;

// Test-local direct series, used as the oracle against the library's
// transformed path.
double theta_series(int kind, double y) {
    double s = kind == 2 ? 0.0 : 1.0;
    for (int n = 1; n < 200; ++n) {
        switch (kind) {
            case 2: break;
            case 3: s += 2.0 * std::exp(-kPi * y * n * n); break;
            case 4: s += (n % 2 ? -2.0 : 2.0) * std::exp(-kPi * y * n * n); break;
        }
    }
    if (kind == 2)
        for (int n = 0; n < 200; ++n) s += 2.0 * std::exp(-kPi * y * (n + 0.5) * (n + 0.5));
    return s;
}
}  // namespace

TEST_CASE("theta3(i) equals pi^{1/4}/Gamma(3/4)") {
    double closed = std::pow(kPi, 0.25) / specfun::gamma_c({0.75, 0.0}).real();
    CHECK(th::theta(3, 1.0) == doctest::Approx(closed).epsilon(1e-14));
}

TEST_CASE("theta4 tends to 1 and theta2(i) = theta4(i)") {
    CHECK(std::abs(th::theta(4, 30.0) - 1.0) < 1e-15);
    CHECK(std::abs(th::theta(4, 40.0) - 1.0) < 1e-15);
    CHECK(th::theta(2, 1.0) == doctest::Approx(th::theta(4, 1.0)).epsilon(1e-14));
    CHECK(th::theta(2, 1.0) == doctest::Approx(0.9135791).epsilon(1e-7));
}

TEST_CASE("Jacobi identity theta3^4 = theta2^4 + theta4^4") {
    for (double y : {0.5, 1.0, 2.0, 5.0}) {
        double t2 = std::pow(th::theta(2, y), 4);
        double t3 = std::pow(th::theta(3, y), 4);
        double t4 = std::pow(th::theta(4, y), 4);
        CHECK(t3 == doctest::Approx(t2 + t4).epsilon(1e-12));
    }
}

TEST_CASE("modular transformation consistent with the direct series") {
    for (double y = 0.1; y <= 10.0; y *= 1.31) {
        for (int kind : {2, 3, 4}) {
            CHECK(th::theta(kind, y) ==
                  doctest::Approx(theta_series(kind, y)).epsilon(1e-12));
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(th::theta(3, 0.0), std::domain_error);
    CHECK_THROWS_AS(th::theta(3, -1.0), std::domain_error);
    CHECK_THROWS_AS(th::theta(5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(th::alpha(0.0), std::domain_error);
    CHECK_THROWS_AS(th::beta(-2.0), std::domain_error);
}

TEST_CASE("q-expansions") {
    SUBCASE("theta4^4 leading coefficients") {
        auto q = th::theta_power_coeffs(4, 4, 3);
        CHECK(q.coefficients == std::vector<std::int64_t>{1, -8, 24, -32});
        CHECK(q.q_offset_quarters == 0);
    }
    SUBCASE("theta2^4 with the prefactor folded in") {
        auto q = th::theta_power_coeffs(2, 4, 3);
        REQUIRE(q.length() == 4);
        CHECK(q.q_offset_quarters == 4);
        CHECK(q.coefficients[0] == 16);  // 16 b(1)
        CHECK(q.coefficients[1] == 0);   // 16 b(2)
        CHECK(q.coefficients[2] == 64);  // 16 b(3)
    }
    SUBCASE("theta3 base series") {
        auto q = th::theta_power_coeffs(3, 1, 4);
        CHECK(q.coefficients == std::vector<std::int64_t>{1, 2, 0, 0, 2});
    }
    SUBCASE("theta4^4 - 1 matches -8 c(k) for k <= 200") {
        auto q = th::theta_power_coeffs(4, 4, 200);
        for (std::uint64_t k = 1; k <= 200; ++k)
            CHECK(q.coefficients[k] == -8 * arith::coeff(arith::Kind::c, k));
    }
    SUBCASE("theta2^4 matches 16 b(n) for n <= 200") {
        auto q = th::theta_power_coeffs(2, 4, 199);
        for (std::uint64_t n = 1; n <= 200; ++n)
            CHECK(q.coefficients[n - 1] == 16 * arith::coeff(arith::Kind::b, n));
    }
    SUBCASE("theta2^8 matches 256 B(n)") {
        auto q = th::theta_power_coeffs(2, 8, 100);
        for (std::uint64_t n = 2; n <= 100; ++n)
            CHECK(q.coefficients[n - 2] == 256 * arith::coeff(arith::Kind::B, n));
    }
    SUBCASE("theta4^8 equals the square of theta4^4") {
        auto q4 = th::theta_power_coeffs(4, 4, 50);
        auto q8 = th::theta_power_coeffs(4, 8, 50);
        for (std::size_t k = 0; k <= 50; ++k) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i <= k; ++i) s += q4.coefficients[i] * q4.coefficients[k - i];
            CHECK(q8.coefficients[k] == s);
        }
    }
}

TEST_CASE("alpha against direct partial sums") {
    CHECK(th::alpha(1.0) == doctest::Approx(0.0472865).epsilon(1e-5));
    CHECK(th::alpha(1.0) == doctest::Approx(oracles::alpha_direct(1.0, 12)).epsilon(1e-12));
    // decay limit: alpha(u) ~ e^{-pi u}
    CHECK(th::alpha(10.0) / std::exp(-10.0 * kPi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("alpha accelerated path agrees with brute summation") {
    // u below the crossover: the library uses the log-derivative route;
    // the oracle sums the series directly.
    for (double u : {0.05, 0.1, 0.2, 0.249}) {
        int terms = static_cast<int>(60.0 / u);
        CHECK(th::alpha(u) == doctest::Approx(oracles::alpha_direct(u, terms)).epsilon(1e-12));
    }
}

TEST_CASE("alpha two-route agreement at u = 1/2") {
    // direct coefficient sum vs the theta4 log-derivative
    double via_theta = th::log_deriv_theta4(0.5) / (2.0 * kPi);
    CHECK(th::alpha(0.5) == doctest::Approx(via_theta).epsilon(1e-12));
}

TEST_CASE("beta values and two-path consistency") {
    double g34 = specfun::gamma_c({0.75, 0.0}).real();
    CHECK(th::beta(1.0) == doctest::Approx(kPi / (32.0 * std::pow(g34, 4))).epsilon(1e-12));
    CHECK(th::beta(2.0) == doctest::Approx(oracles::beta_direct(2.0, 9)).epsilon(1e-9));
    // u < 1 goes through the transformed theta4 path; compare with brute sums.
    for (double u : {1.0 / 3.0, 0.5, 0.9}) {
        int terms = static_cast<int>(60.0 / u);
        CHECK(th::beta(u) == doctest::Approx(oracles::beta_direct(u, terms)).epsilon(1e-12));
    }
}

TEST_CASE("log-derivative of theta4 is 2 pi alpha and positive") {
    CHECK(th::log_deriv_theta4(1.0) ==
          doctest::Approx(2.0 * kPi * th::alpha(1.0)).epsilon(1e-12));
    CHECK(th::log_deriv_theta4(2.0) ==
          doctest::Approx(2.0 * kPi * th::alpha(2.0)).epsilon(1e-12));
    CHECK(th::log_deriv_theta4(1.0) == doctest::Approx(0.2971113).epsilon(1e-6));
    CHECK(th::log_deriv_theta4(1.0) > 0.0);
    // central finite difference of log theta4
    double h = 1e-5;
    double fd = (std::log(th::theta(4, 1.0 + h)) - std::log(th::theta(4, 1.0 - h))) / (2.0 * h);
    CHECK(th::log_deriv_theta4(1.0) == doctest::Approx(fd).epsilon(1e-8));
    // y large: decays to zero from above
    CHECK(th::log_deriv_theta4(30.0) > 0.0);
    CHECK(th::log_deriv_theta4(30.0) < 1e-39);
    // modular branch against the termwise-series branch near the switch
    double y = 0.2499;
    double den = 0.0, num = 0.0;
    den = theta_series(4, y);
    for (int n = 1; n < 64; ++n) {
        double m = static_cast<double>(n) * n;
        num += (n % 2 ? -2.0 : 2.0) * (-kPi * m) * std::exp(-kPi * y * m);
    }
    CHECK(th::log_deriv_theta4(y) == doctest::Approx(num / den).epsilon(1e-12));
}

TEST_CASE("alpha and beta positive, strictly decreasing on a log grid") {
    double prev_a = 0.0, prev_b = 0.0;
    for (int i = 0; i < 100; ++i) {
        double u = 0.05 * std::pow(20.0 / 0.05, i / 99.0);
        double a = th::alpha(u), b = th::beta(u);
        CHECK(a > 0.0);
        CHECK(b > 0.0);
        if (i > 0) {
            CHECK(a < prev_a);
            CHECK(b < prev_b);
        }
        prev_a = a;
        prev_b = b;
    }
}

TEST_CASE("truncation policy validation") {
    TruncationPolicy p;
    p.tail_epsilon = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = TruncationPolicy{};
    p.max_terms = 4;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = TruncationPolicy{};
    CHECK_NOTHROW(p.validate());
}
