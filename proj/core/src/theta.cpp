#include "guinand/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "guinand/arith.hpp"

namespace guinand::theta {

namespace {

constexpr double kPi = std::numbers::pi;

// Direct series, valid for any y > 0 but fast only for y >~ 1.

double theta2_direct(double y) {
    double s = 0.0;
    for (int n = 0; n < 64; ++n) {
        double h = n + 0.5;
        double term = std::exp(-kPi * y * h * h);
        s += term;
        if (term < 1e-18 * s) break;
    }
    return 2.0 * s;
}

double theta3_direct(double y) {
    double s = 1.0;
    for (int n = 1; n < 64; ++n) {
        double term = std::exp(-kPi * y * static_cast<double>(n) * n);
        s += term;
        if (term < 1e-18 * s) break;
    }
    return s + (s - 1.0);  // 1 + 2 * sum
}

double theta4_direct(double y) {
    double s = 1.0;
    double tail = 0.0;
    for (int n = 1; n < 64; ++n) {
        double term = std::exp(-kPi * y * static_cast<double>(n) * n);
        tail += (n % 2 ? -2.0 : 2.0) * term;
        if (term < 1e-18) break;
    }
    return s + tail;
}

double theta_direct(int kind, double y) {
    switch (kind) {
        case 2: return theta2_direct(y);
        case 3: return theta3_direct(y);
        case 4: return theta4_direct(y);
        default: throw std::invalid_argument("theta: kind must be 2, 3 or 4");
    }
}

// d/dz log theta2(iz) for z >= 1.  theta2(iz) = 2 e^{-pi z/4} R(z) with
// R(z) = sum_{n>=0} e^{-pi z n(n+1)}; factoring the n = 0 term out keeps the
// ratio finite for arbitrarily large z.
double d2_log_deriv(double z) {
    double r = 1.0, dr = 0.0;
    for (int n = 1; n < 64; ++n) {
        double m = static_cast<double>(n) * (n + 1);
        double e = std::exp(-kPi * z * m);
        r += e;
        dr += -kPi * m * e;
        if (e < 1e-20 * r) break;
    }
    return -kPi / 4.0 + dr / r;
}

// d/dy log theta4(iy) by termwise differentiation, for y >= 1/4.
double d4_log_deriv_direct(double y) {
    double den = 1.0, num = 0.0;
    for (int n = 1; n < 64; ++n) {
        double m = static_cast<double>(n) * n;
        double e = std::exp(-kPi * y * m);
        double sgn = (n % 2 ? -2.0 : 2.0);
        den += sgn * e;
        num += sgn * (-kPi * m) * e;
        if (e < 1e-20) break;
    }
    return num / den;
}

// Cauchy product of two integer power series truncated to `len` terms.
std::vector<std::int64_t> cauchy(const std::vector<std::int64_t>& f,
                                 const std::vector<std::int64_t>& g,
                                 std::size_t len) {
    std::vector<std::int64_t> h(len, 0);
    for (std::size_t i = 0; i < len && i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; i + j < len && j < g.size(); ++j)
            h[i + j] += f[i] * g[j];
    }
    return h;
}

}  // namespace

double theta(int kind, double y) {
    if (!(y > 0.0)) throw std::domain_error("theta: y must be > 0");
    if (kind != 2 && kind != 3 && kind != 4)
        throw std::invalid_argument("theta: kind must be 2, 3 or 4");
    if (y >= 1.0) return theta_direct(kind, y);
    double t = 1.0 / y;
    int swapped = kind == 3 ? 3 : (kind == 2 ? 4 : 2);
    return std::sqrt(t) * theta_direct(swapped, t);
}

QExpansion theta_power_coeffs(int kind, int power, int nmax) {
    if (kind != 2 && kind != 3 && kind != 4)
        throw std::invalid_argument("theta_power_coeffs: kind must be 2, 3 or 4");
    if (power != 1 && power != 2 && power != 4 && power != 8)
        throw std::invalid_argument("theta_power_coeffs: power must be 1, 2, 4 or 8");
    if (nmax < 0 || nmax > 10'000)
        throw std::invalid_argument("theta_power_coeffs: nmax out of range");

    const std::size_t len = static_cast<std::size_t>(nmax) + 1;
    std::vector<std::int64_t> base(len, 0);
    if (kind == 2) {
        // S(q) = sum_{n>=0} q^{n(n+1)}
        for (std::uint64_t n = 0;; ++n) {
            std::uint64_t e = n * (n + 1);
            if (e >= len) break;
            base[e] += 1;
        }
    } else {
        base[0] = 1;
        for (std::uint64_t n = 1;; ++n) {
            std::uint64_t e = n * n;
            if (e >= len) break;
            base[e] += (kind == 3) ? 2 : (n % 2 ? -2 : 2);
        }
    }

    std::vector<std::int64_t> acc = base;
    for (int p = 1; p < power; p *= 2) acc = cauchy(acc, acc, len);

    if (kind == 2) {
        std::int64_t scale = std::int64_t{1} << power;
        for (auto& v : acc) v *= scale;
    }

    QExpansion q;
    q.kind = kind;
    q.power = power;
    q.q_offset_quarters = (kind == 2) ? power : 0;
    q.coefficients = std::move(acc);
    return q;
}

double log_deriv_theta4(double y) {
    if (!(y > 0.0)) throw std::domain_error("log_deriv_theta4: y must be > 0");
    if (y >= 0.25) return d4_log_deriv_direct(y);
    // theta4(iy) = y^{-1/2} theta2(i/y)
    return -0.5 / y - d2_log_deriv(1.0 / y) / (y * y);
}

double alpha(double u, const TruncationPolicy& policy) {
    if (!(u > 0.0)) throw std::domain_error("alpha: u must be > 0");
    policy.validate();
    if (u < 0.25) return log_deriv_theta4(u) / (2.0 * kPi);
    double s = 0.0;
    for (std::size_t k = 1; k <= policy.max_terms; ++k) {
        double term = static_cast<double>(arith::coeff(arith::Kind::a, k)) *
                      std::exp(-kPi * static_cast<double>(k) * u);
        s += term;
        if (k >= 4 && (term < policy.tail_epsilon * s || term == 0.0)) return s;
    }
    throw TruncationError("alpha: series did not meet tail target", s);
}

double beta(double u, const TruncationPolicy& policy) {
    if (!(u > 0.0)) throw std::domain_error("beta: u must be > 0");
    policy.validate();
    if (u < 1.0) {
        double t4 = theta_direct(4, 1.0 / u);
        double t44 = t4 * t4 * t4 * t4;
        return t44 / (16.0 * u * u);
    }
    double s = 0.0;
    for (std::size_t l = 1; l <= policy.max_terms; l += 2) {
        double term = static_cast<double>(arith::sigma1(l)) *
                      std::exp(-kPi * static_cast<double>(l) * u);
        s += term;
        if (l >= 3 && (term < policy.tail_epsilon * s || term == 0.0)) return s;
    }
    throw TruncationError("beta: series did not meet tail target", s);
}

}  // namespace guinand::theta
