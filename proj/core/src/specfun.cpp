#include "guinand/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace guinand::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7,
};

bool near_nonpositive_integer(cplx z) {
    if (std::abs(z.imag()) > 1e-12) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-12;
}

cplx lanczos_series(cplx z) {
    // z already shifted by -1.
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    return x;
}

// Bernoulli numbers B_2k for k = 1..12.
constexpr double kB2k[12] = {
    1.0 / 6,    -1.0 / 30,     1.0 / 42,     -1.0 / 30,
    5.0 / 66,   -691.0 / 2730, 7.0 / 6,      -3617.0 / 510,
    43867.0 / 798, -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730,
};

}  // namespace

cplx gamma_c(cplx z) {
    if (near_nonpositive_integer(z))
        throw std::domain_error("gamma_c: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
        return kPi / (std::sin(kPi * z) * gamma_c(1.0 - z));
    }
    cplx zm = z - 1.0;
    cplx t = zm + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, zm + 0.5) * std::exp(-t) *
           lanczos_series(zm);
}

cplx log_gamma_c(cplx z) {
    if (near_nonpositive_integer(z))
        throw std::domain_error("log_gamma_c: pole at nonpositive integer");
    if (z.real() < 0.5)
        return std::log(kPi / std::sin(kPi * z)) - log_gamma_c(1.0 - z);
    cplx zm = z - 1.0;
    cplx t = zm + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t +
           std::log(lanczos_series(zm));
}

cplx digamma_c(cplx z) {
    if (near_nonpositive_integer(z))
        throw std::domain_error("digamma_c: pole at nonpositive integer");
    cplx acc = 0.0;
    if (z.real() < 0.0) {
        // psi(z) = psi(1 - z) - pi cot(pi z)
        return digamma_c(1.0 - z) - kPi / std::tan(kPi * z);
    }
    while (std::abs(z) < 12.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx s = std::log(z) - 0.5 * inv;
    cplx p = inv2;
    for (int k = 1; k <= 8; ++k) {
        s -= kB2k[k - 1] / (2.0 * k) * p;
        p *= inv2;
    }
    return acc + s;
}

cplx zeta_c(cplx s) {
    if (s == cplx(1.0, 0.0)) throw std::domain_error("zeta_c: pole at s = 1");
    const int n_cut = 10 + static_cast<int>(std::ceil(1.3 * std::abs(s.imag())));
    cplx sum = 0.0;
    for (int n = 1; n < n_cut; ++n)
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double logN = std::log(static_cast<double>(n_cut));
    const cplx n_ms = std::exp(-s * logN);  // N^{-s}
    sum += 0.5 * n_ms;
    sum += n_ms * static_cast<double>(n_cut) / (s - 1.0);  // N^{1-s}/(s-1)

    // Correction terms B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}; stop at
    // the smallest term (asymptotic series).
    cplx poch = s;                         // s(s+1)...(s+2k-2)
    cplx npow = n_ms / static_cast<double>(n_cut);  // N^{-s-2k+1}
    double fact = 2.0;                     // (2k)!
    double prev_mag = 1e300;
    for (int k = 1; k <= 12; ++k) {
        cplx term = kB2k[k - 1] / fact * poch * npow;
        double mag = std::abs(term);
        if (mag > prev_mag) break;
        sum += term;
        prev_mag = mag;
        if (mag < 1e-17 * std::abs(sum)) break;
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        npow /= static_cast<double>(n_cut) * n_cut;
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return sum;
}

cplx zeta_star(cplx s) {
    if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0))
        throw std::domain_error("zeta_star: pole at s = 0 or s = 1");
    return std::pow(kPi, -s / 2.0) * gamma_c(s / 2.0) * zeta_c(s);
}

double riemann_siegel_theta(double t) {
    if (std::abs(t) >= 10.0) {
        // Asymptotic series; picks the continuous branch, which the
        // zero-counting estimate requires.  Error < 1e-11 for t >= 10.
        double at = std::abs(t);
        double th = 0.5 * at * (std::log(at / (2.0 * kPi)) - 1.0) - kPi / 8.0 +
                    1.0 / (48.0 * at) + 7.0 / (5760.0 * at * at * at) +
                    31.0 / (80640.0 * std::pow(at, 5));
        return t >= 0 ? th : -th;
    }
    cplx lg = log_gamma_c(cplx(0.25, 0.5 * t));
    return lg.imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t) {
    cplx rot = std::exp(cplx(0.0, riemann_siegel_theta(t)));
    return (rot * zeta_c(cplx(0.5, t))).real();
}

ZetaZeroList zeta_zeros(int count, double refine_tol) {
    if (count < 1 || count > 100)
        throw std::invalid_argument("zeta_zeros: count must be in [1, 100]");
    if (!(refine_tol > 0.0))
        throw std::invalid_argument("zeta_zeros: refine_tol must be > 0");

    for (double step : {0.1, 0.05, 0.025}) {
        std::vector<double> found;
        double t_prev = 2.0;
        double z_prev = hardy_z(t_prev);
        double t = t_prev;
        while (static_cast<int>(found.size()) < count && t < 260.0) {
            t += step;
            double z = hardy_z(t);
            if (z_prev == 0.0 || z * z_prev < 0.0) {
                double lo = t_prev, hi = t;
                double zlo = z_prev;
                while (hi - lo > refine_tol) {
                    double mid = 0.5 * (lo + hi);
                    double zm = hardy_z(mid);
                    if (zm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if (zm * zlo < 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        zlo = zm;
                    }
                }
                found.push_back(0.5 * (lo + hi));
            }
            t_prev = t;
            z_prev = z;
        }
        if (static_cast<int>(found.size()) < count)
            throw std::runtime_error("zeta_zeros: scan range exhausted");

        // Zero-count cross-check on [0, T]: found must agree with the
        // counting estimate theta(T)/pi + 1 (|S(T)| stays near or below 1
        // at these heights, so allow that much slack before rescanning).
        double t_check = found.back() + 0.05;
        double estimate = riemann_siegel_theta(t_check) / kPi + 1.0;
        if (std::abs(estimate - static_cast<double>(count)) <= 1.2) {
            ZetaZeroList list;
            list.ordinates = std::move(found);
            list.refine_tol = refine_tol;
            return list;
        }
    }
    throw std::runtime_error("zeta_zeros: sign-change count disagrees with the counting estimate");
}

}  // namespace guinand::specfun
