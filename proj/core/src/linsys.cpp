#include "guinand/linsys.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "guinand/arith.hpp"
#include "guinand/parallel.hpp"
#include "guinand/ppe.hpp"
#include "guinand/specfun.hpp"
#include "guinand/theta.hpp"

namespace guinand::linsys {

namespace {
constexpr double kPi = std::numbers::pi;
}

double f_entry(int m, int n, const TruncationPolicy& policy) {
    if (m < 1 || n < 1) throw std::invalid_argument("f_entry: m, n must be >= 1");
    double mn = static_cast<double>(m) * n;
    double mn_term = theta::alpha(mn, policy) * theta::beta(1.0 / mn, policy);
    double ratio = static_cast<double>(m) / n;
    double ratio_term = theta::alpha(ratio, policy) * theta::beta(1.0 / ratio, policy) / n;
    return mn_term + ratio_term;
}

TMatrix build_system(int N, const KernelConfig& cfg) {
    if (N < 1 || N > 256) throw std::invalid_argument("build_system: N must be in [1, 256]");
    cfg.validate();
    TMatrix tm;
    tm.N = N;
    tm.cfg = cfg;
    tm.entries.assign(static_cast<std::size_t>(N) * N, 0.0);
    tm.rhs.assign(N, 0.0);
    parallel_for(static_cast<std::size_t>(N), [&](std::size_t row) {
        int m = static_cast<int>(row) + 1;
        for (int n = 1; n <= N; ++n)
            tm.entries[row * N + (n - 1)] = f_entry(m, n, cfg.policy);
        // f(m, n) carries no sqrt(m); the equation's sqrt(m) is absorbed
        // into the right side.
        tm.rhs[row] = ppe::V_of_x(static_cast<double>(m), cfg).rhs_total /
                      std::sqrt(static_cast<double>(m));
    });
    return tm;
}

std::vector<double> true_lambda(int N) {
    std::vector<double> lam(N);
    for (int n = 1; n <= N; ++n)
        lam[n - 1] = arith::von_mangoldt(static_cast<std::uint64_t>(n));
    return lam;
}

std::vector<double> mat_apply(const TMatrix& tm, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != tm.N)
        throw std::invalid_argument("mat_apply: size mismatch");
    std::vector<double> out(tm.N, 0.0);
    for (int m = 1; m <= tm.N; ++m) {
        double s = 0.0;
        for (int n = 1; n <= tm.N; ++n) s += tm.at(m, n) * v[n - 1];
        out[m - 1] = s;
    }
    return out;
}

std::vector<double> forward_residual(const TMatrix& tm, int n_tail) {
    if (n_tail < tm.N)
        throw std::invalid_argument("forward_residual: n_tail must be >= N");
    std::vector<double> r(tm.N, 0.0);
    parallel_for(static_cast<std::size_t>(tm.N), [&](std::size_t row) {
        int m = static_cast<int>(row) + 1;
        double s = 0.0;
        for (int n = 1; n <= n_tail; ++n) {
            double lam = arith::von_mangoldt(static_cast<std::uint64_t>(n));
            if (lam == 0.0) continue;
            double f = n <= tm.N ? tm.at(m, n) : f_entry(m, n, tm.cfg.policy);
            s += f * lam;
        }
        r[row] = std::abs(s - tm.rhs[row]);
    });
    return r;
}

std::vector<CheckResult> structure_checks(int n, const TruncationPolicy& policy) {
    if (n < 2) throw std::invalid_argument("structure_checks: n must be >= 2");
    std::vector<CheckResult> out;
    const double ab1 = theta::alpha(1.0, policy) * theta::beta(1.0, policy);
    const double diag = f_entry(n, n, policy);

    CheckResult asym = CheckResult::make(
        "diag-asymptotic@n=" + std::to_string(n), n * diag, ab1, 0.05);
    out.push_back(asym);

    double block = 0.0;
    for (int k = n + 1; k <= 2 * n - 1; ++k) block += f_entry(n, k, policy);
    const double bound = std::numbers::ln2 * theta::alpha(1.0, policy) * theta::beta(2.0, policy);

    CheckResult lower;
    lower.name = "block-lower-bound@n=" + std::to_string(n);
    lower.value = block;
    lower.expected = bound;
    lower.abs_err = std::abs(block - bound);
    lower.rel_err = bound > 0 ? lower.abs_err / bound : 0.0;
    lower.pass = block >= bound;
    out.push_back(lower);

    CheckResult dom;
    dom.name = "block-exceeds-diagonal@n=" + std::to_string(n);
    dom.value = block;
    dom.expected = diag;
    dom.abs_err = std::abs(block - diag);
    dom.rel_err = diag > 0 ? dom.abs_err / diag : 0.0;
    dom.pass = block > diag;
    out.push_back(dom);
    return out;
}

RecoveryResult solve_regularized(const TMatrix& tm, double ridge) {
    if (ridge < 0.0) throw std::invalid_argument("solve_regularized: ridge must be >= 0");
    const int n = tm.N;
    // Householder QR on the ridge-augmented stack [T; sqrt(ridge) I].
    // Solving the augmented least-squares problem avoids forming T^t T,
    // whose squared condition number would swamp the recovery.
    const int rows = ridge > 0.0 ? 2 * n : n;
    std::vector<double> a(static_cast<std::size_t>(rows) * n, 0.0);
    std::vector<double> b(rows, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = tm.entries[static_cast<std::size_t>(i) * n + j];
        b[i] = tm.rhs[i];
    }
    if (ridge > 0.0) {
        double sr = std::sqrt(ridge);
        for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(n + i) * n + i] = sr;
    }

    double pivot_min = 0.0, pivot_max = 0.0;
    for (int k = 0; k < n; ++k) {
        double norm = 0.0;
        for (int i = k; i < rows; ++i) {
            double v = a[static_cast<std::size_t>(i) * n + k];
            norm += v * v;
        }
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw std::runtime_error("solve_regularized: singular system (effective rank < N)");
        double akk = a[static_cast<std::size_t>(k) * n + k];
        double alpha = akk >= 0.0 ? -norm : norm;
        // Householder vector overwrites column k below the diagonal.
        double vkk = akk - alpha;
        a[static_cast<std::size_t>(k) * n + k] = vkk;
        double vnorm2 = vkk * vkk;
        for (int i = k + 1; i < rows; ++i) {
            double v = a[static_cast<std::size_t>(i) * n + k];
            vnorm2 += v * v;
        }
        for (int j = k + 1; j < n; ++j) {
            double dot = 0.0;
            for (int i = k; i < rows; ++i)
                dot += a[static_cast<std::size_t>(i) * n + k] * a[static_cast<std::size_t>(i) * n + j];
            double f = 2.0 * dot / vnorm2;
            for (int i = k; i < rows; ++i)
                a[static_cast<std::size_t>(i) * n + j] -= f * a[static_cast<std::size_t>(i) * n + k];
        }
        double dot = 0.0;
        for (int i = k; i < rows; ++i) dot += a[static_cast<std::size_t>(i) * n + k] * b[i];
        double f = 2.0 * dot / vnorm2;
        for (int i = k; i < rows; ++i) b[i] -= f * a[static_cast<std::size_t>(i) * n + k];
        // Stash the R diagonal (the pivot) in place of the used entry.
        a[static_cast<std::size_t>(k) * n + k] = alpha;
        double piv = std::abs(alpha);
        pivot_min = (k == 0) ? piv : std::min(pivot_min, piv);
        pivot_max = (k == 0) ? piv : std::max(pivot_max, piv);
        if (piv < 1e-290)
            throw std::runtime_error("solve_regularized: singular system (zero pivot)");
    }

    std::vector<double> xsol(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int k = i + 1; k < n; ++k) s -= a[static_cast<std::size_t>(i) * n + k] * xsol[k];
        xsol[i] = s / a[static_cast<std::size_t>(i) * n + i];
    }

    RecoveryResult res;
    res.N = n;
    res.ridge = ridge;
    res.lambda_hat = xsol;
    res.condition_estimate = pivot_max / pivot_min;
    std::vector<double> lam = true_lambda(n);
    res.errors_vs_true.resize(n);
    for (int i = 0; i < n; ++i) res.errors_vs_true[i] = std::abs(xsol[i] - lam[i]);
    std::vector<double> fwd = mat_apply(tm, xsol);
    double inf = 0.0;
    for (int i = 0; i < n; ++i) inf = std::max(inf, std::abs(fwd[i] - tm.rhs[i]));
    res.forward_residual_inf = inf;
    return res;
}

Psi0Comparison psi0_compare(int N, int zero_count) {
    if (N < 2) throw std::invalid_argument("psi0_compare: N must be >= 2");
    if (zero_count < 1 || zero_count > 100)
        throw std::invalid_argument("psi0_compare: zero_count must be in [1, 100]");
    Psi0Comparison out;
    for (int n = 2; n <= N; ++n)
        out.direct += arith::von_mangoldt(static_cast<std::uint64_t>(n));
    if (arith::is_prime_power(static_cast<std::uint64_t>(N)))
        out.direct -= 0.5 * arith::von_mangoldt(static_cast<std::uint64_t>(N));

    specfun::ZetaZeroList zeros = specfun::zeta_zeros(zero_count);
    const double x = static_cast<double>(N);
    double zero_sum = 0.0;
    // Conjugate zeros pair to 2 Re(N^rho / rho).
    for (double g : zeros.ordinates) {
        std::complex<double> rho(0.5, g);
        std::complex<double> term = std::exp(rho * std::log(x)) / rho;
        zero_sum += 2.0 * term.real();
    }
    // zetadot/zeta(0) = log(2 pi).
    out.explicit_side = x - zero_sum - std::log(2.0 * kPi) -
                        0.5 * std::log(1.0 - 1.0 / (x * x));
    out.gap_abs = std::abs(out.explicit_side - out.direct);
    out.gap_rel = out.gap_abs / std::abs(out.direct);
    return out;
}

}  // namespace guinand::linsys
