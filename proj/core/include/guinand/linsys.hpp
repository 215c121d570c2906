#pragma once

#include <vector>

#include "guinand/policy.hpp"
#include "guinand/report.hpp"

namespace guinand::linsys {

// Dense N x N truncation of the system T Lambda = V, with
// f(m, n) = alpha(mn) beta(1/(mn)) + (1/n) alpha(m/n) beta(n/m) and
// V(m) the right side of the prime power equation at x = m.
struct TMatrix {
    int N = 0;
    std::vector<double> entries;  // row-major, entries[(m-1)*N + (n-1)]
    std::vector<double> rhs;
    KernelConfig cfg{};

    double at(int m, int n) const { return entries[(m - 1) * static_cast<std::size_t>(N) + (n - 1)]; }
};

struct RecoveryResult {
    int N = 0;
    double ridge = 0.0;
    std::vector<double> lambda_hat;
    std::vector<double> errors_vs_true;  // |lambda_hat(n) - Lambda(n)|
    double condition_estimate = 0.0;     // ratio of extreme Cholesky pivots
    double forward_residual_inf = 0.0;   // max_m |(T lambda_hat - rhs)(m)|
};

double f_entry(int m, int n, const TruncationPolicy& policy = {});

// Fills entries via f_entry and rhs(m) via the prime power equation right
// side; rows fill in parallel.  N <= 256.
TMatrix build_system(int N, const KernelConfig& cfg = {});

// r(m) = |sum_{n<=n_tail} f(m,n) Lambda(n) - V(m)| with the tail
// n in (N, n_tail] computed on the fly, so truncation error and identity
// error stay separated.  Requires n_tail >= tm.N.
std::vector<double> forward_residual(const TMatrix& tm, int n_tail);

// Diagonal asymptotics and the off-diagonal block bound:
//   n f(n,n) -> alpha(1) beta(1),
//   sum_{k=n+1}^{2n-1} f(n,k) >= log 2 alpha(1) beta(2),
// plus the diagonal-dominance comparison block sum > f(n,n).
std::vector<CheckResult> structure_checks(int n, const TruncationPolicy& policy = {});

// Minimizes ||T x - rhs||^2 + ridge ||x||^2 by normal equations with a
// Cholesky factorization.  Throws on a nonpositive pivot (expected at
// ridge = 0 once N is large enough).
RecoveryResult solve_regularized(const TMatrix& tm, double ridge);

// True von Mangoldt vector (1-indexed values for n = 1..N).
std::vector<double> true_lambda(int N);

// T times a coefficient vector (for synthetic right sides).
std::vector<double> mat_apply(const TMatrix& tm, const std::vector<double>& v);

struct Psi0Comparison {
    double direct = 0.0;          // sum_{n<=N} Lambda(n), half weight at a
                                  // prime-power N
    double explicit_side = 0.0;   // N - sum_rho N^rho/rho - log(2 pi)
                                  // - (1/2) log(1 - N^{-2})
    double gap_abs = 0.0;
    double gap_rel = 0.0;
};

Psi0Comparison psi0_compare(int N, int zero_count);

}  // namespace guinand::linsys
