#include "guinand/modular.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "guinand/specfun.hpp"
#include "guinand/theta.hpp"

namespace guinand::modular {

namespace {
double pow4(double v) { return (v * v) * (v * v); }
}

double lambda_modular(double y) {
    if (!(y > 0.0)) throw std::domain_error("lambda_modular: y must be > 0");
    return pow4(theta::theta(2, y) / theta::theta(3, y));
}

std::vector<CheckResult> special_value_checks(double tol_rel) {
    std::vector<CheckResult> out;
    out.push_back(CheckResult::make("lambda(i)", lambda_modular(1.0), 0.5, tol_rel));

    double closed = std::pow(std::numbers::pi, 0.25) /
                    specfun::gamma_c({0.75, 0.0}).real();
    out.push_back(CheckResult::make("theta3(i)", theta::theta(3, 1.0), closed, tol_rel));

    for (int m : {2, 3, 5}) {
        double lhs = lambda_modular(1.0 / m);
        double rhs = 1.0 - lambda_modular(static_cast<double>(m));
        out.push_back(CheckResult::make("lambda-reciprocal@M=" + std::to_string(m),
                                        lhs, rhs, tol_rel));
    }
    return out;
}

CheckResult beta_theta_link(double r, double tol_rel) {
    if (!(r > 0.0)) throw std::domain_error("beta_theta_link: r must be > 0");
    double lhs = 16.0 * theta::beta(r);
    double rhs = pow4(theta::theta(2, r));
    return CheckResult::make("beta-theta2@r=" + std::to_string(r), lhs, rhs, tol_rel);
}

double F_factor(int N, double y, CheckResult* decomposition) {
    if (N < 1) throw std::invalid_argument("F_factor: N must be >= 1");
    if (!(y > 0.0)) throw std::domain_error("F_factor: y must be > 0");
    double ny = static_cast<double>(N) * y;
    double f = pow4(theta::theta(3, ny) / theta::theta(3, y)) * lambda_modular(ny);
    if (decomposition) {
        double lhs = pow4(theta::theta(2, ny));
        double rhs = f * pow4(theta::theta(3, y));
        *decomposition = CheckResult::make(
            "theta2^4-decomposition@N=" + std::to_string(N), lhs, rhs, 1e-12);
    }
    return f;
}

}  // namespace guinand::modular
