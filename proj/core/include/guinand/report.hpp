#pragma once

#include <complex>
#include <limits>
#include <string>
#include <vector>

namespace guinand {

// One named check: a computed value against its reference, with residuals.
// `ratio` is filled by the identity verifiers that must surface a possible
// constant-factor discrepancy instead of hiding it in a residual.
struct CheckResult {
    std::string name;
    std::complex<double> value{};
    std::complex<double> expected{};
    double abs_err = 0.0;
    double rel_err = 0.0;
    std::complex<double> ratio{std::numeric_limits<double>::quiet_NaN(), 0.0};
    bool pass = false;

    bool has_ratio() const { return !std::isnan(ratio.real()); }

    static CheckResult make(std::string name, std::complex<double> value,
                            std::complex<double> expected, double tol_rel) {
        CheckResult c;
        c.name = std::move(name);
        c.value = value;
        c.expected = expected;
        c.abs_err = std::abs(value - expected);
        double scale = std::max(std::abs(value), std::abs(expected));
        c.rel_err = scale > 0.0 ? c.abs_err / scale : 0.0;
        c.pass = c.rel_err <= tol_rel;
        return c;
    }
};

struct VerificationReport {
    std::string command;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace guinand
