#pragma once

#include <cstddef>
#include <stdexcept>

namespace guinand {

// Shared truncation / quadrature controls for every series and integral
// evaluator in the library.
struct TruncationPolicy {
    double tail_epsilon = 1e-15;  // relative tail target for series
    std::size_t max_terms = 1'000'000;
    double quad_step = 0.5;  // base panel width for composite quadratures

    void validate() const {
        if (!(tail_epsilon > 0.0))
            throw std::invalid_argument("TruncationPolicy: tail_epsilon must be > 0");
        if (max_terms < 16)
            throw std::invalid_argument("TruncationPolicy: max_terms must be >= 16");
        if (!(quad_step > 0.0))
            throw std::invalid_argument("TruncationPolicy: quad_step must be > 0");
    }
};

// Controls for the divisor-weighted Bessel double sums.  The tail of those
// sums is bounded by exp(-2*pi*sqrt(j_max)); with the default j_max = 200
// that is below 1e-38.
struct KernelConfig {
    int j_max = 200;
    TruncationPolicy policy{};

    void validate() const {
        policy.validate();
        if (j_max < 20)
            throw std::invalid_argument("KernelConfig: j_max must be >= 20");
    }
};

// Series truncation hit max_terms before meeting the tail target.  Carries
// the partial sum accumulated so far.
class TruncationError : public std::runtime_error {
  public:
    TruncationError(const std::string& what, double partial)
        : std::runtime_error(what), partial_sum(partial) {}
    double partial_sum;
};

}  // namespace guinand
