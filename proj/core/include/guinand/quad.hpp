#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace guinand::quad {

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by
// Newton iteration on the Legendre polynomial (machine accurate).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(std::size_t n);

// Integral of f over [a, b] with one n-point Gauss panel.
double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   std::size_t n = 32);

}  // namespace guinand::quad
