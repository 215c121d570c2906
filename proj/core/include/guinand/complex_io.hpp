#pragma once

#include <complex>
#include <string>

namespace guinand {

// Wire format for complex scalars: "a+bi" / "a-bi"; pure reals print as a
// plain decimal.  17 significant digits, enough to round-trip a double.
std::string format_complex(std::complex<double> z);

std::string format_double(double x);

// Accepts "2", "-1.5", "2.5+0.7i", "1.5-5i", "3i", "-i", "e", "pi" and
// rational literals "p/q".  Throws std::invalid_argument on bad input.
std::complex<double> parse_complex(const std::string& text);

// Real-valued variant (rejects nonzero imaginary parts).
double parse_real(const std::string& text);

}  // namespace guinand
