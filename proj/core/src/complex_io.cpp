#include "guinand/complex_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace guinand {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    if (z.imag() == 0.0) return format_double(z.real());
    std::string s = format_double(z.real());
    s += (z.imag() < 0 || std::isnan(z.imag())) ? "-" : "+";
    s += format_double(std::abs(z.imag()));
    s += "i";
    return s;
}

namespace {

// One signed real token: float literal, "p/q", "e", or "pi".
double parse_token(const std::string& t) {
    if (t.empty()) throw std::invalid_argument("empty numeric token");
    std::string body = t;
    double sign = 1.0;
    if (body[0] == '+' || body[0] == '-') {
        sign = body[0] == '-' ? -1.0 : 1.0;
        body = body.substr(1);
    }
    if (body == "e") return sign * std::numbers::e;
    if (body == "pi") return sign * std::numbers::pi;
    auto slash = body.find('/');
    if (slash != std::string::npos) {
        double num = parse_token(body.substr(0, slash));
        double den = parse_token(body.substr(slash + 1));
        if (den == 0.0) throw std::invalid_argument("division by zero in '" + t + "'");
        return sign * num / den;
    }
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(body, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse number '" + t + "'");
    }
    if (pos != body.size()) throw std::invalid_argument("trailing junk in number '" + t + "'");
    return sign * v;
}

// Index of the +/- that separates real and imaginary parts, or npos.
// Signs in the leading position or right after an exponent marker do not
// count as separators.
std::size_t split_point(const std::string& s) {
    for (std::size_t i = s.size(); i-- > 1;) {
        char c = s[i];
        if (c != '+' && c != '-') continue;
        char prev = s[i - 1];
        if (prev == 'e' || prev == 'E') {
            // Exponent sign only when digits surround it.
            if (i >= 2 && (std::isdigit(static_cast<unsigned char>(s[i - 2])) || s[i - 2] == '.'))
                continue;
        }
        return i;
    }
    return std::string::npos;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    if (s.back() == 'i' || s.back() == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        auto sp = split_point(body);
        if (sp == std::string::npos) {
            // Pure imaginary: "i", "-i", "3i".
            if (body.empty() || body == "+" || body == "-")
                return {0.0, body == "-" ? -1.0 : 1.0};
            return {0.0, parse_token(body)};
        }
        std::string re = body.substr(0, sp);
        std::string im = body.substr(sp);
        if (im == "+" || im == "-") im += "1";
        return {parse_token(re), parse_token(im)};
    }
    return {parse_token(s), 0.0};
}

double parse_real(const std::string& text) {
    auto z = parse_complex(text);
    if (z.imag() != 0.0)
        throw std::invalid_argument("expected a real value, got '" + text + "'");
    return z.real();
}

}  // namespace guinand
