#include "guinand/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace guinand::arith {

SpfSieve::SpfSieve(std::uint32_t cap) : cap_(cap), spf_(cap + 1, 0) {
    for (std::uint32_t i = 2; i <= cap; ++i) {
        if (spf_[i] == 0) {
            for (std::uint64_t j = i; j <= cap; j += i)
                if (spf_[j] == 0) spf_[j] = i;
        }
    }
}

std::uint32_t SpfSieve::spf(std::uint64_t n) const {
    if (n < 2) throw std::invalid_argument("spf: n must be >= 2");
    if (n <= cap_) return spf_[n];
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return static_cast<std::uint32_t>(p);
    if (n > 0xffffffffULL) throw std::invalid_argument("spf: n too large");
    return static_cast<std::uint32_t>(n);
}

const SpfSieve& default_sieve() {
    static const SpfSieve sieve(1u << 20);
    return sieve;
}

namespace {

struct Factor {
    std::uint64_t p;
    int e;
};

// Prime factorization via the shared sieve.
std::vector<Factor> factorize(std::uint64_t n) {
    std::vector<Factor> out;
    const SpfSieve& sv = default_sieve();
    while (n > 1) {
        std::uint64_t p = sv.spf(n);
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    return out;
}

std::int64_t sigma1_prime_power(std::uint64_t p, int e) {
    std::int64_t s = 1, pk = 1;
    for (int i = 0; i < e; ++i) {
        pk *= static_cast<std::int64_t>(p);
        s += pk;
    }
    return s;
}

std::int64_t coeff_b(std::uint64_t n) {
    if (n % 2 == 0) return 0;
    return sigma1(n);
}

}  // namespace

std::int64_t sigma1(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("sigma1: n must be >= 1");
    std::int64_t s = 1;
    for (const auto& f : factorize(n)) s *= sigma1_prime_power(f.p, f.e);
    return s;
}

std::int64_t coeff(Kind kind, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("coeff: n must be >= 1");
    switch (kind) {
        case Kind::a: {
            int v = 0;
            while (n % 2 == 0) {
                n /= 2;
                ++v;
            }
            return (std::int64_t{1} << v) * sigma1(n);
        }
        case Kind::b:
            return coeff_b(n);
        case Kind::c: {
            if (n % 2 == 1) return sigma1(n);
            std::uint64_t m = n;
            while (m % 2 == 0) m /= 2;
            return -3 * sigma1(m);
        }
        case Kind::B: {
            std::int64_t s = 0;
            for (std::uint64_t i = 1; i + 1 <= n; ++i) s += coeff_b(i) * coeff_b(n - i);
            return s;
        }
    }
    throw std::logic_error("coeff: bad kind");
}

double von_mangoldt(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("von_mangoldt: n must be >= 1");
    if (n == 1) return 0.0;
    auto fs = factorize(n);
    if (fs.size() != 1) return 0.0;
    return std::log(static_cast<double>(fs[0].p));
}

bool is_prime_power(std::uint64_t n) {
    return n >= 2 && factorize(n).size() == 1;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_pairs(std::uint64_t j) {
    if (j == 0) throw std::invalid_argument("divisor_pairs: j must be >= 1");
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d * d <= j; ++d) {
        if (j % d == 0) {
            divs.push_back(d);
            if (d != j / d) divs.push_back(j / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(divs.size());
    for (auto d : divs) out.emplace_back(d, j / d);
    return out;
}

CoeffTable CoeffTable::build(Kind kind, std::uint32_t cap) {
    if (cap == 0) throw std::invalid_argument("CoeffTable: cap must be >= 1");
    CoeffTable t;
    t.kind = kind;
    t.cap = cap;
    t.values.resize(cap);
    if (kind == Kind::B) {
        // One pass over the b table instead of n separate convolutions.
        std::vector<std::int64_t> b(cap + 1, 0);
        for (std::uint32_t i = 1; i <= cap; ++i) b[i] = coeff_b(i);
        for (std::uint32_t n = 1; n <= cap; ++n) {
            std::int64_t s = 0;
            for (std::uint32_t i = 1; i < n; ++i) s += b[i] * b[n - i];
            t.values[n - 1] = s;
        }
    } else {
        for (std::uint32_t n = 1; n <= cap; ++n) t.values[n - 1] = coeff(kind, n);
    }
    return t;
}

}  // namespace guinand::arith
