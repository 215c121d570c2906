#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace guinand::arith {

// The four integer coefficient sequences used throughout:
//   a(n): multiplicative, a(n) = sigma1(n) for odd n, a(2^m) = 2^m
//   b(n): sigma1(n) for odd n, 0 for even n
//   c(n): multiplicative, c(n) = sigma1(n) for odd n, c(2^m) = -3
//   B(n): Cauchy square of b, B(n) = sum_{i+j=n, i,j>=1} b(i) b(j)
enum class Kind { a, b, c, B };

// Smallest-prime-factor sieve; immutable after construction.
class SpfSieve {
  public:
    explicit SpfSieve(std::uint32_t cap);
    std::uint32_t cap() const { return cap_; }
    // Smallest prime factor of n (n >= 2).  Falls back to trial division
    // above the cap.
    std::uint32_t spf(std::uint64_t n) const;

  private:
    std::uint32_t cap_;
    std::vector<std::uint32_t> spf_;
};

// Shared default sieve (cap 2^20 >= 1e6).
const SpfSieve& default_sieve();

// Sum of positive divisors.  64-bit: safe for n <= 1e6 and far beyond.
std::int64_t sigma1(std::uint64_t n);

std::int64_t coeff(Kind kind, std::uint64_t n);

// log p when n = p^k, else 0.
double von_mangoldt(std::uint64_t n);

bool is_prime_power(std::uint64_t n);

// All ordered pairs (d, j/d) with d | j, d ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_pairs(std::uint64_t j);

// Memoized table of one coefficient sequence up to a cap, 1-indexed.
struct CoeffTable {
    Kind kind;
    std::uint32_t cap;
    std::vector<std::int64_t> values;  // values[n-1] = coefficient(n)

    static CoeffTable build(Kind kind, std::uint32_t cap);
    std::int64_t operator()(std::uint64_t n) const { return values[n - 1]; }
};

}  // namespace guinand::arith
