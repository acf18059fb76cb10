#pragma once

// Integer helpers shared by the field, orbit and enumerator code.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gccodes {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an exhaustive enumeration would exceed the configured guard.
class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(const BigInt& required, const BigInt& guard)
        : std::runtime_error("enumeration of " + required.str() + " words exceeds guard " + guard.str()),
          required_(required), guard_(guard) {}

    const BigInt& required() const noexcept { return required_; }
    const BigInt& guard() const noexcept { return guard_; }

private:
    BigInt required_;
    BigInt guard_;
};

namespace nt {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n && d < 1000; ++d)
        if (n % d == 0) return n == d;
    if (n < 1000000) return true;
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Distinct prime factors by trial division; only used on small arguments.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// If q = p^e for a prime p, returns {p, e}; otherwise {0, 0}.
struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    bool valid() const noexcept { return prime != 0; }
};

inline PrimePower prime_power(std::uint64_t q) {
    if (q < 2) return {};
    auto factors = prime_factors(q);
    if (factors.size() != 1) return {};
    unsigned e = 0;
    while (q > 1) {
        q /= factors.front();
        ++e;
    }
    return {factors.front(), e};
}

/// Multiplicative order of a modulo m (gcd(a, m) = 1 required; ord mod 1 is 1).
inline std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 1;
    if (std::gcd(a % m, m) != 1) throw std::invalid_argument("mult_order: arguments not coprime");
    std::uint64_t x = a % m;
    std::uint64_t k = 1;
    while (x != 1) {
        x = mulmod(x, a, m);
        ++k;
    }
    return k;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("checked_pow: overflow");
        r *= base;
    }
    return r;
}

inline BigInt big_pow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace nt
}  // namespace gccodes
