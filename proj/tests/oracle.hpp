#pragma once

// Brute-force reference answers for the tests. Written from the definitions
// only and shares no code with the library.

#include <cstdint>
#include <vector>

namespace oracle {

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

/// Left-to-right binary powering.
inline std::uint64_t power(std::uint64_t a, std::uint64_t e, std::uint64_t n)
{
    std::uint64_t r = 1 % n;
    a %= n;
    for (int bit = 63; bit >= 0; --bit) {
        r = mulmod(r, r, n);
        if ((e >> bit) & 1) r = mulmod(r, a, n);
    }
    return r;
}

/// Iterated multiplication; only for tiny exponents.
inline std::uint64_t power_slow(std::uint64_t a, std::uint64_t e, std::uint64_t n)
{
    std::uint64_t r = 1 % n;
    for (std::uint64_t i = 0; i < e; ++i) r = mulmod(r, a % n, n);
    return r;
}

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> units(std::uint64_t n)
{
    if (n == 1) return {0};
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 1; a < n; ++a) {
        if (gcd(a, n) == 1) out.push_back(a);
    }
    return out;
}

inline std::uint64_t phi(std::uint64_t n)
{
    return units(n).size();
}

inline std::vector<std::uint64_t> k_units(std::uint64_t n, std::uint64_t k)
{
    if (n == 1) return {0};
    std::vector<std::uint64_t> out;
    for (std::uint64_t a : units(n)) {
        if (power(a, k, n) == 1) out.push_back(a);
    }
    return out;
}

/// rdu_k(n) = 1, i.e. every unit is a k-unit.
inline bool all_units_are_k_units(std::uint64_t n, std::uint64_t k)
{
    for (std::uint64_t a = 1; a < n; ++a) {
        if (gcd(a, n) == 1 && power(a, k, n) != 1) return false;
    }
    return true;
}

inline std::uint64_t fermat_liars(std::uint64_t n)
{
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a < n; ++a) {
        if (gcd(a, n) == 1 && power(a, n - 1, n) == 1) ++count;
    }
    return count;
}

/// Carmichael by the Fermat definition: odd composite, every unit a liar.
inline bool carmichael(std::uint64_t n)
{
    return n % 2 == 1 && n > 1 && !is_prime(n) && all_units_are_k_units(n, n - 1);
}

/// n in C_k straight from the definition.
inline bool gen_carmichael(std::uint64_t n, std::int64_t k)
{
    const std::int64_t e = static_cast<std::int64_t>(n) + k;
    if (n <= 1 || e <= 1) return false;
    for (std::uint64_t a = 0; a < n; ++a) {
        if (power(a, static_cast<std::uint64_t>(e), n) != a) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

inline unsigned distinct_prime_factors(std::uint64_t n)
{
    unsigned count = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ++count;
            while (n % p == 0) n /= p;
        }
    }
    return count + (n > 1 ? 1 : 0);
}

}  // namespace oracle
