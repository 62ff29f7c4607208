#pragma once

// Exact-integer primitives shared by every other module: primality,
// factorization, totient, valuations, divisors and modular powers.
//
// Public values are arbitrary precision (GMP). Primality and factorization
// run on a native 64-bit backend and refuse inputs above the configured
// supported bound instead of guessing.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kunits {

using Natural = mpz_class;

/// Input outside the mathematical domain of an operation (n = 0, k = 0, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input inside the domain but beyond what a backend is configured to handle.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runtime limits. Every limit is checked before work starts.
struct Limits {
    static constexpr std::uint64_t kMaxSupportedBound = std::numeric_limits<std::uint64_t>::max();

    /// Largest integer handed to is_prime / factorize.
    std::uint64_t supported_bound = kMaxSupportedBound;
    /// Largest modulus for brute-force enumeration over residues.
    std::uint64_t enumeration_bound = 10'000'000;
    /// Largest solution list produced without an explicit limit.
    std::uint64_t solution_cap = 1'000'000;
};

inline const Limits& default_limits()
{
    static const Limits limits{};
    return limits;
}

struct PrimePower {
    Natural prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// n together with its prime-power decomposition, primes strictly ascending.
class Factorization {
public:
    Factorization() : n_(1) {}

    /// Validates the invariants; throws DomainError when they do not hold.
    Factorization(Natural n, std::vector<PrimePower> factors);

    const Natural& value() const { return n_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    bool is_one() const { return factors_.empty(); }
    bool is_squarefree() const;
    std::size_t distinct_primes() const { return factors_.size(); }
    /// Exponent of p in n (0 when p does not divide n).
    unsigned exponent_of(const Natural& p) const;

    bool operator==(const Factorization&) const = default;

private:
    Natural n_;
    std::vector<PrimePower> factors_;
};

std::string to_string(const Factorization& f);

bool is_prime(const Natural& n, const Limits& limits = default_limits());
Factorization factorize(const Natural& n, const Limits& limits = default_limits());

Natural euler_phi(const Factorization& f);

/// Largest e with p^e | n. Throws DomainError unless p is prime and n >= 1.
unsigned nu(const Natural& p, const Natural& n, const Limits& limits = default_limits());

/// All divisors of f.value(), strictly ascending.
std::vector<Natural> divisors(const Factorization& f);

/// The `limit` smallest divisors, ascending, without materializing the rest.
std::vector<Natural> smallest_divisors(const Factorization& f, std::size_t limit);

Natural divisor_count(const Factorization& f);

/// a^e mod n in [0, n). Throws DomainError for n = 0.
Natural pow_mod(const Natural& a, const Natural& e, const Natural& n);

Natural gcd(const Natural& a, const Natural& b);

/// Exact conversion; throws CapabilityError when x does not fit.
std::uint64_t to_u64(const Natural& x, const char* what);
Natural from_u64(std::uint64_t x);

// Native 64-bit backend. These are the routines the parallel kernels call.
namespace u64 {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Prime-power decomposition, primes ascending. n = 0 is rejected.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

}  // namespace u64

}  // namespace kunits
