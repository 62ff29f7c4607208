#include "kunits/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <sstream>

namespace kunits {

namespace u64 {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    if (m == 1) return 0;
    std::uint64_t result = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return result;
}

namespace {

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s)
{
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

std::uint64_t pollard_brent(std::uint64_t n, std::mt19937_64& rng)
{
    if (n % 2 == 0) return 2;
    std::uniform_int_distribution<std::uint64_t> dist(1, n - 1);
    for (;;) {
        std::uint64_t y = dist(rng);
        const std::uint64_t c = dist(rng);
        const std::uint64_t m = 128;
        std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
        auto f = [&](std::uint64_t v) {
            const std::uint64_t sq = mul_mod(v, v, n);
            return sq >= n - c ? sq - (n - c) : sq + c;
        };
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::uint64_t steps = std::min(m, r - k);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& primes, std::mt19937_64& rng)
{
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n, rng);
    split(d, primes, rng);
    split(n / d, primes, rng);
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        if (!miller_rabin(n, a, d, s)) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n)
{
    if (n == 0) throw DomainError("factor: n must be positive");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    take(2);
    take(3);
    // 6k +- 1 wheel up to a small cutoff; anything left goes to rho.
    for (std::uint64_t p = 5; p <= 1000 && p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n == 1) return out;
    if (n < 1'000'000 || is_prime(n)) {
        // Below 1000^2 with no factor <= 1000, n is prime.
        out.emplace_back(n, 1);
        return out;
    }
    std::mt19937_64 rng(n);
    std::vector<std::uint64_t> primes;
    split(n, primes, rng);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.emplace_back(primes[i], static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

}  // namespace u64

std::uint64_t to_u64(const Natural& x, const char* what)
{
    if (sgn(x) < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) {
        throw CapabilityError(std::string(what) + " = " + x.get_str() + " does not fit in 64 bits");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
    return out;
}

Natural from_u64(std::uint64_t x)
{
    Natural out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
    return out;
}

namespace {

std::uint64_t checked_for_backend(const Natural& n, const Limits& limits, const char* op)
{
    if (sgn(n) < 0) throw DomainError(std::string(op) + ": negative input " + n.get_str());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64 || to_u64(n, op) > limits.supported_bound) {
        throw CapabilityError(std::string(op) + ": " + n.get_str() + " exceeds the supported bound " +
                              std::to_string(limits.supported_bound));
    }
    return to_u64(n, op);
}

}  // namespace

Factorization::Factorization(Natural n, std::vector<PrimePower> factors)
    : n_(std::move(n)), factors_(std::move(factors))
{
    if (sgn(n_) <= 0) throw DomainError("Factorization: n must be positive");
    Natural product = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& [p, e] = factors_[i];
        if (e == 0) throw DomainError("Factorization: zero exponent for " + p.get_str());
        if (i > 0 && factors_[i - 1].prime >= p) {
            throw DomainError("Factorization: primes must be strictly increasing");
        }
        if (!is_prime(p)) throw DomainError("Factorization: " + p.get_str() + " is not prime");
        Natural pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        product *= pe;
    }
    if (product != n_) {
        throw DomainError("Factorization: factors multiply to " + product.get_str() + ", not " + n_.get_str());
    }
}

bool Factorization::is_squarefree() const
{
    return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

unsigned Factorization::exponent_of(const Natural& p) const
{
    for (const auto& pp : factors_) {
        if (pp.prime == p) return pp.exponent;
    }
    return 0;
}

std::string to_string(const Factorization& f)
{
    if (f.is_one()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.factors().size(); ++i) {
        const auto& [p, e] = f.factors()[i];
        if (i > 0) os << " * ";
        os << p;
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

bool is_prime(const Natural& n, const Limits& limits)
{
    return u64::is_prime(checked_for_backend(n, limits, "is_prime"));
}

Factorization factorize(const Natural& n, const Limits& limits)
{
    if (sgn(n) == 0) throw DomainError("factorize: n = 0 has no factorization");
    const std::uint64_t v = checked_for_backend(n, limits, "factorize");
    std::vector<PrimePower> factors;
    for (const auto& [p, e] : u64::factor(v)) factors.push_back({from_u64(p), e});
    return Factorization(n, std::move(factors));
}

Natural euler_phi(const Factorization& f)
{
    Natural phi = 1;
    for (const auto& [p, e] : f.factors()) {
        Natural pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
        phi *= pe * (p - 1);
    }
    return phi;
}

unsigned nu(const Natural& p, const Natural& n, const Limits& limits)
{
    if (sgn(n) <= 0) throw DomainError("nu: n must be >= 1");
    if (!is_prime(p, limits)) throw DomainError("nu: " + p.get_str() + " is not prime");
    Natural rest;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::vector<Natural> smallest_divisors(const Factorization& f, std::size_t limit)
{
    std::vector<Natural> current{Natural(1)};
    if (limit == 0) return {};
    for (const auto& [p, e] : f.factors()) {
        // Any divisor among the `limit` smallest of n * p^e is (small divisor of n) * p^j.
        std::vector<Natural> merged = current;
        Natural pj = 1;
        for (unsigned j = 1; j <= e; ++j) {
            pj *= p;
            std::vector<Natural> scaled;
            scaled.reserve(current.size());
            for (const auto& d : current) scaled.push_back(d * pj);
            std::vector<Natural> next;
            next.reserve(std::min(limit, merged.size() + scaled.size()));
            std::merge(merged.begin(), merged.end(), scaled.begin(), scaled.end(), std::back_inserter(next));
            if (next.size() > limit) next.resize(limit);
            merged = std::move(next);
        }
        current = std::move(merged);
    }
    if (current.size() > limit) current.resize(limit);
    return current;
}

std::vector<Natural> divisors(const Factorization& f)
{
    return smallest_divisors(f, std::numeric_limits<std::size_t>::max());
}

Natural divisor_count(const Factorization& f)
{
    Natural count = 1;
    for (const auto& pp : f.factors()) count *= pp.exponent + 1;
    return count;
}

Natural pow_mod(const Natural& a, const Natural& e, const Natural& n)
{
    if (sgn(n) <= 0) throw DomainError("pow_mod: modulus must be >= 1");
    if (sgn(e) < 0) throw DomainError("pow_mod: negative exponent");
    Natural r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
    return r;
}

Natural gcd(const Natural& a, const Natural& b)
{
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace kunits
