#include "kunits/solver.hpp"

#include <algorithm>
#include <set>

#include "kunits/unitgroup.hpp"

namespace kunits {

namespace {

void require_k(const Natural& k)
{
    if (sgn(k) <= 0) throw DomainError("k must be a positive integer, got " + k.get_str());
}

unsigned two_adic(const Natural& x)
{
    return static_cast<unsigned>(mpz_scan1(x.get_mpz_t(), 0));
}

}  // namespace

Factorization RduOneSolution::n_max_factorization() const
{
    if (!k_even) return Factorization(2, {{Natural(2), 1}});
    std::vector<PrimePower> factors{{Natural(2), beta + 2}};
    for (const auto& p : set_a) factors.push_back({p, 1});
    for (const auto& q : set_b) factors.push_back(q);
    std::sort(factors.begin() + 1, factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return Factorization(n_max, std::move(factors));
}

RduOneSolution solve_rdu_one(const Natural& k, const Limits& limits)
{
    require_k(k);
    RduOneSolution s;
    s.k = k;
    s.beta = two_adic(k);
    mpz_tdiv_q_2exp(s.M.get_mpz_t(), k.get_mpz_t(), s.beta);
    s.k_even = s.beta > 0;

    if (!s.k_even) {
        s.n_max = 2;
        s.count = 2;
        return s;
    }

    const Factorization m_factors = factorize(s.M, limits);
    std::set<Natural> candidates;
    for (const auto& d : divisors(m_factors)) {
        Natural shifted = d;
        for (unsigned l = 1; l <= s.beta; ++l) {
            shifted *= 2;
            const Natural p = shifted + 1;
            if (is_prime(p, limits)) candidates.insert(p);
        }
    }

    s.n_max = Natural(1) << (s.beta + 2);
    s.count = s.beta + 3;
    for (const auto& p : candidates) {
        const unsigned v = m_factors.exponent_of(p);
        if (v == 0) {
            s.set_a.push_back(p);
            s.n_max *= p;
            s.count *= 2;
        } else {
            s.set_b.push_back({p, v + 1});
            Natural pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), v + 1);
            s.n_max *= pe;
            s.count *= v + 2;
        }
    }
    return s;
}

Natural count_rdu_one_solutions(const Natural& k, const Limits& limits)
{
    return solve_rdu_one(k, limits).count;
}

std::vector<Natural> enumerate_rdu_one_solutions(const Natural& k, std::optional<std::size_t> limit,
                                                 const Limits& limits)
{
    const RduOneSolution s = solve_rdu_one(k, limits);
    if (!limit && s.count > from_u64(limits.solution_cap)) {
        throw CapabilityError("rdu_" + k.get_str() + "(n) = 1 has " + s.count.get_str() +
                              " solutions, above the enumeration cap " + std::to_string(limits.solution_cap) +
                              "; pass a limit");
    }
    return smallest_divisors(s.n_max_factorization(), limit.value_or(to_u64(s.count, "solution count")));
}

bool is_rdu_one(const Natural& n, const Natural& k, const Limits& limits)
{
    if (sgn(n) <= 0) throw DomainError("n must be a positive integer, got " + n.get_str());
    require_k(k);
    return is_rdu_one(factorize(n, limits), k);
}

bool is_rdu_one(const Factorization& f, const Natural& k)
{
    require_k(k);
    const bool k_even = mpz_even_p(k.get_mpz_t()) != 0;
    for (const auto& pp : f.factors()) {
        if (pp.prime == 2) {
            const unsigned alpha = pp.exponent;
            const bool ok = alpha <= 1 || (alpha == 2 && k_even) || (alpha >= 3 && alpha <= two_adic(k) + 2);
            if (!ok) return false;
        } else {
            Natural phi;
            mpz_pow_ui(phi.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
            phi *= pp.prime - 1;
            if (!mpz_divisible_p(k.get_mpz_t(), phi.get_mpz_t())) return false;
        }
    }
    return true;
}

bool check_korselt_general(const Natural& n, const Natural& k, const Limits& limits)
{
    require_k(k);
    if (sgn(n) <= 0) throw DomainError("check_korselt_general: n must be positive");
    if (mpz_even_p(n.get_mpz_t())) throw DomainError("check_korselt_general: n = " + n.get_str() + " is not odd");
    if (n == 1 || is_prime(n, limits)) {
        throw DomainError("check_korselt_general: n = " + n.get_str() + " is not composite");
    }
    if (gcd(k, n) != 1) {
        throw DomainError("check_korselt_general: k = " + k.get_str() + " is not coprime to n = " + n.get_str());
    }
    const Factorization f = factorize(n, limits);
    if (!f.is_squarefree()) return false;
    return std::all_of(f.factors().begin(), f.factors().end(), [&](const PrimePower& pp) {
        const Natural pm1 = pp.prime - 1;
        return mpz_divisible_p(k.get_mpz_t(), pm1.get_mpz_t()) != 0;
    });
}

}  // namespace kunits
