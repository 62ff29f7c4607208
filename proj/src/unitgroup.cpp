#include "kunits/unitgroup.hpp"

#include <numeric>

namespace kunits {

namespace {

void require_positive(const Natural& x, const char* what)
{
    if (sgn(x) <= 0) throw DomainError(std::string(what) + " must be a positive integer, got " + x.get_str());
}

Natural power_of_two(unsigned e)
{
    Natural out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

Natural prime_power_phi(const PrimePower& pp)
{
    Natural pe;
    mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
    return pe * (pp.prime - 1);
}

}  // namespace

Natural CyclicDecomposition::group_order() const
{
    Natural order = 1;
    for (const auto& r : orders) order *= r;
    return order;
}

CyclicDecomposition unit_group_structure(const Natural& n, const Limits& limits)
{
    require_positive(n, "n");
    return unit_group_structure(factorize(n, limits));
}

CyclicDecomposition unit_group_structure(const Factorization& f)
{
    CyclicDecomposition d;
    d.modulus = f.value();
    for (const auto& pp : f.factors()) {
        if (pp.prime == 2) {
            if (pp.exponent == 2) {
                d.orders.emplace_back(2);
            } else if (pp.exponent >= 3) {
                d.orders.emplace_back(2);
                d.orders.push_back(power_of_two(pp.exponent - 2));
            }
        } else {
            d.orders.push_back(prime_power_phi(pp));
        }
    }
    return d;
}

Natural du_k_cyclic(const Natural& k, const Natural& r)
{
    require_positive(k, "k");
    require_positive(r, "cyclic order r");
    return gcd(k, r);
}

Natural du_k_product(const Natural& k, const CyclicDecomposition& d)
{
    require_positive(k, "k");
    Natural du = 1;
    for (const auto& r : d.orders) du *= du_k_cyclic(k, r);
    return du;
}

Natural du_k_two_power(const Natural& k, unsigned alpha)
{
    require_positive(k, "k");
    if (alpha < 3) throw DomainError("du_k_two_power: alpha must be >= 3, got " + std::to_string(alpha));
    if (mpz_odd_p(k.get_mpz_t())) return 1;
    return 2 * gcd(k, power_of_two(alpha - 2));
}

KUnitStats k_unit_stats(const Natural& n, const Natural& k, const Limits& limits)
{
    require_positive(n, "n");
    require_positive(k, "k");
    return k_unit_stats(factorize(n, limits), k);
}

KUnitStats k_unit_stats(const Factorization& f, const Natural& k)
{
    require_positive(k, "k");
    const bool k_even = mpz_even_p(k.get_mpz_t()) != 0;

    unsigned alpha = 0;
    Natural odd_part = 1;
    for (const auto& pp : f.factors()) {
        if (pp.prime == 2) {
            alpha = pp.exponent;
        } else {
            odd_part *= gcd(k, prime_power_phi(pp));
        }
    }

    Natural du;
    if (!k_even || alpha <= 1) {
        du = odd_part;
    } else if (alpha == 2) {
        du = 2 * odd_part;
    } else {
        du = 2 * gcd(k, power_of_two(alpha - 2)) * odd_part;
    }

    KUnitStats s;
    s.n = f.value();
    s.k = k;
    s.phi = euler_phi(f);
    s.du = du;
    s.rdu = s.phi / du;
    const Natural g = gcd(du, s.phi);
    s.pdu = Fraction{du / g, s.phi / g};
    return s;
}

std::vector<std::uint64_t> enumerate_k_units(const Natural& n, const Natural& k, const Limits& limits)
{
    require_positive(n, "n");
    require_positive(k, "k");
    if (n > from_u64(limits.enumeration_bound)) {
        throw CapabilityError("enumerate_k_units: n = " + n.get_str() + " exceeds the enumeration bound " +
                              std::to_string(limits.enumeration_bound));
    }
    const std::uint64_t m = to_u64(n, "n");
    if (m == 1) return {0};

    // Exponents beyond 64 bits are folded with Euler's theorem; units only.
    std::uint64_t e = 0;
    if (mpz_sizeinbase(k.get_mpz_t(), 2) <= 64) {
        e = to_u64(k, "k");
    } else {
        std::uint64_t phi = 0;
        for (std::uint64_t a = 1; a < m; ++a) phi += std::gcd(a, m) == 1;
        const Natural folded = k % from_u64(phi);
        e = to_u64(folded, "k") + phi;
    }

    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 1; a < m; ++a) {
        if (std::gcd(a, m) == 1 && u64::pow_mod(a, e, m) == 1) out.push_back(a);
    }
    return out;
}

Natural reduce_exponent(const Natural& n, const Natural& k, const Limits& limits)
{
    require_positive(n, "n");
    require_positive(k, "k");
    return gcd(k, euler_phi(factorize(n, limits)));
}

bool is_rdu_one_product(const Natural& k, const CyclicDecomposition& d)
{
    require_positive(k, "k");
    for (const auto& r : d.orders) {
        if (!mpz_divisible_p(k.get_mpz_t(), r.get_mpz_t())) return false;
    }
    return true;
}

}  // namespace kunits
