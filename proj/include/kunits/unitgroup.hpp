#pragma once

// k-units of Z_n and of abstract unit groups C_{r_1} x ... x C_{r_s}.
//
// A k-unit is a unit a with a^k = 1. du_k counts them, pdu_k = du_k / |U|
// is their proportion and rdu_k = |U| / du_k the ratio, an integer because
// the k-units form a subgroup.

#include <cstdint>
#include <optional>
#include <vector>

#include "kunits/arith.hpp"

namespace kunits {

/// Orders of the cyclic factors of a finite abelian unit group.
///
/// For Z_n the list is canonical: per prime power of n in ascending prime
/// order, [] for 2, [2] for 4, [2, 2^(a-2)] for 2^a with a >= 3 and
/// [phi(p^a)] for odd p.
struct CyclicDecomposition {
    std::vector<Natural> orders;
    /// Set when the decomposition describes U(Z_n).
    std::optional<Natural> modulus;

    Natural group_order() const;

    bool operator==(const CyclicDecomposition&) const = default;
};

/// Reduced fraction num/den.
struct Fraction {
    Natural num;
    Natural den;

    bool operator==(const Fraction&) const = default;
};

struct KUnitStats {
    Natural n;
    Natural k;
    Natural phi;
    Natural du;
    Fraction pdu;
    Natural rdu;
};

CyclicDecomposition unit_group_structure(const Natural& n, const Limits& limits = default_limits());
CyclicDecomposition unit_group_structure(const Factorization& f);

/// du_k(C_r) = gcd(k, r).
Natural du_k_cyclic(const Natural& k, const Natural& r);

/// du_k(C_{r_1} x ... x C_{r_s}) = prod gcd(k, r_i).
Natural du_k_product(const Natural& k, const CyclicDecomposition& d);

/// du_k(2^alpha) for alpha >= 3: 1 for odd k, 2 gcd(k, 2^(alpha-2)) for even k.
Natural du_k_two_power(const Natural& k, unsigned alpha);

/// du, pdu and rdu of Z_n from the prime factorization of n.
KUnitStats k_unit_stats(const Natural& n, const Natural& k, const Limits& limits = default_limits());
KUnitStats k_unit_stats(const Factorization& f, const Natural& k);

/// Brute force: every a in [1, n) with gcd(a, n) = 1 and a^k = 1 mod n.
/// Z_1 is the zero ring, whose single unit is the residue 0.
std::vector<std::uint64_t> enumerate_k_units(const Natural& n, const Natural& k,
                                             const Limits& limits = default_limits());

/// gcd(k, phi(n)); U_k(n) = U_d(n) for this d.
Natural reduce_exponent(const Natural& n, const Natural& k, const Limits& limits = default_limits());

/// rdu_k = 1 on the product iff every r_i divides k.
bool is_rdu_one_product(const Natural& k, const CyclicDecomposition& d);

}  // namespace kunits
