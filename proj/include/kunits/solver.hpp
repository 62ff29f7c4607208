#pragma once

// Closed-form solution of rdu_k(n) = 1 for fixed k.
//
// Write k = 2^beta * M with M odd. For even k the solutions are exactly the
// divisors of
//
//     n_max = 2^(beta+2) * prod_{p in A} p * prod_{q in B} q^(nu_q(M)+1)
//
// where A and B collect the primes 2^l d + 1 (0 < l <= beta, d | M) that do
// not divide, respectively divide, M. For odd k the only solutions are 1, 2.

#include <optional>
#include <vector>

#include "kunits/arith.hpp"

namespace kunits {

struct RduOneSolution {
    Natural k;
    bool k_even = false;
    unsigned beta = 0;
    Natural M;
    std::vector<Natural> set_a;
    /// (q, nu_q(M) + 1), q ascending.
    std::vector<PrimePower> set_b;
    Natural n_max;
    Natural count;

    /// n_max with its factorization, built from the solution sets.
    Factorization n_max_factorization() const;
};

RduOneSolution solve_rdu_one(const Natural& k, const Limits& limits = default_limits());

Natural count_rdu_one_solutions(const Natural& k, const Limits& limits = default_limits());

/// Solutions ascending. Without `limit` the full list is produced only when
/// the count is within limits.solution_cap; otherwise CapabilityError.
std::vector<Natural> enumerate_rdu_one_solutions(const Natural& k, std::optional<std::size_t> limit = std::nullopt,
                                                 const Limits& limits = default_limits());

/// Membership test from the factorization of n: with n = 2^alpha * m, m odd,
/// phi(p^nu_p(m)) | k for every odd p, and alpha <= 1, or alpha = 2 with k
/// even, or 3 <= alpha <= nu_2(k) + 2.
bool is_rdu_one(const Natural& n, const Natural& k, const Limits& limits = default_limits());
bool is_rdu_one(const Factorization& f, const Natural& k);

/// Generalized Korselt test for odd composite n and k coprime to n:
/// n squarefree and p - 1 | k for every p | n. Preconditions are enforced.
bool check_korselt_general(const Natural& n, const Natural& k, const Limits& limits = default_limits());

}  // namespace kunits
