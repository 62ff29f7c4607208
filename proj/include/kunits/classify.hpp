#pragma once

// Carmichael, Knodel and generalized Carmichael classifiers, the Fermat
// liar count, and range sweeps of rdu_{f(n)}(n) = 1 for exponent rules f.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kunits/arith.hpp"
#include "kunits/kernels.hpp"

namespace kunits {

/// prod_{p | n} gcd(n - 1, p - 1): units a with a^(n-1) = 1 mod n. n odd, n >= 3.
Natural count_fermat_liars(const Natural& n, const Limits& limits = default_limits());

/// Odd composite squarefree n with p - 1 | n - 1 for every p | n.
bool is_carmichael(const Natural& n, const Limits& limits = default_limits());
bool is_carmichael(const Factorization& f);

/// First failing Korselt clause for n, or nullopt when n is a Carmichael number.
std::optional<std::string> korselt_violation(const Factorization& f);

/// n in K_i: composite, n > i, and a^(n-i) = 1 mod n for every unit a.
bool is_knodel(const Natural& n, const Natural& i, const Limits& limits = default_limits());

/// n in C_k: min{n, n+k} > 1 and a^(n+k) = a mod n for every residue a.
/// Decided by exhaustive check over [0, n); n is capped by the enumeration bound.
bool is_generalized_carmichael(const Natural& n, std::int64_t k, const Limits& limits = default_limits());

struct ClassifyOptions {
    bool carmichael = false;
    bool liars = false;
    std::vector<Natural> knodel;
    std::vector<std::int64_t> gen_carmichael;
};

struct ClassificationReport {
    Natural n;
    bool is_composite = false;
    std::optional<Natural> fermat_liar_count;
    std::optional<bool> carmichael;
    std::optional<std::string> korselt_violation;
    std::vector<std::pair<Natural, bool>> knodel_for;
    std::vector<std::pair<std::int64_t, bool>> gen_carmichael_for;
    Factorization evidence;
};

ClassificationReport classify(const Natural& n, const ClassifyOptions& options,
                              const Limits& limits = default_limits());

// Sweeps.

/// Thrown for malformed exponent rule text.
class RuleSyntaxError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer polynomial in n, coefficients by ascending degree. Every rule
/// shape (const k, n - i, n + i, a n + b) is stored in this form.
struct ExponentRule {
    std::vector<std::int64_t> coefficients;
    std::string text;

    Natural operator()(std::uint64_t n) const;

    static ExponentRule constant(std::int64_t k);
    static ExponentRule minus(std::int64_t i);
    static ExponentRule plus(std::int64_t i);
    static ExponentRule linear(std::int64_t a, std::int64_t b);
    static ExponentRule polynomial(std::vector<std::int64_t> coefficients);

    /// "const:K", "n-I", "n+I", "n", "lin:A,B" or "poly:C0,C1,...".
    static ExponentRule parse(std::string_view text);
};

struct SweepSpec {
    std::uint64_t lo = 1;
    std::uint64_t hi = 1;
    ExponentRule rule;
    bool composite_only = false;
    bool odd_only = false;
};

struct SweepResult {
    /// (n, exponent) with rdu_exponent(n) = 1, ascending in n.
    std::vector<std::pair<std::uint64_t, Natural>> hits;
    /// n whose exponent evaluated below 1, ascending.
    std::vector<std::uint64_t> skipped;
};

SweepResult sweep(const SweepSpec& spec, kernels::Execution exec = kernels::Execution::parallel,
                  const Limits& limits = default_limits());

}  // namespace kunits
