#include "kunits/classify.hpp"

#include <charconv>
#include <sstream>

#include "kunits/solver.hpp"
#include "kunits/unitgroup.hpp"

namespace kunits {

namespace {

void require_positive(const Natural& x, const char* what)
{
    if (sgn(x) <= 0) throw DomainError(std::string(what) + " must be a positive integer, got " + x.get_str());
}

bool composite(const Factorization& f)
{
    return f.distinct_primes() > 1 || (f.distinct_primes() == 1 && f.factors().front().exponent > 1);
}

Natural from_i64(std::int64_t x)
{
    Natural out = from_u64(x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x));
    return x < 0 ? Natural(-out) : out;
}

// rdu_e(n) = 1 from a native factorization of n; e >= 1.
bool rdu_one_native(const std::vector<std::pair<std::uint64_t, unsigned>>& factors, const Natural& e)
{
    for (const auto& [p, a] : factors) {
        if (p == 2) {
            if (a == 2 && mpz_odd_p(e.get_mpz_t())) return false;
            if (a >= 3 && !mpz_divisible_2exp_p(e.get_mpz_t(), a - 2)) return false;
        } else {
            std::uint64_t phi = p - 1;
            for (unsigned j = 1; j < a; ++j) phi *= p;
            if (!mpz_divisible_ui_p(e.get_mpz_t(), phi)) return false;
        }
    }
    return true;
}

}  // namespace

Natural count_fermat_liars(const Natural& n, const Limits& limits)
{
    if (n < 3 || mpz_even_p(n.get_mpz_t())) {
        throw DomainError("count_fermat_liars: n must be odd and >= 3, got " + n.get_str());
    }
    const Factorization f = factorize(n, limits);
    Natural count = 1;
    for (const auto& pp : f.factors()) count *= gcd(n - 1, pp.prime - 1);
    return count;
}

std::optional<std::string> korselt_violation(const Factorization& f)
{
    const Natural& n = f.value();
    if (mpz_even_p(n.get_mpz_t())) return "n = " + n.get_str() + " is even";
    if (!composite(f)) return "n = " + n.get_str() + " is not composite";
    const Natural n_minus_1 = n - 1;
    for (const auto& [p, e] : f.factors()) {
        if (e > 1) return p.get_str() + "^2 divides n (not squarefree)";
    }
    for (const auto& [p, e] : f.factors()) {
        const Natural pm1 = p - 1;
        if (!mpz_divisible_p(n_minus_1.get_mpz_t(), pm1.get_mpz_t())) {
            return "p - 1 = " + pm1.get_str() + " does not divide n - 1 = " + n_minus_1.get_str() + " (p = " +
                   p.get_str() + ")";
        }
    }
    return std::nullopt;
}

bool is_carmichael(const Factorization& f)
{
    return !korselt_violation(f).has_value();
}

bool is_carmichael(const Natural& n, const Limits& limits)
{
    require_positive(n, "n");
    return is_carmichael(factorize(n, limits));
}

bool is_knodel(const Natural& n, const Natural& i, const Limits& limits)
{
    require_positive(i, "i");
    if (n <= i) return false;
    const Factorization f = factorize(n, limits);
    if (!composite(f)) return false;
    return is_rdu_one(f, n - i);
}

bool is_generalized_carmichael(const Natural& n, std::int64_t k, const Limits& limits)
{
    if (sgn(n) < 0) throw DomainError("is_generalized_carmichael: n must be a natural number");
    if (n > from_u64(limits.enumeration_bound)) {
        throw CapabilityError("is_generalized_carmichael: n = " + n.get_str() + " exceeds the enumeration bound " +
                              std::to_string(limits.enumeration_bound));
    }
    const Natural exponent = n + from_i64(k);
    if (n <= 1 || exponent <= 1) return false;
    return kernels::brute_all_residues_fixed(to_u64(n, "n"), to_u64(exponent, "n + k"));
}

ClassificationReport classify(const Natural& n, const ClassifyOptions& options, const Limits& limits)
{
    require_positive(n, "n");
    ClassificationReport r;
    r.n = n;
    r.evidence = factorize(n, limits);
    r.is_composite = composite(r.evidence);
    if (options.liars && n >= 3 && mpz_odd_p(n.get_mpz_t())) r.fermat_liar_count = count_fermat_liars(n, limits);
    if (options.carmichael) {
        r.korselt_violation = korselt_violation(r.evidence);
        r.carmichael = !r.korselt_violation.has_value();
    }
    for (const auto& i : options.knodel) r.knodel_for.emplace_back(i, is_knodel(n, i, limits));
    for (std::int64_t k : options.gen_carmichael) {
        r.gen_carmichael_for.emplace_back(k, is_generalized_carmichael(n, k, limits));
    }
    return r;
}

Natural ExponentRule::operator()(std::uint64_t n) const
{
    const Natural x = from_u64(n);
    Natural acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + from_i64(*it);
    return acc;
}

ExponentRule ExponentRule::constant(std::int64_t k)
{
    if (k < 1) throw RuleSyntaxError("const rule needs k >= 1");
    return {{k}, "const:" + std::to_string(k)};
}

ExponentRule ExponentRule::minus(std::int64_t i)
{
    if (i < 1) throw RuleSyntaxError("n-i rule needs i >= 1");
    return {{-i, 1}, "n-" + std::to_string(i)};
}

ExponentRule ExponentRule::plus(std::int64_t i)
{
    if (i < 0) throw RuleSyntaxError("n+i rule needs i >= 0");
    return {{i, 1}, i == 0 ? "n" : "n+" + std::to_string(i)};
}

ExponentRule ExponentRule::linear(std::int64_t a, std::int64_t b)
{
    if (a < 1) throw RuleSyntaxError("lin rule needs a >= 1");
    return {{b, a}, "lin:" + std::to_string(a) + "," + std::to_string(b)};
}

ExponentRule ExponentRule::polynomial(std::vector<std::int64_t> coefficients)
{
    if (coefficients.empty()) throw RuleSyntaxError("poly rule needs at least one coefficient");
    std::string text = "poly:";
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (i > 0) text += ',';
        text += std::to_string(coefficients[i]);
    }
    return {std::move(coefficients), text};
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view rule)
{
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw RuleSyntaxError("malformed integer '" + std::string(s) + "' in rule '" + std::string(rule) + "'");
    }
    return v;
}

std::vector<std::int64_t> parse_list(std::string_view s, std::string_view rule)
{
    std::vector<std::int64_t> out;
    for (;;) {
        const auto comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma), rule));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

ExponentRule ExponentRule::parse(std::string_view text)
{
    if (text == "n") return plus(0);
    if (text.starts_with("const:")) return constant(parse_int(text.substr(6), text));
    if (text.starts_with("n-")) return minus(parse_int(text.substr(2), text));
    if (text.starts_with("n+")) return plus(parse_int(text.substr(2), text));
    if (text.starts_with("lin:")) {
        const auto ab = parse_list(text.substr(4), text);
        if (ab.size() != 2) throw RuleSyntaxError("lin rule takes exactly two integers: lin:A,B");
        return linear(ab[0], ab[1]);
    }
    if (text.starts_with("poly:")) return polynomial(parse_list(text.substr(5), text));
    throw RuleSyntaxError("unknown exponent rule '" + std::string(text) +
                          "' (expected const:K, n-I, n+I, n, lin:A,B or poly:C0,C1,...)");
}

SweepResult sweep(const SweepSpec& spec, kernels::Execution exec, const Limits& limits)
{
    if (spec.lo == 0) throw DomainError("sweep: range must start at 1 or above");
    if (spec.hi > limits.supported_bound) {
        throw CapabilityError("sweep: upper end " + std::to_string(spec.hi) + " exceeds the supported bound " +
                              std::to_string(limits.supported_bound));
    }
    constexpr std::uint8_t kHit = 1;
    constexpr std::uint8_t kSkipped = 2;
    const auto tags = kernels::tag(exec, spec.lo, spec.hi, [&](std::uint64_t n) -> std::uint8_t {
        if (spec.odd_only && n % 2 == 0) return 0;
        if (spec.composite_only && (n < 4 || u64::is_prime(n))) return 0;
        const Natural e = spec.rule(n);
        if (e < 1) return kSkipped;
        return rdu_one_native(u64::factor(n), e) ? kHit : 0;
    });

    SweepResult result;
    for (const auto& t : tags) {
        if (t.tag == kHit) {
            result.hits.emplace_back(t.n, spec.rule(t.n));
        } else {
            result.skipped.push_back(t.n);
        }
    }
    return result;
}

}  // namespace kunits
