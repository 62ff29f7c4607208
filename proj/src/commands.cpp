#include "kunits/commands.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "kunits/bfile.hpp"
#include "kunits/kernels.hpp"
#include "kunits/solver.hpp"
#include "kunits/unitgroup.hpp"

namespace kunits::cli {

namespace {

using Json = nlohmann::json;
using Rows = std::vector<std::pair<std::string, std::string>>;

std::string str(const Natural& x)
{
    return x.get_str();
}

template <class Seq>
std::string join(const Seq& seq, const std::string& sep)
{
    std::string out;
    bool first = true;
    for (const auto& x : seq) {
        if (!first) out += sep;
        first = false;
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Natural>) {
            out += x.get_str();
        } else if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::string>) {
            out += x;
        } else {
            out += std::to_string(x);
        }
    }
    return out;
}

void print_rows(std::ostream& out, const Rows& rows)
{
    std::size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    for (const auto& [key, value] : rows) {
        out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    }
}

void print_csv_rows(std::ostream& out, const Rows& rows)
{
    out << "key,value\n";
    for (const auto& [key, value] : rows) out << key << ',' << value << '\n';
}

void emit(const Context& ctx, const std::string& command, const Json& input, const Json& result, const Rows& rows)
{
    switch (ctx.format) {
    case Format::json:
        ctx.out << Json{{"command", command}, {"input", input}, {"result", result}}.dump() << '\n';
        break;
    case Format::csv:
        print_csv_rows(ctx.out, rows);
        break;
    case Format::text:
        print_rows(ctx.out, rows);
        break;
    }
}

Json factorization_json(const Factorization& f)
{
    Json arr = Json::array();
    for (const auto& [p, e] : f.factors()) arr.push_back({{"prime", str(p)}, {"exponent", std::to_string(e)}});
    return arr;
}

int guard(const Context& ctx, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const CapabilityError& e) {
        ctx.err << "error: " << e.what() << '\n';
        return kCapability;
    } catch (const BFileParseError& e) {
        ctx.err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        ctx.err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::runtime_error& e) {
        ctx.err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

Natural parse_natural(const std::string& text, const char* what)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument(std::string(what) + ": '" + text + "' is not a non-negative integer");
    }
    return Natural(text);
}

}  // namespace

OeisPredicate OeisPredicate::parse(const std::string& text)
{
    auto parameter = [&](std::size_t prefix) {
        const std::string tail = text.substr(prefix);
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tail, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (tail.empty() || used != tail.size()) {
            throw std::invalid_argument("malformed predicate parameter in '" + text + "'");
        }
        return v;
    };
    OeisPredicate p;
    if (text == "carmichael") {
        p.kind = Kind::carmichael;
    } else if (text.starts_with("knodel:")) {
        p.kind = Kind::knodel;
        p.parameter = parameter(7);
        if (p.parameter < 1) throw std::invalid_argument("knodel:i needs i >= 1");
    } else if (text.starts_with("gen-carmichael:")) {
        p.kind = Kind::gen_carmichael;
        p.parameter = parameter(15);
    } else if (text.starts_with("rdu-one:")) {
        p.kind = Kind::rdu_one;
        p.parameter = parameter(8);
        if (p.parameter < 1) throw std::invalid_argument("rdu-one:k needs k >= 1");
    } else {
        throw std::invalid_argument("unknown predicate '" + text +
                                    "' (expected carmichael, knodel:I, gen-carmichael:K or rdu-one:K)");
    }
    return p;
}

std::string OeisPredicate::name() const
{
    switch (kind) {
    case Kind::carmichael: return "carmichael";
    case Kind::knodel: return "knodel:" + std::to_string(parameter);
    case Kind::gen_carmichael: return "gen-carmichael:" + std::to_string(parameter);
    case Kind::rdu_one: return "rdu-one:" + std::to_string(parameter);
    }
    return {};
}

bool OeisPredicate::operator()(std::uint64_t n, const Limits& limits) const
{
    switch (kind) {
    case Kind::carmichael: return is_carmichael(from_u64(n), limits);
    case Kind::knodel: return is_knodel(from_u64(n), from_u64(static_cast<std::uint64_t>(parameter)), limits);
    case Kind::gen_carmichael: return is_generalized_carmichael(from_u64(n), parameter, limits);
    case Kind::rdu_one: return is_rdu_one(from_u64(n), from_u64(static_cast<std::uint64_t>(parameter)), limits);
    }
    return false;
}

int cmd_stats(const Context& ctx, const Natural& n, const Natural& k)
{
    return guard(ctx, [&] {
        const KUnitStats s = k_unit_stats(n, k, ctx.limits);
        const Json result{{"n", str(s.n)},
                          {"k", str(s.k)},
                          {"phi", str(s.phi)},
                          {"du", str(s.du)},
                          {"pdu", {{"num", str(s.pdu.num)}, {"den", str(s.pdu.den)}}},
                          {"rdu", str(s.rdu)}};
        const Rows rows{{"n", str(s.n)},     {"k", str(s.k)},
                        {"phi", str(s.phi)}, {"du", str(s.du)},
                        {"pdu", str(s.pdu.num) + "/" + str(s.pdu.den)}, {"rdu", str(s.rdu)}};
        emit(ctx, "stats", {{"n", str(n)}, {"k", str(k)}}, result, rows);
        return kOk;
    });
}

int cmd_units(const Context& ctx, const Natural& n, const Natural& k, bool oracle)
{
    return guard(ctx, [&] {
        const auto units = enumerate_k_units(n, k, ctx.limits);
        const Json input{{"n", str(n)}, {"k", str(k)}, {"oracle", oracle}};
        Json result{{"units", Json::array()}, {"count", std::to_string(units.size())}};
        for (auto u : units) result["units"].push_back(std::to_string(u));

        int code = kOk;
        if (oracle) {
            const KUnitStats s = k_unit_stats(n, k, ctx.limits);
            const bool agree = s.du == from_u64(units.size());
            result["oracle"] = {{"closed_form_du", str(s.du)}, {"agree", agree}};
            if (!agree) {
                ctx.err << "mismatch: closed form du = " << s.du << ", enumeration found " << units.size() << '\n';
                code = kMismatch;
            }
        }

        if (ctx.format == Format::json) {
            ctx.out << Json{{"command", "units"}, {"input", input}, {"result", result}}.dump() << '\n';
        } else {
            ctx.out << join(units, ctx.format == Format::csv ? "," : " ") << '\n';
            if (oracle) ctx.err << "oracle: closed form du = " << result["oracle"]["closed_form_du"].get<std::string>()
                                << (code == kOk ? " (agrees)" : " (MISMATCH)") << '\n';
        }
        return code;
    });
}

int cmd_solve(const Context& ctx, const Natural& k, bool enumerate, std::optional<std::size_t> limit)
{
    return guard(ctx, [&] {
        const RduOneSolution s = solve_rdu_one(k, ctx.limits);
        Json b = Json::array();
        std::vector<std::string> b_text;
        for (const auto& [q, e] : s.set_b) {
            b.push_back({{"prime", str(q)}, {"exponent", std::to_string(e)}});
            b_text.push_back(str(q) + "^" + std::to_string(e));
        }
        Json a = Json::array();
        for (const auto& p : s.set_a) a.push_back(str(p));

        Json result{{"k", str(s.k)},
                    {"parity", s.k_even ? "even" : "odd"},
                    {"beta", std::to_string(s.beta)},
                    {"M", str(s.M)},
                    {"A", a},
                    {"B", b},
                    {"n_max", str(s.n_max)},
                    {"count", str(s.count)}};
        Rows rows{{"k", str(s.k)},
                  {"parity", s.k_even ? "even" : "odd"},
                  {"beta", std::to_string(s.beta)},
                  {"M", str(s.M)},
                  {"A", "{" + join(s.set_a, ", ") + "}"},
                  {"B", "{" + join(b_text, ", ") + "}"},
                  {"n_max", str(s.n_max)},
                  {"count", str(s.count)}};

        if (enumerate) {
            const auto solutions = enumerate_rdu_one_solutions(k, limit, ctx.limits);
            const bool truncated = s.count > from_u64(solutions.size());
            Json list = Json::array();
            for (const auto& n : solutions) list.push_back(str(n));
            result["solutions"] = list;
            result["truncated"] = truncated;
            std::string text = join(solutions, " ");
            if (truncated) text += " ... (truncated: " + std::to_string(solutions.size()) + " of " + str(s.count) + ")";
            rows.emplace_back("solutions", text);
        }

        Json input{{"k", str(k)}, {"enumerate", enumerate}};
        if (limit) input["limit"] = std::to_string(*limit);
        emit(ctx, "solve", input, result, rows);
        return kOk;
    });
}

int cmd_classify(const Context& ctx, const Natural& n, const ClassifyOptions& requested)
{
    return guard(ctx, [&] {
        ClassifyOptions options = requested;
        if (!options.carmichael && !options.liars && options.knodel.empty() && options.gen_carmichael.empty()) {
            options.carmichael = true;
            options.liars = true;
        }
        const ClassificationReport r = classify(n, options, ctx.limits);

        Json result{{"n", str(r.n)},
                    {"factorization", factorization_json(r.evidence)},
                    {"is_composite", r.is_composite}};
        Rows rows{{"n", str(r.n)},
                  {"factorization", to_string(r.evidence)},
                  {"composite", r.is_composite ? "true" : "false"}};
        if (r.carmichael) {
            result["carmichael"] = *r.carmichael;
            rows.emplace_back("carmichael", *r.carmichael ? "true" : "false");
            if (r.korselt_violation) {
                result["korselt_violation"] = *r.korselt_violation;
                rows.emplace_back("korselt", *r.korselt_violation);
            }
        }
        if (options.liars) {
            if (r.fermat_liar_count) {
                result["fermat_liars"] = str(*r.fermat_liar_count);
                rows.emplace_back("liars", str(*r.fermat_liar_count));
            } else {
                result["fermat_liars"] = nullptr;
                rows.emplace_back("liars", "n/a (n must be odd and >= 3)");
            }
        }
        if (!r.knodel_for.empty()) {
            Json arr = Json::array();
            for (const auto& [i, v] : r.knodel_for) {
                arr.push_back({{"i", str(i)}, {"verdict", v}});
                rows.emplace_back("knodel:" + str(i), v ? "true" : "false");
            }
            result["knodel"] = arr;
        }
        if (!r.gen_carmichael_for.empty()) {
            Json arr = Json::array();
            for (const auto& [k, v] : r.gen_carmichael_for) {
                arr.push_back({{"k", std::to_string(k)}, {"verdict", v}});
                rows.emplace_back("gen-carmichael:" + std::to_string(k), v ? "true" : "false");
            }
            result["gen_carmichael"] = arr;
        }

        Json input{{"n", str(n)}, {"carmichael", options.carmichael}, {"liars", options.liars}};
        input["knodel"] = Json::array();
        for (const auto& i : options.knodel) input["knodel"].push_back(str(i));
        input["gen_carmichael"] = Json::array();
        for (auto k : options.gen_carmichael) input["gen_carmichael"].push_back(std::to_string(k));
        emit(ctx, "classify", input, result, rows);
        return kOk;
    });
}

int cmd_sweep(const Context& ctx, const SweepSpec& spec)
{
    return guard(ctx, [&] {
        const SweepResult r = sweep(spec, kernels::Execution::parallel, ctx.limits);
        switch (ctx.format) {
        case Format::json: {
            Json hits = Json::array();
            for (const auto& [n, e] : r.hits) hits.push_back({{"n", std::to_string(n)}, {"exponent", str(e)}});
            Json skipped = Json::array();
            for (auto n : r.skipped) skipped.push_back(std::to_string(n));
            const Json input{{"from", std::to_string(spec.lo)},
                             {"to", std::to_string(spec.hi)},
                             {"rule", spec.rule.text},
                             {"composite_only", spec.composite_only},
                             {"odd_only", spec.odd_only}};
            const Json result{{"hits", hits},
                              {"skipped", skipped},
                              {"hit_count", std::to_string(r.hits.size())},
                              {"skip_count", std::to_string(r.skipped.size())}};
            ctx.out << Json{{"command", "sweep"}, {"input", input}, {"result", result}}.dump() << '\n';
            break;
        }
        case Format::csv:
            ctx.out << "n,exponent\n";
            for (const auto& [n, e] : r.hits) ctx.out << n << ',' << e << '\n';
            ctx.out << "# hits=" << r.hits.size() << " skipped=" << r.skipped.size() << '\n';
            break;
        case Format::text:
            for (const auto& [n, e] : r.hits) ctx.out << n << '\n';
            ctx.out << "# hits " << r.hits.size() << ", skipped " << r.skipped.size() << '\n';
            break;
        }
        return kOk;
    });
}

int cmd_oeis_check(const Context& ctx, const std::string& bfile_path, const std::string& predicate_text,
                   std::optional<std::uint64_t> limit)
{
    return guard(ctx, [&] {
        const OeisPredicate predicate = OeisPredicate::parse(predicate_text);
        const BFile file = read_bfile(bfile_path);

        // Compare value sets on [1, upper]: upper is the largest listed value, capped by --limit.
        Natural upper = 0;
        for (const auto& e : file.entries) upper = std::max(upper, e.value);
        if (limit) upper = std::min(upper, from_u64(*limit));
        const std::uint64_t hi = to_u64(upper, "comparison bound");

        std::set<std::uint64_t> listed;
        for (const auto& e : file.entries) {
            if (e.value <= upper && sgn(e.value) > 0) listed.insert(to_u64(e.value, "b-file value"));
        }
        const auto computed = kernels::filter_parallel(1, hi, [&](std::uint64_t n) { return predicate(n, ctx.limits); });

        std::vector<std::uint64_t> missing;
        std::vector<std::uint64_t> extra;
        std::set_difference(listed.begin(), listed.end(), computed.begin(), computed.end(), std::back_inserter(missing));
        std::set_difference(computed.begin(), computed.end(), listed.begin(), listed.end(), std::back_inserter(extra));
        const bool match = missing.empty() && extra.empty();

        Json missing_json = Json::array();
        for (auto v : missing) missing_json.push_back(std::to_string(v));
        Json extra_json = Json::array();
        for (auto v : extra) extra_json.push_back(std::to_string(v));
        const Json result{{"compared", std::to_string(listed.size())},
                          {"computed", std::to_string(computed.size())},
                          {"upper", std::to_string(hi)},
                          {"missing", missing_json},
                          {"extra", extra_json},
                          {"match", match}};
        const Rows rows{{"bfile", file.source_path},
                        {"predicate", predicate.name()},
                        {"upper", std::to_string(hi)},
                        {"compared", std::to_string(listed.size())},
                        {"computed", std::to_string(computed.size())},
                        {"missing", missing.empty() ? "-" : join(missing, " ")},
                        {"extra", extra.empty() ? "-" : join(extra, " ")},
                        {"match", match ? "true" : "false"}};
        Json input{{"bfile", bfile_path}, {"predicate", predicate.name()}};
        if (limit) input["limit"] = std::to_string(*limit);
        emit(ctx, "oeis-check", input, result, rows);
        return match ? kOk : kMismatch;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"k-units of Z_n: counts, the rdu_k(n) = 1 solver, Carmichael-type classifiers"};
    app.require_subcommand(1);

    bool json = false;
    bool csv = false;
    std::string bound_text;
    std::string enum_bound_text;
    app.add_flag("--json", json, "Emit one canonical JSON object");
    app.add_flag("--csv", csv, "Emit CSV");
    app.add_option("--bound", bound_text, "Supported bound for primality and factorization (<= 2^64-1)");
    app.add_option("--enum-bound", enum_bound_text, "Largest modulus for brute-force residue scans");

    std::string n_text;
    std::string k_text;

    auto* stats = app.add_subcommand("stats", "du_k(n), pdu_k(n), rdu_k(n)");
    stats->add_option("--n", n_text, "Modulus n >= 1")->required();
    stats->add_option("--k", k_text, "Exponent k >= 1")->required();

    bool oracle = false;
    auto* units = app.add_subcommand("units", "List the k-units modulo n");
    units->add_option("--n", n_text, "Modulus n >= 1")->required();
    units->add_option("--k", k_text, "Exponent k >= 1")->required();
    units->add_flag("--oracle", oracle, "Cross-check the count against the closed form");

    bool enumerate = false;
    std::optional<std::size_t> limit;
    auto* solve = app.add_subcommand("solve", "Solve rdu_k(n) = 1 for fixed k");
    solve->add_option("--k", k_text, "Exponent k >= 1")->required();
    solve->add_flag("--enumerate", enumerate, "List the solutions");
    solve->add_option("--limit", limit, "Truncate the solution list");

    ClassifyOptions classify_options;
    std::vector<std::string> knodel_text;
    std::vector<std::int64_t> gen_carmichael;
    auto* classify_cmd = app.add_subcommand("classify", "Carmichael / Knodel / generalized Carmichael verdicts");
    classify_cmd->add_option("--n", n_text, "Integer n >= 1")->required();
    classify_cmd->add_flag("--carmichael", classify_options.carmichael, "Korselt verdict");
    classify_cmd->add_flag("--liars", classify_options.liars, "Fermat liar count (odd n >= 3)");
    classify_cmd->add_option("--knodel", knodel_text, "Test membership in K_i (repeatable)")->allow_extra_args(false);
    classify_cmd->add_option("--gen-carmichael", gen_carmichael, "Test membership in C_k (repeatable)")
        ->allow_extra_args(false);

    std::uint64_t from = 1;
    std::uint64_t to = 1;
    std::string rule_text;
    bool composite_only = false;
    bool odd_only = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "Scan a range for rdu_{f(n)}(n) = 1");
    sweep_cmd->add_option("--from", from, "First n (>= 1)")->required();
    sweep_cmd->add_option("--to", to, "Last n")->required();
    sweep_cmd->add_option("--rule", rule_text, "const:K | n-I | n+I | n | lin:A,B | poly:C0,C1,...")->required();
    sweep_cmd->add_flag("--composite-only", composite_only, "Only composite n");
    sweep_cmd->add_flag("--odd-only", odd_only, "Only odd n");

    std::string bfile_path;
    std::string predicate_text;
    std::optional<std::uint64_t> check_limit;
    auto* oeis = app.add_subcommand("oeis-check", "Compare a local OEIS b-file against a predicate");
    oeis->add_option("bfile", bfile_path, "Path to the b-file")->required();
    oeis->add_option("--predicate", predicate_text, "carmichael | knodel:I | gen-carmichael:K | rdu-one:K")
        ->required();
    oeis->add_option("--limit", check_limit, "Compare values up to this bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsage;
    }

    Context ctx{out, err};
    if (json && csv) {
        err << "usage error: --json and --csv are exclusive\n";
        return kUsage;
    }
    ctx.format = json ? Format::json : csv ? Format::csv : Format::text;

    const int setup = guard(ctx, [&] {
        if (!bound_text.empty()) {
            ctx.limits.supported_bound = to_u64(parse_natural(bound_text, "--bound"), "--bound");
        }
        if (!enum_bound_text.empty()) {
            ctx.limits.enumeration_bound = to_u64(parse_natural(enum_bound_text, "--enum-bound"), "--enum-bound");
        }
        return kOk;
    });
    if (setup != kOk) return setup == kCapability ? kUsage : setup;

    if (stats->parsed() || units->parsed()) {
        Natural n;
        Natural k;
        const int code = guard(ctx, [&] {
            n = parse_natural(n_text, "--n");
            k = parse_natural(k_text, "--k");
            return kOk;
        });
        if (code != kOk) return code;
        return stats->parsed() ? cmd_stats(ctx, n, k) : cmd_units(ctx, n, k, oracle);
    }
    if (solve->parsed()) {
        Natural k;
        const int code = guard(ctx, [&] {
            k = parse_natural(k_text, "--k");
            return kOk;
        });
        return code != kOk ? code : cmd_solve(ctx, k, enumerate, limit);
    }
    if (classify_cmd->parsed()) {
        Natural n;
        const int code = guard(ctx, [&] {
            n = parse_natural(n_text, "--n");
            for (const auto& i : knodel_text) classify_options.knodel.push_back(parse_natural(i, "--knodel"));
            return kOk;
        });
        classify_options.gen_carmichael = gen_carmichael;
        return code != kOk ? code : cmd_classify(ctx, n, classify_options);
    }
    if (sweep_cmd->parsed()) {
        SweepSpec spec;
        const int code = guard(ctx, [&] {
            spec.rule = ExponentRule::parse(rule_text);
            if (to < from) throw std::invalid_argument("--to must be >= --from");
            return kOk;
        });
        if (code != kOk) return code;
        spec.lo = from;
        spec.hi = to;
        spec.composite_only = composite_only;
        spec.odd_only = odd_only;
        return cmd_sweep(ctx, spec);
    }
    if (oeis->parsed()) {
        const int code = guard(ctx, [&] {
            OeisPredicate::parse(predicate_text);
            return kOk;
        });
        return code != kOk ? code : cmd_oeis_check(ctx, bfile_path, predicate_text, check_limit);
    }
    return kUsage;
}

}  // namespace kunits::cli
