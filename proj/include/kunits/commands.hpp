#pragma once

// Command layer behind the `kunits` executable. Each command writes to the
// context's streams and returns the process exit code.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kunits/arith.hpp"
#include "kunits/classify.hpp"

namespace kunits::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kUsage = 2,
    kCapability = 3,
};

enum class Format { text, json, csv };

struct Context {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::text;
    Limits limits{};
};

/// Predicate accepted by oeis-check: carmichael, knodel:I, gen-carmichael:K, rdu-one:K.
struct OeisPredicate {
    enum class Kind { carmichael, knodel, gen_carmichael, rdu_one };

    Kind kind = Kind::carmichael;
    std::int64_t parameter = 0;

    static OeisPredicate parse(const std::string& text);
    std::string name() const;
    bool operator()(std::uint64_t n, const Limits& limits) const;
};

int cmd_stats(const Context& ctx, const Natural& n, const Natural& k);
int cmd_units(const Context& ctx, const Natural& n, const Natural& k, bool oracle);
int cmd_solve(const Context& ctx, const Natural& k, bool enumerate, std::optional<std::size_t> limit);
int cmd_classify(const Context& ctx, const Natural& n, const ClassifyOptions& options);
int cmd_sweep(const Context& ctx, const SweepSpec& spec);
int cmd_oeis_check(const Context& ctx, const std::string& bfile_path, const std::string& predicate,
                   std::optional<std::uint64_t> limit);

/// Parses argv and dispatches; maps errors onto the exit-code contract.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kunits::cli
