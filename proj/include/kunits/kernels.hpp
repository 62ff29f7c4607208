#pragma once

// Data-parallel kernels over ranges of moduli.
//
// Every kernel has a serial reference (`*_serial`) and an OpenMP version
// (`*_parallel`). Both return identical, ascending results; the serial form
// is what the tests and the benchmark compare against.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kunits::kernels {

// Per-modulus brute-force checks over residues, native 64-bit arithmetic.

/// Units a of Z_n (gcd(a, n) = 1), ascending; {0} for n = 1.
std::vector<std::uint64_t> units(std::uint64_t n);

/// |{a unit : a^k = 1 mod n}|.
std::uint64_t brute_du(std::uint64_t n, std::uint64_t k);

/// a^k = 1 mod n for every unit a. Stops at the first failing unit.
bool brute_rdu_one(std::uint64_t n, std::uint64_t k);

/// |{a unit : a^(n-1) = 1 mod n}| for n >= 2.
std::uint64_t brute_fermat_liars(std::uint64_t n);

/// a^e = a mod n for every a in [0, n). Stops at the first failure.
bool brute_all_residues_fixed(std::uint64_t n, std::uint64_t e);

/// du table for n in [n_lo, n_hi] and k in [k_lo, k_hi]; row-major by n.
std::vector<std::uint64_t> du_table_serial(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t k_lo,
                                           std::uint64_t k_hi);
std::vector<std::uint64_t> du_table_parallel(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t k_lo,
                                             std::uint64_t k_hi);

inline constexpr std::uint64_t kBlock = 1u << 16;

struct Tagged {
    std::uint64_t n;
    std::uint8_t tag;

    bool operator==(const Tagged&) const = default;
};

/// Every n in [lo, hi] with tag(n) != 0, ascending, together with its tag.
template <class TagFn>
std::vector<Tagged> tag_serial(std::uint64_t lo, std::uint64_t hi, TagFn&& tag)
{
    std::vector<Tagged> out;
    if (hi < lo) return out;
    for (std::uint64_t n = lo;; ++n) {
        if (const std::uint8_t t = tag(n)) out.push_back({n, t});
        if (n == hi) break;
    }
    return out;
}

/// Same contract as tag_serial. The range is processed in blocks; each block
/// is evaluated in parallel into a buffer and compacted in order. The first
/// exception thrown by `tag` is rethrown once the block finishes.
template <class TagFn>
std::vector<Tagged> tag_parallel(std::uint64_t lo, std::uint64_t hi, TagFn&& tag)
{
    std::vector<Tagged> out;
    if (hi < lo) return out;
    std::vector<std::uint8_t> tags;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::uint64_t block_lo = lo;;) {
        const std::uint64_t span = std::min<std::uint64_t>(hi - block_lo, kBlock - 1);
        const std::uint64_t block_hi = block_lo + span;
        const auto width = static_cast<std::int64_t>(span + 1);
        tags.assign(static_cast<std::size_t>(width), 0);
#pragma omp parallel for schedule(dynamic, 256)
        for (std::int64_t i = 0; i < width; ++i) {
            try {
                tags[static_cast<std::size_t>(i)] = tag(block_lo + static_cast<std::uint64_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        for (std::int64_t i = 0; i < width; ++i) {
            if (const std::uint8_t t = tags[static_cast<std::size_t>(i)]) {
                out.push_back({block_lo + static_cast<std::uint64_t>(i), t});
            }
        }
        if (block_hi == hi) break;
        block_lo = block_hi + 1;
    }
    return out;
}

namespace detail {

inline std::vector<std::uint64_t> values(const std::vector<Tagged>& tagged)
{
    std::vector<std::uint64_t> out;
    out.reserve(tagged.size());
    for (const auto& t : tagged) out.push_back(t.n);
    return out;
}

}  // namespace detail

/// Every n in [lo, hi] with pred(n), ascending.
template <class Pred>
std::vector<std::uint64_t> filter_serial(std::uint64_t lo, std::uint64_t hi, Pred&& pred)
{
    return detail::values(tag_serial(lo, hi, [&](std::uint64_t n) -> std::uint8_t { return pred(n) ? 1 : 0; }));
}

template <class Pred>
std::vector<std::uint64_t> filter_parallel(std::uint64_t lo, std::uint64_t hi, Pred&& pred)
{
    return detail::values(tag_parallel(lo, hi, [&](std::uint64_t n) -> std::uint8_t { return pred(n) ? 1 : 0; }));
}

enum class Execution { serial, parallel };

template <class Pred>
std::vector<std::uint64_t> filter(Execution exec, std::uint64_t lo, std::uint64_t hi, Pred&& pred)
{
    return exec == Execution::serial ? filter_serial(lo, hi, pred) : filter_parallel(lo, hi, pred);
}

template <class TagFn>
std::vector<Tagged> tag(Execution exec, std::uint64_t lo, std::uint64_t hi, TagFn&& fn)
{
    return exec == Execution::serial ? tag_serial(lo, hi, fn) : tag_parallel(lo, hi, fn);
}

int max_threads();

}  // namespace kunits::kernels
