#include "kunits/kernels.hpp"

#include <numeric>

#include "kunits/arith.hpp"

namespace kunits::kernels {

std::vector<std::uint64_t> units(std::uint64_t n)
{
    if (n == 1) return {0};
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) == 1) out.push_back(a);
    }
    return out;
}

std::uint64_t brute_du(std::uint64_t n, std::uint64_t k)
{
    if (n == 1) return 1;
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) == 1 && u64::pow_mod(a, k, n) == 1) ++count;
    }
    return count;
}

bool brute_rdu_one(std::uint64_t n, std::uint64_t k)
{
    for (std::uint64_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) == 1 && u64::pow_mod(a, k, n) != 1) return false;
    }
    return true;
}

std::uint64_t brute_fermat_liars(std::uint64_t n)
{
    return n < 2 ? 1 : brute_du(n, n - 1);
}

bool brute_all_residues_fixed(std::uint64_t n, std::uint64_t e)
{
    for (std::uint64_t a = 0; a < n; ++a) {
        if (u64::pow_mod(a, e, n) != a) return false;
    }
    return true;
}

namespace {

void fill_row(std::uint64_t n, std::uint64_t k_lo, std::uint64_t k_hi, std::uint64_t* row)
{
    const std::vector<std::uint64_t> us = units(n);
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
        std::uint64_t count = 0;
        if (n == 1) {
            count = 1;
        } else {
            for (std::uint64_t a : us) count += u64::pow_mod(a, k, n) == 1;
        }
        row[k - k_lo] = count;
    }
}

}  // namespace

std::vector<std::uint64_t> du_table_serial(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t k_lo,
                                           std::uint64_t k_hi)
{
    if (n_hi < n_lo || k_hi < k_lo) return {};
    const std::uint64_t width = k_hi - k_lo + 1;
    std::vector<std::uint64_t> table((n_hi - n_lo + 1) * width);
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) fill_row(n, k_lo, k_hi, &table[(n - n_lo) * width]);
    return table;
}

std::vector<std::uint64_t> du_table_parallel(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t k_lo,
                                             std::uint64_t k_hi)
{
    if (n_hi < n_lo || k_hi < k_lo) return {};
    const std::uint64_t width = k_hi - k_lo + 1;
    const auto rows = static_cast<std::int64_t>(n_hi - n_lo + 1);
    std::vector<std::uint64_t> table(static_cast<std::size_t>(rows) * width);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < rows; ++i) {
        fill_row(n_lo + static_cast<std::uint64_t>(i), k_lo, k_hi, &table[static_cast<std::size_t>(i) * width]);
    }
    return table;
}

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace kunits::kernels
