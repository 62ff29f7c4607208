#include <doctest.h>

#include <stdexcept>

#include "kunits/kernels.hpp"
#include "oracle.hpp"

namespace kk = kunits::kernels;

TEST_CASE("brute-force primitives match the oracle")
{
    for (std::uint64_t n = 1; n <= 400; ++n) {
        CHECK(kk::units(n) == oracle::units(n));
        for (std::uint64_t k = 1; k <= 30; ++k) {
            CHECK(kk::brute_du(n, k) == oracle::k_units(n, k).size());
            CHECK(kk::brute_rdu_one(n, k) == oracle::all_units_are_k_units(n, k));
        }
        if (n >= 2) CHECK(kk::brute_fermat_liars(n) == oracle::fermat_liars(n));
        if (n >= 2) CHECK(kk::brute_all_residues_fixed(n, n + 1) == oracle::gen_carmichael(n, 1));
    }
}

TEST_CASE("du table: parallel equals serial equals oracle")
{
    const auto serial = kk::du_table_serial(1, 150, 1, 24);
    const auto parallel = kk::du_table_parallel(1, 150, 1, 24);
    CHECK(serial == parallel);
    REQUIRE(serial.size() == 150 * 24);
    for (std::uint64_t n = 1; n <= 150; ++n) {
        for (std::uint64_t k = 1; k <= 24; ++k) {
            CHECK(serial[(n - 1) * 24 + (k - 1)] == oracle::k_units(n, k).size());
        }
    }
    CHECK(kk::du_table_serial(5, 4, 1, 2).empty());
}

TEST_CASE("filter kernels agree and keep ascending order across blocks")
{
    auto pred = [](std::uint64_t n) { return n % 7 == 3 || oracle::is_prime(n); };
    const std::uint64_t hi = 3 * kk::kBlock + 17;
    const auto serial = kk::filter_serial(1, hi, pred);
    const auto parallel = kk::filter_parallel(1, hi, pred);
    CHECK(serial == parallel);
    CHECK(std::is_sorted(parallel.begin(), parallel.end()));
    CHECK(kk::filter_parallel(10, 9, pred).empty());
    CHECK(kk::filter_serial(5, 5, pred) == std::vector<std::uint64_t>{5});
}

TEST_CASE("filter kernels reach the top of the 64-bit range")
{
    const std::uint64_t top = ~std::uint64_t{0};
    auto all = [](std::uint64_t) { return true; };
    CHECK(kk::filter_serial(top - 2, top, all).size() == 3);
    CHECK(kk::filter_parallel(top - 2, top, all).size() == 3);
}

TEST_CASE("tag kernels return tags in order")
{
    auto tag = [](std::uint64_t n) -> std::uint8_t { return static_cast<std::uint8_t>(n % 3); };
    const auto serial = kk::tag_serial(1, 20, tag);
    CHECK(serial == kk::tag_parallel(1, 20, tag));
    REQUIRE(serial.size() == 14);
    CHECK(serial.front() == kk::Tagged{1, 1});
    CHECK(serial[1] == kk::Tagged{2, 2});
}

TEST_CASE("exceptions inside the parallel kernel propagate")
{
    auto pred = [](std::uint64_t n) -> bool {
        if (n == 777) throw std::runtime_error("boom");
        return false;
    };
    CHECK_THROWS_AS(kk::filter_parallel(1, 1000, pred), std::runtime_error);
    CHECK_THROWS_AS(kk::filter_serial(1, 1000, pred), std::runtime_error);
}
