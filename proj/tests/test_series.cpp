#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "kcomp/exact.hpp"
#include "kcomp/series.hpp"

using namespace kcomp;

namespace {

truncated_series<bigint> from(std::vector<long long> values) {
    std::vector<bigint> coeffs(values.begin(), values.end());
    return truncated_series<bigint>(std::move(coeffs));
}

} // namespace

TEST_CASE("g_polynomial lays down ones at degrees 1..k") {
    REQUIRE(g_polynomial(part_bound(2), 4) == from({0, 1, 1, 0, 0}));
    REQUIRE(g_polynomial(part_bound(4), 2) == from({0, 1, 1}));
    REQUIRE(g_polynomial(part_bound(1), 3) == from({0, 1, 0, 0}));
}

TEST_CASE("reciprocal_one_minus expands 1/(1-s)") {
    REQUIRE(reciprocal_one_minus(g_polynomial(part_bound(2), 10)) ==
            from({1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89}));
    REQUIRE(reciprocal_one_minus(g_polynomial(part_bound(3), 8)) ==
            from({1, 1, 2, 4, 7, 13, 24, 44, 81}));
    REQUIRE(reciprocal_one_minus(truncated_series<bigint>(4)) == from({1, 0, 0, 0, 0}));
    REQUIRE_THROWS_AS(reciprocal_one_minus(from({1, 1})), std::invalid_argument);
}

TEST_CASE("f_series extracts the composition counts") {
    auto f = f_series(part_bound(2), 5);
    REQUIRE(f[4] == 5);
    REQUIRE(f[5] == 8);
    REQUIRE(f_series(part_bound(3), 0) == from({1}));
    REQUIRE(f_series(part_bound(4), 10)[10] == 401);
}

TEST_CASE("c_series extracts part-count columns and shifts them") {
    REQUIRE(c_series(part_bound(2), 1, 6) == from({0, 1, 2, 5, 10, 20, 38}));
    REQUIRE(c_series(part_bound(2), 2, 6) == from({0, 0, 1, 2, 5, 10, 20}));
    auto c3 = c_series(part_bound(4), 3, 9);
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(c3[i] == 0);
    REQUIRE_THROWS_AS(c_series(part_bound(2), 3, 5), std::out_of_range);
    REQUIRE_THROWS_AS(c_series(part_bound(2), 0, 5), std::out_of_range);
}

TEST_CASE("t_series extracts the total part counts") {
    REQUIRE(t_series(part_bound(2), 5) == from({0, 1, 3, 7, 15, 30}));
    REQUIRE(t_series(part_bound(3), 0) == from({0}));
    REQUIRE(t_series(part_bound(3), 7)[7] == 200);
}

TEST_CASE("series arithmetic stays inside the truncation order") {
    auto a = from({1, 2, 3});
    auto b = from({0, 1, 1});
    REQUIRE(a + b == from({1, 3, 4}));
    REQUIRE(a - b == from({1, 1, 2}));
    REQUIRE(a * b == from({0, 1, 3}));
    REQUIRE(a.shift_up(1) == from({0, 1, 2}));
    REQUIRE(a.shift_up(5) == from({0, 0, 0}));
    REQUIRE_THROWS_AS(a + from({1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(a * from({1}), std::invalid_argument);
}

TEST_CASE("series coefficients equal the recurrence route") {
    const std::size_t order = 120;
    for (int k = 1; k <= 5; ++k) {
        part_bound b(k);
        auto f = f_series(b, order);
        auto t = t_series(b, order);
        for (long long n = 0; n <= static_cast<long long>(order); ++n) {
            REQUIRE(f[static_cast<std::size_t>(n)] == count_compositions(b, n));
            REQUIRE(t[static_cast<std::size_t>(n)] == total_parts(b, n));
        }
        for (int j = 1; j <= k; ++j) {
            auto c = c_series(b, j, order);
            for (long long n = 0; n <= static_cast<long long>(order); ++n)
                REQUIRE(c[static_cast<std::size_t>(n)] == part_count(b, n, j));
        }
    }
}

TEST_CASE("part-count series are shifts of one another") {
    const std::size_t order = 60;
    for (int k = 2; k <= 5; ++k) {
        auto c1 = c_series(part_bound(k), 1, order);
        for (int j = 2; j <= k; ++j) {
            auto cj = c_series(part_bound(k), j, order);
            for (std::size_t i = static_cast<std::size_t>(j); i <= order; ++i)
                REQUIRE(cj[i] == c1[i - static_cast<std::size_t>(j) + 1]);
        }
    }
}

TEST_CASE("the defining algebraic identities hold coefficient-wise") {
    const std::size_t order = 40;
    for (int k = 1; k <= 4; ++k) {
        part_bound b(k);
        auto g = g_polynomial(b, order);
        truncated_series<bigint> one_minus_g(order);
        one_minus_g[0] = 1;
        one_minus_g = one_minus_g - g;

        truncated_series<bigint> one(order);
        one[0] = 1;
        REQUIRE(one_minus_g * f_series(b, order) == one);

        for (int j = 1; j <= k; ++j) {
            truncated_series<bigint> x_to_j(order);
            x_to_j[static_cast<std::size_t>(j)] = 1;
            REQUIRE(one_minus_g * (one_minus_g * c_series(b, j, order)) == x_to_j);
        }
    }
}
