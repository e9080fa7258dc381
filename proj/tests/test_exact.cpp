#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "kcomp/exact.hpp"
#include "kcomp/part_bound.hpp"

using namespace kcomp;

TEST_CASE("part_bound validates k") {
    REQUIRE_THROWS_AS(part_bound(0), std::invalid_argument);
    REQUIRE_THROWS_AS(part_bound(-3), std::invalid_argument);
    REQUIRE(part_bound(1).value() == 1);
    REQUIRE(part_bound(7).value() == 7);
}

TEST_CASE("count_compositions matches the reference values") {
    REQUIRE(count_compositions(part_bound(2), 5) == 8);
    REQUIRE(count_compositions(part_bound(3), 7) == 44);
    REQUIRE(count_compositions(part_bound(4), 10) == 401);
    for (int k = 1; k <= 6; ++k) REQUIRE(count_compositions(part_bound(k), 0) == 1);
}

TEST_CASE("part_count matches the reference values") {
    REQUIRE(part_count(part_bound(2), 5, 1) == 20);
    REQUIRE(part_count(part_bound(3), 9, 2) == 244);
    REQUIRE(part_count(part_bound(4), 10, 4) == 136);
    // a part size equal to n occurs exactly once
    for (int k = 1; k <= 5; ++k)
        for (int j = 1; j <= k; ++j) REQUIRE(part_count(part_bound(k), j, j) == 1);
}

TEST_CASE("total_parts matches the reference values") {
    REQUIRE(total_parts(part_bound(2), 5) == 30);
    REQUIRE(total_parts(part_bound(3), 6) == 94);
    for (int k = 1; k <= 6; ++k) REQUIRE(total_parts(part_bound(k), 0) == 0);
}

TEST_CASE("averages are exact reduced rationals") {
    REQUIRE(average_parts(part_bound(2), 5) == bigrat(15, 4));
    REQUIRE(average_parts(part_bound(4), 6) == bigrat(107, 29));
    REQUIRE(average_parts(part_bound(3), 0) == 0);
    REQUIRE(average_part_count(part_bound(2), 5, 1) == bigrat(5, 2));
    REQUIRE(average_part_count(part_bound(3), 7, 1) == bigrat(118, 44));
    // part size j cannot appear in a composition of n < j
    REQUIRE(average_part_count(part_bound(4), 2, 3) == 0);
    REQUIRE(average_part_count(part_bound(5), 0, 5) == 0);
}

TEST_CASE("input validation distinguishes bad n from bad j") {
    REQUIRE_THROWS_AS(count_compositions(part_bound(2), -1), std::domain_error);
    REQUIRE_THROWS_AS(total_parts(part_bound(2), -5), std::domain_error);
    REQUIRE_THROWS_AS(average_parts(part_bound(2), -1), std::domain_error);
    REQUIRE_THROWS_AS(part_count(part_bound(2), 5, 0), std::out_of_range);
    REQUIRE_THROWS_AS(part_count(part_bound(2), 5, 3), std::out_of_range);
    REQUIRE_THROWS_AS(average_part_count(part_bound(2), 5, -1), std::out_of_range);
    REQUIRE_THROWS_AS(part_count(part_bound(2), -1, 1), std::domain_error);
}

TEST_CASE("k = 1 degenerates to a single all-ones composition") {
    for (long long n : {0LL, 1LL, 7LL, 42LL, 300LL}) {
        REQUIRE(count_compositions(part_bound(1), n) == 1);
        REQUIRE(total_parts(part_bound(1), n) == n);
        REQUIRE(part_count(part_bound(1), n, 1) == n);
    }
}

TEST_CASE("k >= n reproduces the unrestricted composition count") {
    for (int n = 1; n <= 10; ++n) {
        bigint expected = bigint(1) << (n - 1);
        REQUIRE(count_compositions(part_bound(n), n) == expected);
        REQUIRE(count_compositions(part_bound(n + 2), n) == expected);
    }
}

TEST_CASE("row sums tie the three statistics together") {
    for (int k = 1; k <= 5; ++k) {
        part_bound b(k);
        for (long long n = 0; n <= 60; ++n) {
            bigint part_total(0), weighted(0);
            for (int j = 1; j <= k; ++j) {
                bigint c = part_count(b, n, j);
                part_total += c;
                weighted += j * c;
            }
            REQUIRE(part_total == total_parts(b, n));
            REQUIRE(weighted == n * count_compositions(b, n));
        }
    }
}

TEST_CASE("recurrence_stats bundles a consistent record") {
    exact_stats s = recurrence_stats(part_bound(3), 9);
    REQUIRE(s.count == 149);
    REQUIRE(s.part_counts.size() == 3);
    REQUIRE(s.part_counts[1] == 244);
    REQUIRE(s.average_parts == bigrat(s.total_parts, s.count));
    bigint sum(0);
    for (const bigint& c : s.part_counts) sum += c;
    REQUIRE(sum == s.total_parts);
}

TEST_CASE("a dedicated engine and the shared cache agree") {
    stat_engine engine{part_bound(4)};
    for (long long n : {0LL, 3LL, 17LL, 90LL}) {
        REQUIRE(engine.count(n) == count_compositions(part_bound(4), n));
        REQUIRE(engine.total_parts(n) == total_parts(part_bound(4), n));
        REQUIRE(engine.part_count(n, 3) == part_count(part_bound(4), n, 3));
    }
    // queries out of order reuse the grown table
    REQUIRE(engine.count(12) == 1490);
    REQUIRE(engine.count(90) == engine.count(90));
}

TEST_CASE("counts leave the 64-bit range intact") {
    bigint big = count_compositions(part_bound(2), 200);
    REQUIRE(big > bigint("18446744073709551615"));
    REQUIRE(big == count_compositions(part_bound(2), 199) + count_compositions(part_bound(2), 198));
}
