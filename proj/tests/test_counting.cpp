#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copatt/counting.hpp"
#include "copatt/enumerate.hpp"
#include "copatt/oracle.hpp"

using namespace copatt;

TEST_CASE("composition_count") {
    CHECK(composition_count(4, 2) == 3);
    CHECK(composition_count(0, 0) == 1);
    CHECK(composition_count(3, 0) == 0);
    CHECK(composition_count(0, 2) == 0);
    for (int n = 0; n <= 12; ++n)
        for (int l = 0; l <= n; ++l) {
            BigInt streamed = 0;
            for (const auto& c : FixedPartsRange(n, l)) {
                (void)c;
                ++streamed;
            }
            CHECK(composition_count(n, l) == streamed);
        }
}

TEST_CASE("pattern_gf closed forms") {
    // v = 112: x^4 / ((1-x)(1-x^3))
    const auto r = pattern_gf(SegmentedPattern::parse("112"));
    const auto direct = RationalGF(
        TruncatedSeries3::poly({{4, 0, 0, 1}}),
        mul(TruncatedSeries3::poly({{0, 0, 0, 1}, {1, 0, 0, -1}}),
            TruncatedSeries3::poly({{0, 0, 0, 1}, {3, 0, 0, -1}})));
    CHECK(expand(r, {16, 0, 0}) == expand(direct, {16, 0, 0}));

    // v = 1: x/(1-x); v = 12: x^3/((1-x)(1-x^2))
    CHECK(expand(pattern_gf(SegmentedPattern::parse("1")), {10, 0, 0}).coeff(7, 0, 0) == 1);
    const auto r12 = pattern_gf(SegmentedPattern::parse("12"));
    for (int n = 0; n <= 12; ++n)
        CHECK(expand(r12, {12, 0, 0}).coeff(n, 0, 0) ==
              pattern_count_oracle(SegmentedPattern::parse("12"), n));
}

TEST_CASE("pattern_gf matches the solution-count oracle") {
    for (const char* lit : {"1", "11", "12", "21", "112", "121", "211", "123"}) {
        const auto v = SegmentedPattern::parse(lit);
        const auto f = expand(pattern_gf(v), {12, 0, 0});
        for (int n = 0; n <= 12; ++n) CHECK(f.coeff(n, 0, 0) == pattern_count_oracle(v, n));
    }
}

TEST_CASE("count_occurrences_total") {
    CHECK(count_occurrences_total(Spop::parse("11"), 4) == 6);
    CHECK(count_occurrences_total(Spop::parse("12"), 4) == 3);
    CHECK(count_occurrences_total(Spop::parse("11"), 1) == 0);
}

TEST_CASE("c_w trivariate counts") {
    const Spop w = Spop::parse("11");
    CHECK(c_w(w, 4, 1, 0) == 1);  // the level in 1+1+2
    CHECK(c_w(w, 4, 1, 2) == 1);  // the level in 2+1+1
    CHECK(c_w(w, 4, 1, 1) == 0);
    CHECK(c_w(w, 4, 1, 7) == 0);  // s > n
    // against the enumeration oracle
    for (int n = 0; n <= 8; ++n) {
        const auto table = oracle::occurrence_table(w, n);
        for (int l = 0; l <= n; ++l)
            for (int s = 0; s <= n; ++s)
                CHECK(c_w(w, n, l, s) ==
                      table[static_cast<size_t>(l)][static_cast<size_t>(s)]);
    }
}

TEST_CASE("f_closed") {
    CHECK(f_closed(3, 1, 1, 0) == 1);
    CHECK(f_closed(5, 5, 0, 0) == 1);
    CHECK(f_closed(5, 5, 1, 0) == 0);
    CHECK(f_closed(12, 6, 3, 4) == 4);
    CHECK(f_closed(0, 3, 0, 0) == 0);
    CHECK(f_closed(3, 0, 0, 0) == 0);
    CHECK(f_closed(3, 7, 0, 0) == 0);
}

TEST_CASE("total_kparts") {
    CHECK(total_kparts(3, 1) == 5);
    CHECK(total_kparts(3, 2) == 2);
    CHECK(total_kparts(4, 2) == 5);
    CHECK_THROWS_AS(total_kparts(3, 3), std::domain_error);
    CHECK_THROWS_AS(total_kparts(0, 1), std::domain_error);
    // n-k = 1 edge: 2^(n-k-2)(n-k+3) = 2
    for (int n = 2; n <= 10; ++n) CHECK(total_kparts(n, n - 1) == 2);
}

TEST_CASE("palindrome_kpart_count") {
    CHECK(palindrome_kpart_count(4, 1) == 6);
    CHECK(palindrome_kpart_count(12, 5) == 6);  // (5,2,5), (5,1,1,5), (1,5,5,1): two each
    CHECK_THROWS_AS(palindrome_kpart_count(4, 2), std::domain_error);
    CHECK_THROWS_AS(palindrome_kpart_count(5, 1), std::domain_error);
    CHECK(palindrome_kpart_count(4, 3) == 0);  // odd k above N/2 cannot occur
    for (int n = 2; n <= 10; ++n) {
        const int N = 2 * (n - 1);
        for (int k = 1; k <= n - 1; k += 2)
            CHECK(palindrome_kpart_count(N, k) == oracle::palindrome_kparts_serial(N, k));
    }
}
