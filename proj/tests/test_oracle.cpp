#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copatt/oracle.hpp"

using namespace copatt;

// The OpenMP bitmask kernels must agree exactly with the stream-based
// serial references they replace.

TEST_CASE("total occurrences: kernel vs reference") {
    std::vector<Spop> patterns;
    for (const char* lit : {"1", "11", "12", "21", "112", "1112"})
        patterns.push_back(Spop::parse(lit));
    patterns.push_back(Spop(PosetAlphabet({"1", "1'", "2'"}, {{"1'", "2'"}}),
                            {"1", "1'", "2'"}));
    for (const auto& w : patterns)
        for (int n = 0; n <= 13; ++n)
            CHECK(oracle::total_occurrences(w, n) == oracle::total_occurrences_serial(w, n));
}

TEST_CASE("occurrence tables: kernel vs reference") {
    for (const char* lit : {"11", "12", "21", "112"}) {
        const Spop w = Spop::parse(lit);
        for (int n = 0; n <= 11; ++n)
            CHECK(oracle::occurrence_table(w, n) == oracle::occurrence_table_serial(w, n));
    }
}

TEST_CASE("k-part tables: kernel vs reference") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 1; k <= std::max(1, n); ++k)
            CHECK(oracle::kpart_table(n, k) == oracle::kpart_table_serial(n, k));
}

TEST_CASE("palindrome k-part counts: kernel vs reference") {
    for (int N = 0; N <= 18; ++N)
        for (int k = 1; k <= std::max(1, N); ++k)
            CHECK(oracle::palindrome_kparts(N, k) == oracle::palindrome_kparts_serial(N, k));
}

TEST_CASE("known values") {
    CHECK(oracle::total_occurrences(Spop::parse("11"), 4) == 6);
    CHECK(oracle::total_occurrences(Spop::parse("12"), 4) == 3);
    CHECK(oracle::palindrome_kparts(4, 1) == 6);
    const auto t = oracle::kpart_table(3, 1);
    CHECK(t[1][0] == 1);  // the 1 in 1+2
    CHECK(t[1][2] == 1);  // the 1 in 2+1
    CHECK(t[2][0] == 1);
    CHECK(t[2][1] == 1);
    CHECK(t[2][2] == 1);  // the three 1s of 1+1+1
}
