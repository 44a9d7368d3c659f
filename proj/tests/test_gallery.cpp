#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "copatt/bigint.hpp"
#include "copatt/config.hpp"
#include "copatt/gallery.hpp"

using namespace copatt;

TEST_CASE("string classes") {
    CHECK(BitonicBinary{"0011100"}.valid());
    CHECK(BitonicBinary{"000"}.valid());
    CHECK_FALSE(BitonicBinary{"0101"}.valid());
    CHECK(NoSingletonBinary{"110001100"}.valid());
    CHECK_FALSE(NoSingletonBinary{"010"}.valid());
    CHECK_FALSE(NoSingletonBinary{"1101100"}.valid());
}

TEST_CASE("class predicates and sizes") {
    std::vector<BigInt> fib{1, 1};
    for (int i = 2; i <= 10; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);

    CHECK(enumerate_s1(3).size() == 8);
    CHECK(enumerate_s2(2).size() == 4);
    CHECK(enumerate_s4(5).size() == 15);
    CHECK(BigInt(enumerate_s3(2).size()) == binomial(5, 3));

    for (int n = 1; n <= 8; ++n) {
        CHECK(BigInt(enumerate_s1(n).size()) == BigInt(n) * n - n + 2);
        CHECK(BigInt(enumerate_bitonic(n).size()) == BigInt(n) * n - n + 2);
        CHECK(BigInt(enumerate_s2(n).size()) == 2 * fib[static_cast<size_t>(n)]);
        CHECK(BigInt(enumerate_no_singleton(n + 2).size()) == 2 * fib[static_cast<size_t>(n)]);
        CHECK(BigInt(enumerate_s3(n).size()) == binomial(n + 3, 3));
        CHECK(BigInt(enumerate_one_descent_avoiders(n).size()) == binomial(n + 3, 3));
        if (n >= 4) {
            CHECK(BigInt(enumerate_s4(n).size()) == 3 * binomial(n, 4));
            CHECK(BigInt(enumerate_line_pairs(n).size()) == 3 * binomial(n, 4));
        }
    }
}

TEST_CASE("s1 worked examples at n = 3") {
    CHECK(s1_forward(perm_parse("4 5 1 3 2")).bits == "010");
    CHECK(s1_forward(perm_parse("4 5 3 1 2")).bits == "001");
    CHECK(s1_forward(perm_parse("5 4 1 3 2")).bits == "101");
    CHECK(perm_str(s1_backward(BitonicBinary{"010"})) == "4 5 1 3 2");
    CHECK(perm_str(s1_backward(BitonicBinary{"001"})) == "4 5 3 1 2");
}

TEST_CASE("s2 worked examples") {
    CHECK(s2_forward(perm_parse("8 9 6 7 5 3 4 1 2")).bits == "110001100");
    CHECK(s2_forward(perm_parse("2 3 1")).bits == "000");
    CHECK(s2_forward(perm_parse("3 2 1")).bits == "111");
    CHECK(perm_str(s2_backward(NoSingletonBinary{"110001100"})) == "8 9 6 7 5 3 4 1 2");
}

TEST_CASE("s3 worked example at n = 1") {
    CHECK(perm_str(s3_forward(perm_parse("2 3 1"))) == "1 3 4 2");
    CHECK(perm_str(s3_backward(perm_parse("1 3 4 2"))) == "2 3 1");
    // a case-3 instance: B empty puts (n+2)(n+3) at positions 3,4
    const Perm q = s3_forward(perm_parse("2 1 3"));
    REQUIRE(q.size() == 4);
    CHECK(q[2] == 3);
    CHECK(q[3] == 4);
}

TEST_CASE("s4 worked examples") {
    CHECK(perm_str(s4_forward(LinePair(4, {1, 2}, {3, 4}))) == "4 3 1 2");
    CHECK(perm_str(s4_forward(LinePair(4, {1, 3}, {2, 4}))) == "4 2 1 3");
    CHECK(perm_str(s4_forward(LinePair(5, {2, 3}, {1, 4}))) == "4 1 2 3 5");
    CHECK(s4_backward(perm_parse("4 3 1 2")) == LinePair(4, {1, 2}, {3, 4}));
    CHECK(LinePair::parse("((2,3),(1,4))", 5) == LinePair(5, {2, 3}, {1, 4}));
    CHECK(LinePair(5, {2, 3}, {1, 4}).str() == "((2,3),(1,4))");
}

TEST_CASE("round trips and image characterization") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> image1;
        for (const auto& p : enumerate_s1(n)) {
            const auto b = s1_forward(p);
            REQUIRE(b.valid());
            REQUIRE(image1.insert(b.bits).second);
            REQUIRE(s1_backward(b) == p);
        }
        std::set<std::string> bitonic;
        for (const auto& b : enumerate_bitonic(n)) bitonic.insert(b.bits);
        CHECK(image1 == bitonic);

        std::set<std::string> image2;
        for (const auto& p : enumerate_s2(n)) {
            const auto b = s2_forward(p);
            REQUIRE(b.valid());
            REQUIRE(image2.insert(b.bits).second);
            REQUIRE(s2_backward(b) == p);
        }
        std::set<std::string> nosingle;
        for (const auto& b : enumerate_no_singleton(n + 2)) nosingle.insert(b.bits);
        CHECK(image2 == nosingle);

        std::set<Perm> image3;
        for (const auto& p : enumerate_one_descent_avoiders(n)) {
            const Perm q = s3_forward(p);
            REQUIRE(image3.insert(q).second);
            REQUIRE(s3_backward(q) == p);
        }
        const auto s3 = enumerate_s3(n);
        CHECK(image3 == std::set<Perm>(s3.begin(), s3.end()));

        if (n >= 4) {
            std::set<Perm> image4;
            for (const auto& lp : enumerate_line_pairs(n)) {
                const Perm q = s4_forward(lp);
                REQUIRE(image4.insert(q).second);
                REQUIRE(s4_backward(q) == lp);
            }
            const auto s4 = enumerate_s4(n);
            CHECK(image4 == std::set<Perm>(s4.begin(), s4.end()));
        }
    }
}

TEST_CASE("complement commutes with prefix swap") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : enumerate_s1(n)) {
            Perm swapped = p;
            std::swap(swapped[0], swapped[1]);
            auto flipped = s1_forward(swapped).bits;
            for (char& c : flipped) c = c == '0' ? '1' : '0';
            CHECK(flipped == s1_forward(p).bits);
        }
        for (const auto& p : enumerate_s2(n)) {
            Perm swapped = p;
            std::swap(swapped[0], swapped[1]);
            auto flipped = s2_forward(swapped).bits;
            for (char& c : flipped) c = c == '0' ? '1' : '0';
            CHECK(flipped == s2_forward(p).bits);
        }
    }
}

TEST_CASE("out-of-class inputs") {
    CHECK_THROWS_AS(s1_forward(perm_parse("4 5 1 2 3")), out_of_class_error);  // 123 in tail
    CHECK_THROWS_AS(s2_forward(perm_parse("9 8 1 2 3 4 5 6 7")), out_of_class_error);
    CHECK_THROWS_AS(s3_backward(perm_parse("2 1 3 4")), out_of_class_error);
    CHECK_THROWS_AS(s4_backward(perm_parse("3 4 1 2")), out_of_class_error);
    CHECK_THROWS_AS(s2_backward(NoSingletonBinary{"010"}), out_of_class_error);
}
