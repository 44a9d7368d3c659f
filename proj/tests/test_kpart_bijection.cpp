#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "copatt/counting.hpp"
#include "copatt/enumerate.hpp"
#include "copatt/kpart_bijection.hpp"

using namespace copatt;

TEST_CASE("paper example: the 6 in 3+1+6+2") {
    const TElement t(12, 6, Composition({3, 1}), Composition({2}));
    const SPermutation p = kpart_encode(t);
    CHECK(p.str() == "4 5 3 0 1 2 6");
    CHECK(p.valid());
    CHECK(kpart_decode(p, 12, 6) == t);
}

TEST_CASE("small hand-traced cases") {
    const TElement t1(2, 1, Composition{}, Composition({1}));
    CHECK(kpart_encode(t1).str() == "0 1");
    CHECK(kpart_decode(SPermutation::parse("0 1"), 2, 1) == t1);

    const TElement t2(3, 1, Composition({2}), Composition{});
    CHECK(kpart_encode(t2).str() == "2 0 1");
    CHECK(kpart_decode(SPermutation::parse("2 0 1"), 3, 1) == t2);
}

TEST_CASE("marked-part conversion") {
    const MarkedKPart mk = MarkedKPart::parse("3+1+[6]+2");
    const TElement t = TElement::from_marked(mk);
    CHECK(t.n == 12);
    CHECK(t.k == 6);
    CHECK(t.alpha == Composition({3, 1}));
    CHECK(t.beta == Composition({2}));
    CHECK(t.l() == 3);
    CHECK(t.s() == 4);
    CHECK(t.to_marked() == mk);
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(TElement(3, 3, Composition{}, Composition{}), std::invalid_argument);
    CHECK_THROWS_AS(TElement(5, 2, Composition({1}), Composition({1})), std::invalid_argument);
    CHECK_THROWS_AS(kpart_decode(SPermutation::parse("0 1"), 5, 2), out_of_class_error);
    // fails the membership rule: s+1 = 2 is not in the decreasing prefix {0}
    CHECK_THROWS_AS(kpart_decode(SPermutation::parse("1 0 2 3"), 4, 1), out_of_class_error);
}

TEST_CASE("enumerate_S cardinalities") {
    CHECK(enumerate_S(3, 1).size() == 5);
    CHECK(enumerate_S(2, 1).size() == 2);
    for (int n = 2; n <= 10; ++n) CHECK(BigInt(enumerate_S(n, n - 1).size()) == 2);
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k <= n - 1; ++k)
            CHECK(BigInt(enumerate_S(n, k).size()) == total_kparts(n, k));
}

TEST_CASE("exhaustive round trip and image, n <= 10") {
    for (int n = 2; n <= 10; ++n) {
        std::map<int, std::set<SPermutation>> images;
        for (const auto& c : CompositionRange(n))
            for (int i = 0; i < c.size(); ++i) {
                if (c.part(i) == n) continue;
                const TElement t = TElement::from_marked(MarkedKPart(c, i));
                const SPermutation p = kpart_encode(t);
                REQUIRE(p.valid());
                REQUIRE(kpart_decode(p, t.n, t.k) == t);
                REQUIRE(images[t.k].insert(p).second);
            }
        for (int k = 1; k <= n - 1; ++k) {
            const auto all = enumerate_S(n, k);
            CHECK(images[k] == std::set<SPermutation>(all.begin(), all.end()));
            // encode(decode(p)) = p over S
            for (const auto& p : all) CHECK(kpart_encode(kpart_decode(p, n, k)) == p);
        }
    }
}

TEST_CASE("class sizes match f_closed pointwise") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            std::map<std::pair<int, int>, long long> counts;
            for (const auto& p : enumerate_S(n, k)) ++counts[{p.down_prefix_length(), p.s()}];
            for (int l = 0; l <= n; ++l)
                for (int s = 0; s <= n; ++s) {
                    const long long have = counts.count({l, s}) ? counts[{l, s}] : 0;
                    CHECK(f_closed(n, k, l, s) == have);
                }
        }
}

TEST_CASE("degenerate-branch membership rule") {
    // s in {0, n-k} iff (s+1) mod M equals the smallest non-s residue
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (const auto& p : enumerate_S(n, k)) {
                const int M = p.modulus();
                const int low = p.s() == 0 ? 1 : 0;
                const bool degenerate = p.s() == 0 || p.s() == n - k;
                CHECK(degenerate == ((p.s() + 1) % M == low));
            }
}
