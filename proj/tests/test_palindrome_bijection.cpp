#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "copatt/counting.hpp"
#include "copatt/enumerate.hpp"
#include "copatt/palindrome_bijection.hpp"

using namespace copatt;

namespace {

std::vector<MarkedPalindrome> marked_kparts(int N, int k) {
    std::vector<MarkedPalindrome> out;
    for (const auto& c : PalindromeRange(N))
        for (int i = 0; i < c.size(); ++i)
            if (c.part(i) == k) out.emplace_back(c, i);
    return out;
}

}  // namespace

TEST_CASE("marked palindrome validation") {
    CHECK_NOTHROW(MarkedPalindrome::parse("2+[1]+2+1+4+1+2+1+2"));
    CHECK_THROWS_AS(MarkedPalindrome::parse("[1]+2"), std::invalid_argument);      // not pal
    CHECK_THROWS_AS(MarkedPalindrome::parse("1+[2]+1"), std::invalid_argument);    // even mark
    CHECK_THROWS_AS(MarkedPalindrome::parse("[1]+3+1"), std::invalid_argument);    // odd weight
}

TEST_CASE("down-up permutations") {
    CHECK(DownUpPermutation::parse("4 7 6 3 1 2 5 8 9").valid());
    CHECK(DownUpPermutation::parse("1 3 2").valid());
    CHECK(DownUpPermutation::parse("2 1 3").valid());
    CHECK_FALSE(DownUpPermutation::parse("1 2 3 2").valid());
    CHECK_FALSE(DownUpPermutation::parse("1 2 4 3").valid());  // up then down
    for (int m = 2; m <= 10; ++m) {
        const auto all = enumerate_downup(m);
        CHECK(BigInt(all.size()) == BigInt(m) * pow2(m - 2));
        for (const auto& p : all) CHECK(p.valid());
        CHECK(std::set<DownUpPermutation>(all.begin(), all.end()).size() == all.size());
    }
}

TEST_CASE("enc1 pair conversions from the worked examples") {
    auto pair = enc1_perm_to_pair(DownUpPermutation::parse("2 3 1"));
    CHECK(pair.first == 2);
    CHECK(pair.second == Composition({1, 1}));

    pair = enc1_perm_to_pair(DownUpPermutation::parse("1 2 3"));
    CHECK(pair.first == 1);
    CHECK(pair.second == Composition({2}));

    pair = enc1_perm_to_pair(DownUpPermutation::parse("3 2 1"));
    CHECK(pair.first == 3);
    CHECK(pair.second == Composition({1, 1}));

    CHECK(enc1_pair_to_perm(2, Composition({1, 1})).str() == "2 3 1");
    CHECK(enc1_pair_to_perm(1, Composition({2})).str() == "1 2 3");
}

TEST_CASE("enc1 case table at n = 3, k = 1") {
    CHECK(enc1_pair_to_marked(1, Composition({2}), 1) ==
          MarkedPalindrome(Composition({1, 2, 1}), 0));
    CHECK(enc1_pair_to_marked(2, Composition({1, 1}), 1) ==
          MarkedPalindrome(Composition({1, 1, 1, 1}), 1));
    CHECK(enc1_pair_to_marked(2, Composition({2}), 1) ==
          MarkedPalindrome(Composition({1, 1, 1, 1}), 2));
}

TEST_CASE("enc1 forward fixtures") {
    CHECK(enc1_forward(MarkedPalindrome::parse("[1]+2+1")).str() == "1 2 3");
    CHECK(enc1_forward(MarkedPalindrome::parse("1+1+1+[1]")).str() == "3 2 1");
    CHECK(enc1_forward(MarkedPalindrome::parse("1+[1]+1+1")).str() == "2 3 1");
}

TEST_CASE("enc2 paper fixtures") {
    CHECK(enc2_forward(MarkedPalindrome::parse("2+[1]+2+1+4+1+2+1+2")).str() ==
          "4 7 6 3 1 2 5 8 9");
    CHECK(enc2_forward(MarkedPalindrome::parse("[5]+1+1+5")).str() == "1 3 2");
    CHECK(enc2_forward(MarkedPalindrome::parse("1+5+[5]+1")).str() == "3 2 1");
    CHECK(enc2_forward(MarkedPalindrome::parse("[5]+2+5")).str() == "1 2 3");

    CHECK(enc2_inverse(DownUpPermutation::parse("1 3 2"), 5, 12) ==
          MarkedPalindrome::parse("[5]+1+1+5"));
    CHECK(enc2_inverse(DownUpPermutation::parse("1 2 3"), 5, 12) ==
          MarkedPalindrome::parse("[5]+2+5"));
    CHECK(enc2_inverse(DownUpPermutation::parse("4 7 6 3 1 2 5 8 9"), 1, 16) ==
          MarkedPalindrome::parse("2+[1]+2+1+4+1+2+1+2"));
}

TEST_CASE("enc2 left/right rule") {
    // mark left of center iff 1 precedes 2 in the image
    for (int n = 2; n <= 9; ++n) {
        const int N = 2 * (n - 1);
        for (int k = 1; k <= n - 1; k += 2)
            for (const auto& mp : marked_kparts(N, k)) {
                const auto p = enc2_forward(mp);
                int pos1 = 0, pos2 = 0;
                for (int i = 0; i < p.size(); ++i) {
                    if (p.entries[static_cast<size_t>(i)] == 1) pos1 = i;
                    if (p.entries[static_cast<size_t>(i)] == 2) pos2 = i;
                }
                const int T = mp.palindrome.size();
                const bool left = T % 2 == 1 ? mp.index < (T - 1) / 2 : mp.index < T / 2;
                CHECK(left == (pos1 < pos2));
            }
    }
}

TEST_CASE("both encodings are bijections for n <= 10") {
    for (int n = 2; n <= 10; ++n) {
        const int N = 2 * (n - 1);
        for (int k = 1; k <= n - 1; k += 2) {
            const int m = n - k + 1;
            const auto marked = marked_kparts(N, k);
            const auto downup = enumerate_downup(m);
            REQUIRE(BigInt(marked.size()) == palindrome_kpart_count(N, k));
            REQUIRE(marked.size() == downup.size());
            const std::set<DownUpPermutation> want(downup.begin(), downup.end());

            std::set<DownUpPermutation> image1, image2;
            for (const auto& mp : marked) {
                const auto p1 = enc1_forward(mp);
                const auto p2 = enc2_forward(mp);
                REQUIRE(image1.insert(p1).second);
                REQUIRE(image2.insert(p2).second);
                REQUIRE(enc1_inverse(p1, k, N) == mp);
                REQUIRE(enc2_inverse(p2, k, N) == mp);
            }
            CHECK(image1 == want);
            CHECK(image2 == want);
            for (const auto& p : downup) {
                CHECK(enc1_forward(enc1_inverse(p, k, N)) == p);
                CHECK(enc2_forward(enc2_inverse(p, k, N)) == p);
            }
        }
    }
}

TEST_CASE("the two encodings are genuinely different") {
    // nonequivalent maps: they must disagree somewhere (n = 5, k = 1 suffices)
    bool differ = false;
    for (const auto& mp : marked_kparts(8, 1))
        if (enc1_forward(mp) != enc2_forward(mp)) differ = true;
    CHECK(differ);
}

TEST_CASE("out-of-class decode inputs are rejected") {
    CHECK_THROWS_AS(enc2_inverse(DownUpPermutation::parse("1 3 2"), 5, 14), out_of_class_error);
    CHECK_THROWS_AS(enc1_inverse(DownUpPermutation::parse("1 3 2"), 3, 12), out_of_class_error);
    CHECK_THROWS_AS(enc2_inverse(DownUpPermutation::parse("3 1 2 4"), 1, 8), out_of_class_error);
}
