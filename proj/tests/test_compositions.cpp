#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copatt/composition.hpp"
#include "copatt/config.hpp"
#include "copatt/enumerate.hpp"

using namespace copatt;

namespace {

std::vector<Composition> collect(auto&& range) {
    std::vector<Composition> out;
    for (const auto& c : range) out.push_back(c);
    return out;
}

}  // namespace

TEST_CASE("splits") {
    CHECK(Composition({3, 1, 1, 2}).splits() == std::vector<int>{0, 3, 4, 5, 7});
    CHECK(Composition{}.splits() == std::vector<int>{0});
    CHECK(Composition({1, 1}).splits() == std::vector<int>{0, 1, 2});
}

TEST_CASE("reverse and palindromes") {
    CHECK(Composition({3, 1, 1, 2}).reversed() == Composition({2, 1, 1, 3}));
    CHECK(Composition{}.reversed() == Composition{});
    CHECK(Composition({1, 2, 1}).reversed() == Composition({1, 2, 1}));
    CHECK(Composition({1, 2, 1}).is_palindrome());
    CHECK_FALSE(Composition({1, 2}).is_palindrome());
    CHECK(Composition{}.is_palindrome());
}

TEST_CASE("text format") {
    CHECK(Composition({3, 1, 1, 2}).str() == "3+1+1+2");
    CHECK(Composition{}.str() == "0");
    CHECK(Composition::parse("3+1+1+2") == Composition({3, 1, 1, 2}));
    CHECK(Composition::parse("0") == Composition{});
    CHECK_THROWS_AS(Composition::parse("3+x"), std::invalid_argument);
    CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);

    const MarkedKPart mk = MarkedKPart::parse("3+1+[6]+2");
    CHECK(mk.index == 2);
    CHECK(mk.k() == 6);
    CHECK(mk.prefix_sum() == 4);
    CHECK(mk.other_parts() == 3);
    CHECK(mk.str() == "3+1+[6]+2");
    CHECK_THROWS_AS(MarkedKPart::parse("1+2+3"), std::invalid_argument);
}

TEST_CASE("composition enumeration") {
    CHECK(collect(CompositionRange(0)) == std::vector<Composition>{Composition{}});
    CHECK(collect(CompositionRange(3)) ==
          std::vector<Composition>{Composition({1, 1, 1}), Composition({1, 2}),
                                   Composition({2, 1}), Composition({3})});
    CHECK(collect(CompositionRange(4)).size() == 8);

    for (int n = 1; n <= 14; ++n) {
        BigInt cnt = 0;
        for (const auto& c : CompositionRange(n)) {
            CHECK(c.weight() == n);
            ++cnt;
        }
        CHECK(cnt == pow2(n - 1));
    }
}

TEST_CASE("fixed-parts enumeration") {
    CHECK(collect(FixedPartsRange(4, 2)) ==
          std::vector<Composition>{Composition({1, 3}), Composition({2, 2}),
                                   Composition({3, 1})});
    CHECK(collect(FixedPartsRange(0, 0)) == std::vector<Composition>{Composition{}});
    CHECK(collect(FixedPartsRange(3, 5)).empty());

    // partitioning by part count reproduces the full stream
    for (int n = 1; n <= 12; ++n) {
        size_t total = 0;
        for (int l = 0; l <= n; ++l) total += collect(FixedPartsRange(n, l)).size();
        CHECK(total == collect(CompositionRange(n)).size());
    }
}

TEST_CASE("palindrome enumeration is the filtered stream") {
    const auto got = collect(PalindromeRange(4));
    CHECK(got == std::vector<Composition>{Composition({1, 1, 1, 1}), Composition({1, 2, 1}),
                                          Composition({2, 2}), Composition({4})});
    CHECK(collect(PalindromeRange(0)) == std::vector<Composition>{Composition{}});
    CHECK(collect(PalindromeRange(5)).size() == 4);

    for (int n = 0; n <= 12; ++n) {
        std::vector<Composition> filtered;
        for (const auto& c : CompositionRange(n))
            if (c.is_palindrome()) filtered.push_back(c);
        CHECK(collect(PalindromeRange(n)) == filtered);
        if (n >= 1) CHECK(BigInt(filtered.size()) == pow2(n / 2));
    }
}

TEST_CASE("resource cap") {
    const int before = resource_cap();
    set_resource_cap(10);
    CHECK_THROWS_AS(CompositionRange(11), cap_error);
    CHECK_NOTHROW(CompositionRange(10));
    set_resource_cap(before);
}
