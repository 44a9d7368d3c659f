#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copatt/enumerate.hpp"
#include "copatt/pattern.hpp"

using namespace copatt;

namespace {

Spop spop_11p2p() {
    PosetAlphabet a({"1", "1'", "2'"}, {{"1'", "2'"}});
    return Spop(a, {"1", "1'", "2'"});
}

std::vector<std::string> extension_strings(const Spop& w) {
    std::vector<std::string> out;
    for (const auto& v : w.linear_extensions()) out.push_back(v.str());
    return out;
}

}  // namespace

TEST_CASE("standardize") {
    CHECK(SegmentedPattern::standardize(std::vector<int>{3, 1, 2}).str() == "312");
    CHECK(SegmentedPattern::standardize(std::vector<int>{5, 5, 7}).str() == "112");
    CHECK(SegmentedPattern::standardize(std::vector<int>{4}).str() == "1");
    CHECK_THROWS_AS(SegmentedPattern::standardize(std::vector<int>{}), std::invalid_argument);

    // idempotent on segmented patterns
    for (const char* lit : {"112", "1", "3142", "221"}) {
        const auto p = SegmentedPattern::parse(lit);
        CHECK(SegmentedPattern::standardize(p.letters()) == p);
    }
}

TEST_CASE("segmented pattern validity") {
    CHECK_THROWS_AS(SegmentedPattern::parse("41242"), std::invalid_argument);  // no 3
    CHECK_NOTHROW(SegmentedPattern::parse("431242"));
    CHECK(SegmentedPattern::parse("112").content() == std::vector<int>{2, 1});
}

TEST_CASE("poset alphabet") {
    CHECK_THROWS_AS(PosetAlphabet({"a", "b"}, {{"a", "b"}, {"b", "a"}}), std::invalid_argument);
    CHECK_THROWS_AS(PosetAlphabet({"a", "a"}, {}), std::invalid_argument);
    PosetAlphabet chain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(chain.less(0, 2));  // closure
}

TEST_CASE("linear extensions") {
    CHECK(extension_strings(spop_11p2p()) == std::vector<std::string>{"123", "213", "312"});
    CHECK(extension_strings(Spop::parse("1")) == std::vector<std::string>{"1"});
    CHECK(extension_strings(Spop::parse("112")) == std::vector<std::string>{"112"});
}

TEST_CASE("order ideal requirement") {
    PosetAlphabet a({"1", "1'", "2'"}, {{"1'", "2'"}});
    CHECK_THROWS_AS(Spop(a, {"1", "2'"}), std::invalid_argument);  // 1' missing below 2'
    CHECK_THROWS_AS(Spop(a, std::vector<std::string>{}), std::invalid_argument);
}

TEST_CASE("spop json form") {
    const auto w = Spop::parse(R"({"elements": ["1", "1'", "2'"],
                                   "less": [["1'", "2'"]],
                                   "word": ["1", "1'", "2'"]})");
    CHECK(w == spop_11p2p());
}

TEST_CASE("count_occurrences") {
    const auto recs = count_occurrences(Composition({3, 1, 2, 5, 4}), spop_11p2p());
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].start == 0);
    CHECK(recs[0].prefix_sum == 0);
    CHECK(recs[0].outside_parts == 2);
    CHECK(recs[1].start == 1);
    CHECK(recs[1].prefix_sum == 3);

    CHECK(count_occurrences(Composition({1, 1, 1, 1}), Spop::parse("11")).size() == 3);
    CHECK(count_occurrences(Composition{}, Spop::parse("11")).empty());
}

TEST_CASE("occurrences partition across linear extensions") {
    // all strict orders on three labeled elements, all ideal words of length
    // <= 3 over them, all compositions of n <= 8
    const std::vector<std::string> labels{"a", "b", "c"};
    const std::pair<int, int> arcs[] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    std::vector<Spop> spops;
    for (int rel = 0; rel < 64; ++rel) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (int i = 0; i < 6; ++i)
            if (rel >> i & 1)
                pairs.emplace_back(labels[static_cast<size_t>(arcs[i].first)],
                                   labels[static_cast<size_t>(arcs[i].second)]);
        try {
            PosetAlphabet alphabet(labels, pairs);
            for (int len = 1; len <= 3; ++len)
                for (int word = 0; word < 1 << (2 * len); ++word) {
                    std::vector<std::string> w;
                    for (int i = 0; i < len; ++i) {
                        const int e = (word >> (2 * i)) & 3;
                        if (e == 3) goto next_word;
                        w.push_back(labels[static_cast<size_t>(e)]);
                    }
                    try {
                        spops.emplace_back(alphabet, w);
                    } catch (const std::invalid_argument&) {
                    }
                next_word:;
                }
        } catch (const std::invalid_argument&) {
        }
    }
    CHECK(spops.size() > 100);  // the family is genuinely broad
    for (const auto& w : spops)
        for (int n = 0; n <= 8; ++n)
            for (const auto& c : CompositionRange(n)) {
                size_t total = 0;
                for (const auto& v : w.linear_extensions())
                    total += count_occurrences(c, Spop::from_pattern(v)).size();
                CHECK(total == count_occurrences(c, w).size());
            }
}

TEST_CASE("pattern_count_oracle") {
    CHECK(pattern_count_oracle(SegmentedPattern::parse("12"), 3) == 1);
    CHECK(pattern_count_oracle(SegmentedPattern::parse("11"), 3) == 0);
    CHECK(pattern_count_oracle(SegmentedPattern::parse("112"), 4) == 1);

    // agreement with direct standardization counting
    for (const char* lit : {"1", "11", "12", "21", "112", "122"}) {
        const auto v = SegmentedPattern::parse(lit);
        for (int n = 0; n <= 12; ++n) {
            BigInt direct = 0;
            for (const auto& c : CompositionRange(n))
                if (c.size() == v.length() &&
                    SegmentedPattern::standardize(c.parts()) == v)
                    ++direct;
            CHECK(pattern_count_oracle(v, n) == direct);
        }
    }
}
