// Acceptance suite: one pass/fail line per criterion, exit = number of
// failures. Every tolerance is exact integer equality; ranges are pinned
// in src/verify.cpp (the CLI `verify --suite all` runs the same checks).
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "copatt/verify.hpp"

int main() {
    using copatt::CheckResult;

    const std::vector<std::pair<std::string, std::vector<std::string>>> criteria = {
        {"criterion 1: GF totals vs brute force (7 patterns, n <= 12)",
         {"counting/gf-vs-oracle"}},
        {"criterion 2: trivariate coefficients vs oracle (n,l,s <= 10)",
         {"counting/trivariate"}},
        {"criterion 3: worked generating-function identity (m in {0,1,2}, degree 16)",
         {"counting/pattern-gf-example"}},
        {"criterion 4: k-part closed form and corollary (n <= 14)", {"kparts/f-closed"}},
        {"criterion 5: k-part bijection round trip and class sizes (n <= 12)",
         {"kparts/bijection"}},
        {"criterion 6: palindrome encodings are bijections (n <= 12)",
         {"pal/counts", "pal/enc1", "pal/enc2"}},
        {"criterion 7: gallery bijections (n <= 10; 8 for the third)",
         {"gallery/s1", "gallery/s2", "gallery/s3", "gallery/s4"}},
        {"criterion 8: series ring laws (200 random cases, caps (8,8,8))",
         {"series/ring-laws"}},
        {"criterion 9: baseline stream counts and C(n,l)", {"baseline/composition-streams",
         "baseline/palindrome-streams", "baseline/eq1-parts-count"}},
    };

    const auto report = copatt::run_verify("all", copatt::VerifyOptions{});
    std::map<std::string, const CheckResult*> by_name;
    for (const auto& c : report.checks) by_name[c.name] = &c;

    int failures = 0;
    for (const auto& [label, names] : criteria) {
        bool pass = true;
        double ms = 0;
        std::string detail;
        for (const auto& name : names) {
            const CheckResult* c = by_name.at(name);
            ms += c->ms;
            if (!c->pass) {
                pass = false;
                detail = name + ": " + c->counterexample;
            }
        }
        std::printf("[%s] %s (%.0f ms)%s%s\n", pass ? "PASS" : "FAIL", label.c_str(), ms,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!pass) ++failures;
    }
    return failures;
}
