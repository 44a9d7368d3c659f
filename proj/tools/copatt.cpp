#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "copatt/config.hpp"
#include "copatt/counting.hpp"
#include "copatt/enumerate.hpp"
#include "copatt/gallery.hpp"
#include "copatt/kpart_bijection.hpp"
#include "copatt/oracle.hpp"
#include "copatt/palindrome_bijection.hpp"
#include "copatt/verify.hpp"

using nlohmann::json;
using namespace copatt;

namespace {

// exit codes: 0 ok, 1 verification failure, 2 usage/domain, 3 resource cap,
// 4 out-of-class bijection input
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitOutOfClass = 4;

struct Output {
    bool as_json = false;

    void value(const json& query, const BigInt& v, const std::string& method) const {
        if (as_json) {
            json doc{{"query", query}, {"value", v.str()}, {"method", method}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << v << "\n";
        }
    }
    void text(const json& query, const std::string& field, const std::string& v) const {
        if (as_json) {
            json doc{{"query", query}, {field, v}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << v << "\n";
        }
    }
};

std::string read_pattern_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::FILE* f = std::fopen(arg.c_str() + 1, "rb");
        if (!f) throw std::invalid_argument("cannot open pattern file '" + arg.substr(1) + "'");
        std::string data;
        char buf[4096];
        size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) data.append(buf, got);
        std::fclose(f);
        return data;
    }
    return arg;
}

void cmd_count(const std::string& pattern_arg, int n, int l, int s, bool with_oracle,
               const Output& out) {
    const Spop w = Spop::parse(read_pattern_arg(pattern_arg));
    json query{{"pattern", w.str()}, {"n", n}};
    if (l >= 0 || s >= 0) {
        if (l < 0 || s < 0)
            throw CLI::ValidationError("count", "--l and --s must be given together");
        query["l"] = l;
        query["s"] = s;
        const BigInt v = c_w(w, n, l, s);
        if (with_oracle) {
            const auto table = oracle::occurrence_table(w, n);
            const BigInt o = (l <= n && s <= n)
                                 ? BigInt(table[static_cast<size_t>(l)][static_cast<size_t>(s)])
                                 : BigInt(0);
            if (out.as_json) {
                json doc{{"query", query},
                         {"value", v.str()},
                         {"oracle", o.str()},
                         {"agree", v == o},
                         {"method", "oracle"}};
                std::cout << doc.dump() << "\n";
            } else {
                std::cout << v << " / " << o << (v == o ? " (agree)" : " (DISAGREE)") << "\n";
            }
            if (v != o) std::exit(kExitVerifyFail);
        } else {
            out.value(query, v, "series");
        }
        return;
    }
    const BigInt v = count_occurrences_total(w, n);
    if (with_oracle) {
        const BigInt o = oracle::total_occurrences(w, n);
        if (out.as_json) {
            json doc{{"query", query},
                     {"value", v.str()},
                     {"oracle", o.str()},
                     {"agree", v == o},
                     {"method", "oracle"}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << v << " / " << o << (v == o ? " (agree)" : " (DISAGREE)") << "\n";
        }
        if (v != o) std::exit(kExitVerifyFail);
    } else {
        out.value(query, v, "series");
    }
}

void cmd_gf(const std::string& pattern_arg, const std::string& caps_text, bool pv_only,
            const Output& out) {
    const Spop w = Spop::parse(read_pattern_arg(pattern_arg));
    Caps caps{8, 0, 0};
    if (!caps_text.empty()) {
        caps = {0, 0, 0};
        if (std::sscanf(caps_text.c_str(), "%d,%d,%d", &caps.nx, &caps.ny, &caps.nz) < 1)
            throw CLI::ValidationError("gf", "bad --caps (use Nx or Nx,Ny,Nz)");
    }
    TruncatedSeries3 series = [&] {
        if (pv_only) {
            if (w.linear_extensions().size() != 1)
                throw std::invalid_argument("--pv needs a segmented pattern, not a general SPOP");
            return expand(pattern_gf(w.linear_extensions().front()), {caps.nx, 0, 0});
        }
        return expand(omega(w), caps);
    }();
    if (out.as_json) {
        json coeffs = json::array();
        for (int a = 0; a <= series.caps().nx; ++a)
            for (int b = 0; b <= series.caps().ny; ++b)
                for (int c = 0; c <= series.caps().nz; ++c)
                    if (series.coeff(a, b, c) != 0)
                        coeffs.push_back({a, b, c, series.coeff(a, b, c).str()});
        json doc{{"query", {{"pattern", w.str()}, {"caps", {caps.nx, caps.ny, caps.nz}}}},
                 {"coefficients", coeffs}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << dump(series);
    }
}

void cmd_kparts(int n, int k, int l, int s, bool table, const Output& out) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("kparts: requires 1 <= k <= n");
    json query{{"n", n}, {"k", k}};
    if (table) {
        if (k == n) throw std::domain_error("kparts: no (l,s) table for k = n");
        json rows = json::array();
        BigInt grand = 0;
        std::string text = "l\\s";
        for (int s2 = 0; s2 <= n - k; ++s2) text += '\t' + std::to_string(s2);
        text += "\tsum\n";
        for (int l2 = 1; l2 <= n - k; ++l2) {
            BigInt row_sum = 0;
            json row = json::array();
            text += std::to_string(l2);
            for (int s2 = 0; s2 <= n - k; ++s2) {
                const BigInt v = f_closed(n, k, l2, s2);
                row_sum += v;
                row.push_back(v.str());
                text += '\t' + v.str();
            }
            text += '\t' + row_sum.str() + '\n';
            grand += row_sum;
            rows.push_back(row);
        }
        text += "total\t" + grand.str() + '\n';
        if (out.as_json) {
            json doc{{"query", query}, {"table", rows}, {"total", grand.str()},
                     {"method", "closed-form"}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << text;
        }
        return;
    }
    if (l >= 0 || s >= 0) {
        if (l < 0 || s < 0)
            throw CLI::ValidationError("kparts", "--l and --s must be given together");
        query["l"] = l;
        query["s"] = s;
        out.value(query, f_closed(n, k, l, s), "closed-form");
        return;
    }
    out.value(query, k == n ? BigInt(1) : total_kparts(n, k), "closed-form");
}

void cmd_enumerate(const std::string& kind, int n, int parts, int k, const Output& out) {
    auto print = [&](const std::string& line) { std::cout << line << "\n"; };
    BigInt count = 0;
    if (kind == "compositions") {
        if (parts >= 0) {
            for (const auto& c : FixedPartsRange(n, parts)) print(c.str()), ++count;
        } else {
            for (const auto& c : CompositionRange(n)) print(c.str()), ++count;
        }
    } else if (kind == "palindromes") {
        for (const auto& c : PalindromeRange(n)) print(c.str()), ++count;
    } else if (kind == "sperms") {
        for (const auto& p : enumerate_S(n, k)) print(p.str()), ++count;
    } else if (kind == "downup") {
        for (const auto& p : enumerate_downup(n)) print(p.str()), ++count;
    } else if (kind == "s1") {
        for (const auto& p : enumerate_s1(n)) print(perm_str(p)), ++count;
    } else if (kind == "s2") {
        for (const auto& p : enumerate_s2(n)) print(perm_str(p)), ++count;
    } else if (kind == "s3") {
        for (const auto& p : enumerate_s3(n)) print(perm_str(p)), ++count;
    } else if (kind == "s4") {
        for (const auto& p : enumerate_s4(n)) print(perm_str(p)), ++count;
    } else if (kind == "bitonic") {
        for (const auto& b : enumerate_bitonic(n)) print(b.bits), ++count;
    } else if (kind == "nosingleton") {
        for (const auto& b : enumerate_no_singleton(n)) print(b.bits), ++count;
    } else if (kind == "onedescent") {
        for (const auto& p : enumerate_one_descent_avoiders(n)) print(perm_str(p)), ++count;
    } else if (kind == "linepairs") {
        for (const auto& lp : enumerate_line_pairs(n)) print(lp.str()), ++count;
    } else {
        throw CLI::ValidationError("enumerate", "unknown kind '" + kind + "'");
    }
    if (out.as_json) {
        json doc{{"query", {{"kind", kind}, {"n", n}}}, {"count", count.str()}};
        std::cout << doc.dump() << "\n";
    }
}

void cmd_bijection(const std::string& name, const std::string& direction,
                   const std::string& payload, bool check, int n, int k, int N,
                   const Output& out) {
    const bool fwd = direction == "encode" || direction == "forward";
    if (!fwd && direction != "decode" && direction != "backward")
        throw CLI::ValidationError("bijection", "direction must be encode|decode|forward|backward");
    json query{{"bijection", name}, {"direction", direction}, {"input", payload}};
    std::string result;
    std::string back;

    if (name == "kpart") {
        if (fwd) {
            const TElement t = TElement::from_marked(MarkedKPart::parse(payload));
            const SPermutation p = kpart_encode(t);
            result = p.str();
            back = kpart_decode(p, t.n, t.k).to_marked().str();
        } else {
            if (n < 1 || k < 1)
                throw CLI::ValidationError("bijection", "kpart decode needs --n and --k");
            const TElement t = kpart_decode(SPermutation::parse(payload), n, k);
            result = t.to_marked().str();
            back = kpart_encode(t).str();
        }
    } else if (name == "pal1" || name == "pal2") {
        const bool second = name == "pal2";
        if (fwd) {
            const MarkedPalindrome mp = MarkedPalindrome::parse(payload);
            const DownUpPermutation p = second ? enc2_forward(mp) : enc1_forward(mp);
            result = p.str();
            back = (second ? enc2_inverse(p, mp.k(), mp.N()) : enc1_inverse(p, mp.k(), mp.N()))
                       .str();
        } else {
            if (k < 1 || N < 0)
                throw CLI::ValidationError("bijection", "pal decode needs --k and --N");
            const DownUpPermutation p = DownUpPermutation::parse(payload);
            const MarkedPalindrome mp = second ? enc2_inverse(p, k, N) : enc1_inverse(p, k, N);
            result = mp.str();
            back = (second ? enc2_forward(mp) : enc1_forward(mp)).str();
        }
    } else if (name == "s1") {
        if (fwd) {
            const auto b = s1_forward(perm_parse(payload));
            result = b.bits;
            back = perm_str(s1_backward(b));
        } else {
            const Perm p = s1_backward(BitonicBinary{payload});
            result = perm_str(p);
            back = s1_forward(p).bits;
        }
    } else if (name == "s2") {
        if (fwd) {
            const auto b = s2_forward(perm_parse(payload));
            result = b.bits;
            back = perm_str(s2_backward(b));
        } else {
            const Perm p = s2_backward(NoSingletonBinary{payload});
            result = perm_str(p);
            back = s2_forward(p).bits;
        }
    } else if (name == "s3") {
        if (fwd) {
            const Perm q = s3_forward(perm_parse(payload));
            result = perm_str(q);
            back = perm_str(s3_backward(q));
        } else {
            const Perm p = s3_backward(perm_parse(payload));
            result = perm_str(p);
            back = perm_str(s3_forward(p));
        }
    } else if (name == "s4") {
        if (fwd) {
            if (n < 4) throw CLI::ValidationError("bijection", "s4 forward needs --n");
            const Perm q = s4_forward(LinePair::parse(payload, n));
            result = perm_str(q);
            back = s4_backward(q).str();
        } else {
            const LinePair lp = s4_backward(perm_parse(payload));
            result = lp.str();
            back = perm_str(s4_forward(lp));
        }
    } else {
        throw CLI::ValidationError("bijection", "unknown bijection '" + name + "'");
    }

    if (check) {
        // the modules already verify their own round trips; this re-checks the
        // textual forms so --check also covers parsing and printing
        std::string cleaned = payload;
        if (back != payload) {
            try {
                if (name == "kpart" && fwd)
                    cleaned = MarkedKPart::parse(payload).str();
                else if ((name == "pal1" || name == "pal2") && fwd)
                    cleaned = MarkedPalindrome::parse(payload).str();
                else if (name == "s4" && !fwd)
                    cleaned = perm_str(perm_parse(payload));
                else
                    cleaned = payload;
            } catch (...) {
            }
        }
        if (back != cleaned) {
            std::cerr << "round-trip check failed: got back '" << back << "'\n";
            std::exit(kExitVerifyFail);
        }
    }
    out.text(query, "result", result);
}

int cmd_verify(const std::string& suite, int max_n, const Output& out) {
    VerifyReport report = run_verify(suite, VerifyOptions{max_n});
    if (out.as_json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name},
                              {"range", c.range},
                              {"status", c.pass ? "pass" : "fail"},
                              {"counterexample", c.counterexample},
                              {"ms", c.ms}});
        json doc{{"suite", suite}, {"checks", checks}, {"pass", report.all_pass()}};
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::printf("%-32s %-24s %s (%.0f ms)%s%s\n", c.name.c_str(), c.range.c_str(),
                        c.pass ? "pass" : "FAIL", c.ms,
                        c.counterexample.empty() ? "" : "  counterexample: ",
                        c.counterexample.c_str());
        }
    }
    return report.all_pass() ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"copatt: pattern occurrence counts and bijective encodings for integer "
                 "compositions"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.as_json, "JSON output");

    std::string pattern, caps_text, kind = "compositions", suite = "all", name, direction,
                payload;
    int n = 0, k = -1, l = -1, s = -1, parts = -1, N = -1, max_n = 0, cap = 0;
    bool with_oracle = false, pv_only = false, table = false, check = false;

    auto* c_count = app.add_subcommand("count", "occurrences of a pattern among compositions");
    c_count->add_option("--pattern", pattern, "digit literal, inline JSON, or @file")->required();
    c_count->add_option("--n", n, "weight")->required();
    c_count->add_option("--l", l, "outside-part count (with --s)");
    c_count->add_option("--s", s, "prefix sum (with --l)");
    c_count->add_flag("--oracle", with_oracle, "also recompute by enumeration");

    auto* c_gf = app.add_subcommand("gf", "dump a truncated series expansion");
    c_gf->add_option("--pattern", pattern)->required();
    c_gf->add_option("--caps", caps_text, "Nx or Nx,Ny,Nz (default 8)");
    c_gf->add_flag("--pv", pv_only, "expand the pattern gf instead of the trivariate form");
    c_gf->add_flag("--dump-series", [](size_t) {}, "dump coefficients (default)");

    auto* c_kparts = app.add_subcommand("kparts", "k-part counts among compositions");
    c_kparts->add_option("--n", n)->required();
    c_kparts->add_option("--k", k)->required();
    c_kparts->add_option("--l", l);
    c_kparts->add_option("--s", s);
    c_kparts->add_flag("--table", table, "full (l,s) table with sums");

    auto* c_pal = app.add_subcommand("palkparts", "k-part counts among palindromes");
    c_pal->add_option("--N", N, "palindrome weight (even)")->required();
    c_pal->add_option("--k", k, "part value (odd)")->required();

    auto* c_enum = app.add_subcommand("enumerate", "enumerate a combinatorial family");
    c_enum->add_option("--kind", kind,
                       "compositions|palindromes|sperms|downup|s1|s2|s3|s4|bitonic|"
                       "nosingleton|onedescent|linepairs");
    c_enum->add_option("--n", n)->required();
    c_enum->add_option("--parts", parts, "restrict compositions to this many parts");
    c_enum->add_option("--k", k, "part value for sperms");

    auto* c_bij = app.add_subcommand("bijection", "apply an encoding or its inverse");
    c_bij->add_option("name", name, "kpart|pal1|pal2|s1|s2|s3|s4")->required();
    c_bij->add_option("direction", direction, "encode|decode|forward|backward")->required();
    c_bij->add_option("payload", payload, "object in its text format")->required();
    c_bij->add_flag("--check", check, "verify the round trip");
    c_bij->add_option("--n", n, "ambient size where needed");
    c_bij->add_option("--k", k, "part value where needed");
    c_bij->add_option("--N", N, "palindrome weight where needed");

    auto* c_verify = app.add_subcommand("verify", "run acceptance-grade checks");
    c_verify->add_option("--suite", suite, "all|baseline|counting|kparts|pal1|pal2|gallery|series");
    c_verify->add_option("--max-n", max_n, "override the per-check default ranges");

    auto* c_cap = app.add_subcommand("cap", "print or set the resource cap");
    c_cap->add_option("--set", cap, "new cap value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (c_count->parsed()) cmd_count(pattern, n, l, s, with_oracle, out);
        else if (c_gf->parsed()) cmd_gf(pattern, caps_text, pv_only, out);
        else if (c_kparts->parsed()) cmd_kparts(n, k, l, s, table, out);
        else if (c_pal->parsed()) out.value(json{{"N", N}, {"k", k}},
                                            palindrome_kpart_count(N, k), "closed-form");
        else if (c_enum->parsed()) cmd_enumerate(kind, n, parts, k, out);
        else if (c_bij->parsed()) cmd_bijection(name, direction, payload, check, n, k, N, out);
        else if (c_verify->parsed()) return cmd_verify(suite, max_n, out);
        else if (c_cap->parsed()) {
            if (cap > 0) set_resource_cap(cap);
            std::cout << resource_cap() << "\n";
        }
    } catch (const cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const out_of_class_error& e) {
        std::cerr << "out of class: " << e.what() << "\n";
        return kExitOutOfClass;
    } catch (const CLI::Error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
