#include "copatt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "copatt/counting.hpp"
#include "copatt/enumerate.hpp"
#include "copatt/gallery.hpp"
#include "copatt/kpart_bijection.hpp"
#include "copatt/oracle.hpp"
#include "copatt/palindrome_bijection.hpp"

namespace copatt {

namespace {

// A check body reports the first counterexample through `fail` and gives its
// range through `range`.
struct CheckContext {
    std::string range;
    std::string counterexample;
    bool ok = true;

    void fail(const std::string& cx) {
        if (ok) counterexample = cx;
        ok = false;
    }
};

using CheckFn = std::function<void(CheckContext&, int max_n)>;

struct CheckDef {
    std::string name;
    std::vector<std::string> suites;
    int default_max_n;
    CheckFn fn;
};

Spop spop_11p2p() {
    PosetAlphabet a({"1", "1'", "2'"}, {{"1'", "2'"}});
    return Spop(a, {"1", "1'", "2'"});
}

std::string table_cx(const std::string& what, int n, int l, int s, const BigInt& got,
                     long long want) {
    std::ostringstream os;
    os << what << " n=" << n << " l=" << l << " s=" << s << ": closed=" << got
       << " oracle=" << want;
    return os.str();
}

// ---- baseline checks -------------------------------------------------------

void check_composition_streams(CheckContext& ctx, int max_n) {
    ctx.range = "n <= " + std::to_string(max_n);
    for (int n = 0; n <= max_n && ctx.ok; ++n) {
        BigInt cnt = 0;
        for (const auto& c : CompositionRange(n)) {
            (void)c;
            ++cnt;
        }
        if (cnt != count_compositions(n))
            ctx.fail("composition count n=" + std::to_string(n) + ": " + cnt.str());
        BigInt by_parts = 0;
        for (int l = 0; l <= n; ++l)
            for (const auto& c : FixedPartsRange(n, l)) {
                (void)c;
                ++by_parts;
            }
        if (by_parts != cnt)
            ctx.fail("parts-partition n=" + std::to_string(n) + ": " + by_parts.str());
    }
}

void check_palindrome_streams(CheckContext& ctx, int max_n) {
    ctx.range = "N <= " + std::to_string(max_n);
    for (int n = 0; n <= max_n && ctx.ok; ++n) {
        BigInt cnt = 0;
        for (const auto& c : PalindromeRange(n)) {
            if (!c.is_palindrome()) ctx.fail("non-palindrome in stream: " + c.str());
            ++cnt;
        }
        if (cnt != count_palindromes(n))
            ctx.fail("palindrome count N=" + std::to_string(n) + ": " + cnt.str());
    }
}

void check_eq1(CheckContext& ctx, int max_n) {
    ctx.range = "n <= " + std::to_string(max_n);
    for (int n = 0; n <= max_n && ctx.ok; ++n)
        for (int l = 0; l <= n + 1 && ctx.ok; ++l) {
            const BigInt closed = composition_count(n, l);
            BigInt streamed = 0;
            for (const auto& c : FixedPartsRange(n, l)) {
                (void)c;
                ++streamed;
            }
            // x^l / (1-x)^l expanded
            TruncatedSeries3 num = TruncatedSeries3::poly({{l, 0, 0, 1}});
            TruncatedSeries3 den = TruncatedSeries3::poly({{0, 0, 0, 1}});
            for (int i = 0; i < l; ++i)
                den = mul(den, TruncatedSeries3::poly({{0, 0, 0, 1}, {1, 0, 0, -1}}));
            const BigInt by_series = expand(RationalGF(num, den), {n, 0, 0}).coeff(n, 0, 0);
            if (closed != streamed || closed != by_series)
                ctx.fail("C(" + std::to_string(n) + "," + std::to_string(l) + "): closed=" +
                         closed.str() + " stream=" + streamed.str() + " series=" +
                         by_series.str());
        }
}

// ---- counting checks -------------------------------------------------------

std::vector<Spop> criterion_patterns() {
    std::vector<Spop> ws;
    for (const char* lit : {"11", "12", "21", "112", "1112", "11112"})
        ws.push_back(Spop::parse(lit));
    ws.push_back(spop_11p2p());
    return ws;
}

void check_gf_vs_oracle(CheckContext& ctx, int max_n) {
    ctx.range = "n <= " + std::to_string(max_n) + ", 7 patterns";
    for (const auto& w : criterion_patterns()) {
        for (int n = 0; n <= max_n && ctx.ok; ++n) {
            const BigInt by_gf = count_occurrences_total(w, n);
            const BigInt by_scan = oracle::total_occurrences(w, n);
            if (by_gf != by_scan)
                ctx.fail("pattern " + w.str() + " n=" + std::to_string(n) + ": gf=" +
                         by_gf.str() + " oracle=" + by_scan.str());
            if (n <= std::min(max_n, 10)) {
                const BigInt serial = oracle::total_occurrences_serial(w, n);
                if (serial != by_scan)
                    ctx.fail("pattern " + w.str() + " n=" + std::to_string(n) +
                             ": serial/parallel oracle mismatch");
            }
        }
        if (!ctx.ok) break;
    }
}

void check_trivariate(CheckContext& ctx, int max_n) {
    ctx.range = "n,l,s <= " + std::to_string(max_n) + ", w in {11,12,21}";
    for (const char* lit : {"11", "12", "21"}) {
        const Spop w = Spop::parse(lit);
        const Caps caps{max_n, max_n, max_n};
        const TruncatedSeries3 om = expand(omega(w), caps);
        for (int n = 0; n <= max_n && ctx.ok; ++n) {
            const auto table = oracle::occurrence_table(w, n);
            for (int l = 0; l <= max_n && ctx.ok; ++l)
                for (int s = 0; s <= max_n; ++s) {
                    const long long want =
                        (l <= n && s <= n) ? table[static_cast<size_t>(l)][static_cast<size_t>(s)]
                                           : 0;
                    const BigInt got = om.coeff(n, l, s);
                    if (got != want) {
                        ctx.fail(table_cx("c_" + w.str(), n, l, s, got, want));
                        break;
                    }
                }
        }
        if (!ctx.ok) break;
    }
}

void check_pattern_gf_example(CheckContext& ctx, int max_n) {
    const int degree = std::max(max_n, 16);
    ctx.range = "m in {0,1,2}, degree <= " + std::to_string(degree);
    for (int m = 0; m <= 2 && ctx.ok; ++m) {
        std::vector<int> letters(static_cast<size_t>(m) + 1, 1);
        letters.push_back(2);
        const RationalGF lhs = pattern_gf(SegmentedPattern(letters));
        // x^(m+3) / ((1-x)(1-x^(m+2)))
        const RationalGF rhs(
            TruncatedSeries3::poly({{m + 3, 0, 0, 1}}),
            mul(TruncatedSeries3::poly({{0, 0, 0, 1}, {1, 0, 0, -1}}),
                TruncatedSeries3::poly({{0, 0, 0, 1}, {m + 2, 0, 0, -1}})));
        const Caps caps{degree, 0, 0};
        if (!(expand(lhs, caps) == expand(rhs, caps)))
            ctx.fail("m=" + std::to_string(m) + ": series differ up to degree " +
                     std::to_string(degree));
        for (int n = 0; n <= std::min(degree, 12) && ctx.ok; ++n) {
            const BigInt direct = pattern_count_oracle(SegmentedPattern(letters), n);
            const BigInt via_gf = expand(lhs, caps).coeff(n, 0, 0);
            if (direct != via_gf)
                ctx.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) +
                         ": P_v oracle=" + direct.str() + " gf=" + via_gf.str());
        }
    }
}

// ---- k-part checks ---------------------------------------------------------

void check_f_closed(CheckContext& ctx, int max_n) {
    ctx.range = "n <= " + std::to_string(max_n) + ", all k,l,s";
    for (int n = 1; n <= max_n && ctx.ok; ++n)
        for (int k = 1; k <= n - 1 && ctx.ok; ++k) {
            const auto table = oracle::kpart_table(n, k);
            BigInt sum = 0;
            for (int l = 0; l <= n && ctx.ok; ++l)
                for (int s = 0; s <= n; ++s) {
                    const BigInt got = f_closed(n, k, l, s);
                    const long long want = table[static_cast<size_t>(l)][static_cast<size_t>(s)];
                    if (got != want) {
                        ctx.fail(table_cx("f(n=" + std::to_string(n) +
                                              ",k=" + std::to_string(k) + ")",
                                          n, l, s, got, want));
                        break;
                    }
                    sum += got;
                }
            if (!ctx.ok) break;
            const BigInt corollary = total_kparts(n, k);
            const int d = n - k;
            const BigInt split_form = pow2(d) + pow2(d) * (d - 1) / 4;  // 2^d + 2^(d-2)(d-1)
            if (sum != corollary || corollary != split_form)
                ctx.fail("total k-parts n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         ": sum=" + sum.str() + " closed=" + corollary.str());
        }
}

void check_kpart_bijection(CheckContext& ctx, int max_n) {
    ctx.range = "n <= " + std::to_string(max_n);
    {
        // Paper fixture: the marked 6 in 3+1+6+2
        const MarkedKPart fixture = MarkedKPart::parse("3+1+[6]+2");
        const SPermutation image = kpart_encode(TElement::from_marked(fixture));
        if (image.str() != "4 5 3 0 1 2 6")
            ctx.fail("fixture 3+1+[6]+2 -> " + image.str());
    }
    for (int n = 2; n <= max_n && ctx.ok; ++n) {
        // group encodings per k and compare with enumerate_S and f_closed
        std::map<int, std::set<SPermutation>> images;
        std::map<std::tuple<int, int, int>, long long> by_kls;
        for (const auto& c : CompositionRange(n)) {
            for (int i = 0; i < c.size() && ctx.ok; ++i) {
                if (c.part(i) == n) continue;  // k = n has no permutation encoding
                const TElement t = TElement::from_marked(MarkedKPart(c, i));
                const SPermutation p = kpart_encode(t);
                if (!p.valid()) {
                    ctx.fail("encode not in S: " + MarkedKPart(c, i).str() + " -> " + p.str());
                    break;
                }
                if (kpart_decode(p, t.n, t.k) != t) {
                    ctx.fail("round trip: " + MarkedKPart(c, i).str());
                    break;
                }
                if (!images[t.k].insert(p).second) {
                    ctx.fail("collision at " + MarkedKPart(c, i).str());
                    break;
                }
                ++by_kls[{t.k, t.l(), t.s()}];
            }
            if (!ctx.ok) break;
        }
        for (int k = 1; k <= n - 1 && ctx.ok; ++k) {
            const auto all = enumerate_S(n, k);
            const std::set<SPermutation> want(all.begin(), all.end());
            if (images[k] != want) {
                ctx.fail("image of n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " is not S (" + std::to_string(images[k].size()) + " vs " +
                         std::to_string(want.size()) + ")");
                break;
            }
            for (int l = 0; l <= n && ctx.ok; ++l)
                for (int s = 0; s <= n; ++s) {
                    const BigInt want_f = f_closed(n, k, l, s);
                    const long long have = by_kls.count({k, l, s}) ? by_kls[{k, l, s}] : 0;
                    if (want_f != have) {
                        ctx.fail(table_cx("bijection class count k=" + std::to_string(k), n, l, s,
                                          want_f, have));
                        break;
                    }
                }
        }
    }
}

// ---- palindrome checks -----------------------------------------------------

std::vector<MarkedPalindrome> all_marked_kparts(int N, int k) {
    std::vector<MarkedPalindrome> out;
    for (const auto& c : PalindromeRange(N))
        for (int i = 0; i < c.size(); ++i)
            if (c.part(i) == k) out.emplace_back(c, i);
    return out;
}

void check_pal_counts(CheckContext& ctx, int max_n) {
    ctx.range = "n <= " + std::to_string(max_n) + ", odd k";
    for (int n = 2; n <= max_n && ctx.ok; ++n) {
        const int N = 2 * (n - 1);
        for (int k = 1; k <= n - 1; k += 2) {
            const BigInt closed = palindrome_kpart_count(N, k);
            const BigInt scan = oracle::palindrome_kparts(N, k);
            const BigInt serial = oracle::palindrome_kparts_serial(N, k);
            const BigInt downup = BigInt(n - k + 1) * pow2(n - k - 1);
            if (closed != scan || scan != serial || closed != downup) {
                ctx.fail("N=" + std::to_string(N) + " k=" + std::to_string(k) + ": closed=" +
                         closed.str() + " oracle=" + scan.str() + " serial=" + serial.str());
                break;
            }
        }
    }
}

void check_pal_encoding(CheckContext& ctx, int max_n, bool second) {
    ctx.range = "n <= " + std::to_string(max_n) + ", odd k";
    auto fwd = second ? enc2_forward : enc1_forward;
    auto inv = second ? enc2_inverse : enc1_inverse;
    if (second) {
        const struct {
            const char* marked;
            const char* perm;
        } fixtures[] = {
            {"2+[1]+2+1+4+1+2+1+2", "4 7 6 3 1 2 5 8 9"},
            {"[5]+1+1+5", "1 3 2"},
            {"1+5+[5]+1", "3 2 1"},
            {"[5]+2+5", "1 2 3"},
        };
        for (const auto& f : fixtures) {
            const auto got = enc2_forward(MarkedPalindrome::parse(f.marked)).str();
            if (got != f.perm) {
                ctx.fail(std::string("fixture ") + f.marked + " -> " + got + " (want " + f.perm +
                         ")");
                return;
            }
        }
    }
    for (int n = 2; n <= max_n && ctx.ok; ++n) {
        const int N = 2 * (n - 1);
        for (int k = 1; k <= n - 1 && ctx.ok; k += 2) {
            const int m = n - k + 1;
            const auto downup = enumerate_downup(m);
            const std::set<DownUpPermutation> want(downup.begin(), downup.end());
            std::set<DownUpPermutation> image;
            for (const auto& mp : all_marked_kparts(N, k)) {
                DownUpPermutation p = fwd(mp);
                if (!p.valid()) {
                    ctx.fail("not down-up: " + mp.str() + " -> " + p.str());
                    break;
                }
                if (!image.insert(p).second) {
                    ctx.fail("collision at " + mp.str() + " -> " + p.str());
                    break;
                }
                const MarkedPalindrome back = inv(p, k, N);
                if (back != mp) {
                    ctx.fail("round trip: " + mp.str() + " -> " + p.str() + " -> " + back.str());
                    break;
                }
            }
            if (!ctx.ok) break;
            if (image != want)
                ctx.fail("image N=" + std::to_string(N) + " k=" + std::to_string(k) + ": " +
                         std::to_string(image.size()) + " of " + std::to_string(want.size()));
            for (const auto& p : downup) {
                const MarkedPalindrome mp = inv(p, k, N);
                if (fwd(mp) != p) {
                    ctx.fail("inverse round trip at " + p.str());
                    break;
                }
            }
        }
    }
}

// ---- gallery checks --------------------------------------------------------

void check_gallery_s1(CheckContext& ctx, int max_n) {
    ctx.range = "n <= " + std::to_string(max_n);
    for (int n = 1; n <= max_n && ctx.ok; ++n) {
        const auto cls = enumerate_s1(n);
        if (BigInt(cls.size()) != BigInt(n) * n - n + 2) {
            ctx.fail("|S_1(" + std::to_string(n) + ")| = " + std::to_string(cls.size()));
            break;
        }
        const auto partner = enumerate_bitonic(n);
        std::set<std::string> want;
        for (const auto& b : partner) want.insert(b.bits);
        std::set<std::string> image;
        for (const auto& p : cls) {
            const auto b = s1_forward(p);
            if (!image.insert(b.bits).second) {
                ctx.fail("collision at " + perm_str(p));
                break;
            }
            if (s1_backward(b) != p) {
                ctx.fail("round trip: " + perm_str(p) + " -> " + b.bits);
                break;
            }
        }
        if (ctx.ok && image != want)
            ctx.fail("image size " + std::to_string(image.size()) + " vs bitonic " +
                     std::to_string(want.size()) + " at n=" + std::to_string(n));
    }
}

void check_gallery_s2(CheckContext& ctx, int max_n) {
    ctx.range = "n <= " + std::to_string(max_n);
    {
        const auto got = s2_forward(perm_parse("8 9 6 7 5 3 4 1 2")).bits;
        if (got != "110001100") ctx.fail("fixture 896753412 -> " + got);
    }
    std::vector<BigInt> fib{1, 1};
    for (int i = 2; i <= max_n; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
    for (int n = 0; n <= max_n && ctx.ok; ++n) {
        const auto cls = enumerate_s2(n);
        if (BigInt(cls.size()) != 2 * fib[static_cast<size_t>(n)]) {
            ctx.fail("|S_2(" + std::to_string(n) + ")| = " + std::to_string(cls.size()));
            break;
        }
        const auto partner = enumerate_no_singleton(n + 2);
        std::set<std::string> want;
        for (const auto& b : partner) want.insert(b.bits);
        std::set<std::string> image;
        for (const auto& p : cls) {
            const auto b = s2_forward(p);
            if (!image.insert(b.bits).second || s2_backward(b) != p) {
                ctx.fail("round trip: " + perm_str(p) + " -> " + b.bits);
                break;
            }
        }
        if (ctx.ok && image != want)
            ctx.fail("image size " + std::to_string(image.size()) + " vs no-singleton " +
                     std::to_string(want.size()) + " at n=" + std::to_string(n));
    }
}

void check_gallery_s3(CheckContext& ctx, int max_n) {
    ctx.range = "n <= " + std::to_string(max_n);
    for (int n = 0; n <= max_n && ctx.ok; ++n) {
        const auto avoiders = enumerate_one_descent_avoiders(n);
        const auto cls = enumerate_s3(n);
        if (avoiders.size() != cls.size() ||
            BigInt(cls.size()) != binomial(n + 3, 3)) {
            ctx.fail("sizes at n=" + std::to_string(n) + ": avoiders=" +
                     std::to_string(avoiders.size()) + " S_3=" + std::to_string(cls.size()));
            break;
        }
        std::set<Perm> want(cls.begin(), cls.end());
        std::set<Perm> image;
        for (const auto& p : avoiders) {
            const Perm q = s3_forward(p);
            if (!image.insert(q).second || s3_backward(q) != p) {
                ctx.fail("round trip: " + perm_str(p) + " -> " + perm_str(q));
                break;
            }
        }
        if (ctx.ok && image != want) ctx.fail("image mismatch at n=" + std::to_string(n));
    }
}

void check_gallery_s4(CheckContext& ctx, int max_n) {
    ctx.range = "4 <= n <= " + std::to_string(max_n);
    for (int n = 4; n <= max_n && ctx.ok; ++n) {
        const auto pairs = enumerate_line_pairs(n);
        const auto cls = enumerate_s4(n);
        if (pairs.size() != cls.size() || BigInt(cls.size()) != 3 * binomial(n, 4)) {
            ctx.fail("sizes at n=" + std::to_string(n));
            break;
        }
        std::set<Perm> want(cls.begin(), cls.end());
        std::set<Perm> image;
        for (const auto& lp : pairs) {
            const Perm q = s4_forward(lp);
            if (!image.insert(q).second || !(s4_backward(q) == lp)) {
                ctx.fail("round trip: " + lp.str() + " -> " + perm_str(q));
                break;
            }
        }
        if (ctx.ok && image != want) ctx.fail("image mismatch at n=" + std::to_string(n));
    }
}

// ---- series checks ---------------------------------------------------------

void check_series_laws(CheckContext& ctx, int max_n) {
    const int cases = std::max(200, max_n);
    ctx.range = std::to_string(cases) + " random cases, caps (8,8,8)";
    std::mt19937 rng(20240923);
    std::uniform_int_distribution<int> coeff(-4, 4);
    const Caps caps{8, 8, 8};
    const Caps big{10, 10, 10};
    auto random_series = [&](Caps c) {
        TruncatedSeries3 f(c);
        for (int a = 0; a <= c.nx; ++a)
            for (int b = 0; b <= c.ny; ++b)
                for (int cc = 0; cc <= c.nz; ++cc) f.set(a, b, cc, coeff(rng));
        return f;
    };
    for (int it = 0; it < cases && ctx.ok; ++it) {
        const auto f = random_series(caps), g = random_series(caps), h = random_series(caps);
        const auto tag = "case " + std::to_string(it);
        if (!(add(f, g) == add(g, f))) ctx.fail(tag + ": add not commutative");
        if (!(mul(f, g) == mul(g, f))) ctx.fail(tag + ": mul not commutative");
        if (!(mul(mul(f, g), h) == mul(f, mul(g, h)))) ctx.fail(tag + ": mul not associative");
        if (!(mul(f, add(g, h)) == add(mul(f, g), mul(f, h))))
            ctx.fail(tag + ": not distributive");
        if (!(mul_serial(f, g) == mul(f, g))) ctx.fail(tag + ": parallel product differs");

        // truncation coherence: restrict then multiply == multiply then restrict
        const auto F = random_series(big), G = random_series(big);
        if (!(mul(F, G).restricted(caps) == mul(F.restricted(caps), G.restricted(caps))))
            ctx.fail(tag + ": truncation not coherent");

        // invert_unit is a two-sided inverse
        TruncatedSeries3 u = random_series(caps);
        u.set(0, 0, 0, it % 2 ? 1 : -1);
        const auto inv = invert_unit(u);
        if (!(mul(u, inv) == TruncatedSeries3::one(caps)) ||
            !(mul(inv, u) == TruncatedSeries3::one(caps)))
            ctx.fail(tag + ": invert_unit not two-sided");
    }
}

// ---- registry --------------------------------------------------------------

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"baseline/composition-streams", {"baseline"}, 16,
         [](CheckContext& c, int m) { check_composition_streams(c, m); }},
        {"baseline/palindrome-streams", {"baseline"}, 16,
         [](CheckContext& c, int m) { check_palindrome_streams(c, m); }},
        {"baseline/eq1-parts-count", {"baseline"}, 14,
         [](CheckContext& c, int m) { check_eq1(c, m); }},
        {"counting/gf-vs-oracle", {"counting"}, 12,
         [](CheckContext& c, int m) { check_gf_vs_oracle(c, m); }},
        {"counting/trivariate", {"counting"}, 10,
         [](CheckContext& c, int m) { check_trivariate(c, m); }},
        {"counting/pattern-gf-example", {"counting"}, 16,
         [](CheckContext& c, int m) { check_pattern_gf_example(c, m); }},
        {"kparts/f-closed", {"kparts"}, 14,
         [](CheckContext& c, int m) { check_f_closed(c, m); }},
        {"kparts/bijection", {"kparts"}, 12,
         [](CheckContext& c, int m) { check_kpart_bijection(c, m); }},
        {"pal/counts", {"pal1", "pal2"}, 12,
         [](CheckContext& c, int m) { check_pal_counts(c, m); }},
        {"pal/enc1", {"pal1"}, 12,
         [](CheckContext& c, int m) { check_pal_encoding(c, m, false); }},
        {"pal/enc2", {"pal2"}, 12,
         [](CheckContext& c, int m) { check_pal_encoding(c, m, true); }},
        {"gallery/s1", {"gallery"}, 10,
         [](CheckContext& c, int m) { check_gallery_s1(c, m); }},
        {"gallery/s2", {"gallery"}, 10,
         [](CheckContext& c, int m) { check_gallery_s2(c, m); }},
        {"gallery/s3", {"gallery"}, 8,
         [](CheckContext& c, int m) { check_gallery_s3(c, m); }},
        {"gallery/s4", {"gallery"}, 10,
         [](CheckContext& c, int m) { check_gallery_s4(c, m); }},
        {"series/ring-laws", {"series"}, 200,
         [](CheckContext& c, int m) { check_series_laws(c, m); }},
    };
    return defs;
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> verify_suites() {
    std::set<std::string> names{"all"};
    for (const auto& d : registry())
        for (const auto& s : d.suites) names.insert(s);
    return {names.begin(), names.end()};
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts) {
    const auto known = verify_suites();
    if (std::find(known.begin(), known.end(), suite) == known.end())
        throw std::invalid_argument("unknown verify suite '" + suite + "'");
    VerifyReport report;
    for (const auto& def : registry()) {
        if (suite != "all" &&
            std::find(def.suites.begin(), def.suites.end(), suite) == def.suites.end())
            continue;
        CheckContext ctx;
        const int max_n = opts.max_n > 0 ? opts.max_n : def.default_max_n;
        const auto start = std::chrono::steady_clock::now();
        def.fn(ctx, max_n);
        const auto stop = std::chrono::steady_clock::now();
        report.checks.push_back(
            {def.name, ctx.range, ctx.ok, ctx.counterexample,
             std::chrono::duration<double, std::milli>(stop - start).count()});
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return report;
}

}  // namespace copatt
