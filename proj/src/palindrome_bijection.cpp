#include "copatt/palindrome_bijection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "copatt/config.hpp"

namespace copatt {

MarkedPalindrome::MarkedPalindrome(Composition p, int idx) : palindrome(std::move(p)), index(idx) {
    if (idx < 0 || idx >= palindrome.size())
        throw std::invalid_argument("MarkedPalindrome: index out of range");
    if (!palindrome.is_palindrome())
        throw std::invalid_argument("MarkedPalindrome: composition is not palindromic");
    if (palindrome.weight() % 2 != 0)
        throw std::invalid_argument("MarkedPalindrome: weight must be even");
    if (k() % 2 == 0) throw std::invalid_argument("MarkedPalindrome: marked part must be odd");
}

MarkedPalindrome MarkedPalindrome::parse(const std::string& text) {
    MarkedKPart mk = MarkedKPart::parse(text);
    return MarkedPalindrome(mk.composition, mk.index);
}

bool DownUpPermutation::valid() const {
    const int m = size();
    if (m < 2) return false;
    std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
    for (int e : entries) {
        if (e < 1 || e > m || seen[static_cast<size_t>(e)]) return false;
        seen[static_cast<size_t>(e)] = true;
    }
    const int l = valley();
    for (int i = 2; i < l; ++i)
        if (entries[static_cast<size_t>(i - 1)] <= entries[static_cast<size_t>(i)]) return false;
    for (int i = l; i < m; ++i)
        if (entries[static_cast<size_t>(i - 1)] >= entries[static_cast<size_t>(i)]) return false;
    return true;
}

int DownUpPermutation::valley() const {
    int best = 2;
    for (int i = 3; i <= size(); ++i)
        if (entries[static_cast<size_t>(i - 1)] < entries[static_cast<size_t>(best - 1)]) best = i;
    return best;
}

DownUpPermutation DownUpPermutation::parse(const std::string& text) {
    std::istringstream in(text);
    DownUpPermutation p;
    int v;
    while (in >> v) p.entries.push_back(v);
    if (!in.eof()) throw std::invalid_argument("bad permutation text '" + text + "'");
    if (p.entries.size() < 2) throw std::invalid_argument("permutation needs at least 2 entries");
    return p;
}

std::string DownUpPermutation::str() const {
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(entries[i]);
    }
    return out;
}

namespace {

// Center of a palindrome: for an odd number of parts the (even) middle part,
// for an even number a virtual central part 0.
struct Center {
    bool has_part;   // odd number of parts
    int left_count;  // parts strictly left of the center
    int t;           // half the central part
    int index;       // index of the central part, -1 if virtual
};

Center center_of(const Composition& p) {
    const int T = p.size();
    if (T % 2 == 1) {
        const int c0 = (T - 1) / 2;
        return {true, c0, p.part(c0) / 2, c0};
    }
    return {false, T / 2, 0, -1};
}

int prefix_sum(const std::vector<int>& v, int count) {
    return std::accumulate(v.begin(), v.begin() + count, 0);
}

}  // namespace

std::pair<int, Composition> enc1_perm_to_pair(const DownUpPermutation& p) {
    if (!p.valid()) throw out_of_class_error("enc1: input is not a down-up permutation");
    const int m = p.size();
    const int d = m - 1;  // n - k
    const int w1 = p.entries.front();
    const int l = p.valley();
    if (l == 2) return {w1, Composition({d})};

    auto w = [&](int i) { return p.entries[static_cast<size_t>(i - 1)]; };
    std::vector<int> wbar(static_cast<size_t>(l) + 1, 0);  // wbar[2..l-1]
    for (int i = 2; i <= l - 1; ++i) wbar[static_cast<size_t>(i)] = w(i) - (w(i) < w1 ? 1 : 2);

    std::vector<int> alpha(static_cast<size_t>(l - 1));
    alpha[0] = wbar[static_cast<size_t>(l - 1)];
    for (int i = 2; i <= l - 2; ++i)
        alpha[static_cast<size_t>(i - 1)] =
            wbar[static_cast<size_t>(l - i)] - wbar[static_cast<size_t>(l - i + 1)];
    alpha[static_cast<size_t>(l - 2)] = d - wbar[2];
    for (int a : alpha)
        if (a < 1) throw out_of_class_error("enc1: permutation yields a nonpositive part");
    return {w1, Composition(std::move(alpha))};
}

DownUpPermutation enc1_pair_to_perm(int w1, const Composition& alpha) {
    const int d = alpha.weight();
    const int m = d + 1;
    const int l = alpha.size() + 1;
    if (w1 < 1 || w1 > m) throw out_of_class_error("enc1: w1 out of range");

    DownUpPermutation p;
    p.entries.push_back(w1);
    std::vector<bool> used(static_cast<size_t>(m) + 1, false);
    used[static_cast<size_t>(w1)] = true;
    if (l > 2) {
        for (int i = 2; i <= l - 1; ++i) {
            const int wbar = prefix_sum(alpha.parts(), l - i);
            const int wi = (wbar + 1 < w1) ? wbar + 1 : wbar + 2;
            if (wi < 1 || wi > m || used[static_cast<size_t>(wi)])
                throw out_of_class_error("enc1: pair does not define a permutation");
            p.entries.push_back(wi);
            used[static_cast<size_t>(wi)] = true;
        }
    }
    for (int v = 1; v <= m; ++v)
        if (!used[static_cast<size_t>(v)]) p.entries.push_back(v);

    if (!p.valid() || enc1_perm_to_pair(p) != std::make_pair(w1, alpha))
        throw out_of_class_error("enc1: pair fails the round-trip check");
    return p;
}

MarkedPalindrome enc1_pair_to_marked(int w1, const Composition& alpha, int k) {
    const int d = alpha.weight();
    const int m = d + 1;
    const int l = alpha.size() + 1;
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("enc1: k must be odd and positive");
    if (alpha.empty() || w1 < 1 || w1 > m)
        throw out_of_class_error("enc1: inconsistent pair parameters");

    const auto& a = alpha.parts();
    const int last = a.back();
    const int center_val = 2 * (last - 1);  // omitted when zero
    std::vector<int> prefix(a.begin(), a.end() - 1);  // alpha_1 .. alpha_{l-2}

    std::vector<int> parts;
    int marked = -1;
    auto push = [&parts](int v) { parts.push_back(v); };
    auto push_range = [&parts](auto first, auto lim) { parts.insert(parts.end(), first, lim); };

    if (w1 == 1 || w1 == m) {
        // Case I: k at an end
        push(k);
        push_range(prefix.begin(), prefix.end());
        if (center_val > 0) push(center_val);
        push_range(prefix.rbegin(), prefix.rend());
        push(k);
        marked = (w1 == 1) ? 0 : static_cast<int>(parts.size()) - 1;
    } else {
        // locate the gap w1 among the stones of alpha
        const auto splits = alpha.splits();
        auto it = std::find(splits.begin(), splits.end(), w1 - 1);
        if (it != splits.end()) {
            // Case II: k inserted at a split, marked on the left side
            const int j = static_cast<int>(it - splits.begin());
            std::vector<int> left(a.begin(), a.begin() + j);
            left.push_back(k);
            left.insert(left.end(), a.begin() + j, a.end() - 1);
            push_range(left.begin(), left.end());
            if (center_val > 0) push(center_val);
            push_range(left.rbegin(), left.rend());
            marked = j;
        } else {
            // Case III: the gap is inside part j
            int j = 1, acc = 0;
            while (acc + a[static_cast<size_t>(j - 1)] < w1 - 1) acc += a[static_cast<size_t>(j++ - 1)];
            const int ap = w1 - 1 - acc;
            const int app = a[static_cast<size_t>(j - 1)] - ap;
            if (ap < 1 || app < 1) throw out_of_class_error("enc1: bad gap split");
            if (j == l - 1) {
                // Case IIIA: gap in the last part, k adjacent to the center
                push_range(prefix.begin(), prefix.end());
                push(ap);
                push(k);
                if (2 * (app - 1) > 0) push(2 * (app - 1));
                marked = static_cast<int>(parts.size());
                push(k);
                push(ap);
                push_range(prefix.rbegin(), prefix.rend());
            } else {
                // Case IIIB: marked on the right side, away from the center
                std::vector<int> left(a.begin(), a.begin() + (j - 1));
                left.push_back(ap);
                const int k_at = static_cast<int>(left.size());
                left.push_back(k);
                left.push_back(app);
                left.insert(left.end(), a.begin() + j, a.end() - 1);
                push_range(left.begin(), left.end());
                if (center_val > 0) push(center_val);
                marked = static_cast<int>(parts.size()) +
                         (static_cast<int>(left.size()) - 1 - k_at);
                push_range(left.rbegin(), left.rend());
            }
        }
    }
    return MarkedPalindrome(Composition(std::move(parts)), marked);
}

std::pair<int, Composition> enc1_marked_to_pair(const MarkedPalindrome& mp) {
    const auto& P = mp.palindrome.parts();
    const int T = mp.palindrome.size();
    const int idx = mp.index;
    const int k = mp.k();
    const int d = mp.n() - k;
    const int m = d + 1;
    if (d < 1) throw out_of_class_error("enc1: no encoding for k >= n");

    auto slice = [&P](int first, int lim) {
        return std::vector<int>(P.begin() + first, P.begin() + std::max(first, lim));
    };

    int w1 = -1;
    std::vector<int> alpha;
    if (idx == 0 || idx == T - 1) {
        // Case I
        std::vector<int> middle = slice(1, T - 1);
        const int msz = static_cast<int>(middle.size());
        if (msz % 2 == 1) {
            const int c = middle[static_cast<size_t>(msz / 2)];
            if (c % 2 != 0) throw out_of_class_error("enc1: odd central part");
            alpha = std::vector<int>(middle.begin(), middle.begin() + msz / 2);
            alpha.push_back(c / 2 + 1);
        } else {
            alpha = std::vector<int>(middle.begin(), middle.begin() + msz / 2);
            alpha.push_back(1);
        }
        w1 = (idx == 0) ? 1 : m;
    } else {
        const Center c = center_of(mp.palindrome);
        if (c.has_part && idx == c.index)
            throw out_of_class_error("enc1: marked part is the center");
        const bool left = idx < c.left_count;
        const int al_last = c.has_part ? mp.palindrome.part(c.index) / 2 + 1 : 1;
        if (left) {
            // Case II
            alpha = slice(0, idx);
            const auto rest = slice(idx + 1, c.left_count);
            alpha.insert(alpha.end(), rest.begin(), rest.end());
            alpha.push_back(al_last);
            w1 = 1 + prefix_sum(P, idx);
        } else {
            const int l = c.left_count;
            const int idxm = T - 1 - idx;  // mirrored mark, inside the left half
            if (idxm == l - 1) {
                // Case IIIA
                const int ap = P[static_cast<size_t>(l - 2)];
                const int app = al_last;
                alpha = slice(0, l - 2);
                alpha.push_back(ap + app);
                w1 = 1 + prefix_sum(P, l - 1);
            } else {
                // Case IIIB
                const int j = idxm;
                if (j < 1 || j > l - 2) throw out_of_class_error("enc1: bad marked position");
                const int ap = P[static_cast<size_t>(j - 1)];
                const int app = P[static_cast<size_t>(j + 1)];
                alpha = slice(0, j - 1);
                alpha.push_back(ap + app);
                const auto rest = slice(j + 2, l);
                alpha.insert(alpha.end(), rest.begin(), rest.end());
                alpha.push_back(al_last);
                w1 = 1 + prefix_sum(P, j);
            }
        }
    }
    Composition a(std::move(alpha));
    if (a.weight() != d || w1 < 1 || w1 > m)
        throw out_of_class_error("enc1: palindrome fails pair reconstruction");
    return {w1, a};
}

DownUpPermutation enc1_forward(const MarkedPalindrome& mp) {
    auto [w1, alpha] = enc1_marked_to_pair(mp);
    return enc1_pair_to_perm(w1, alpha);
}

MarkedPalindrome enc1_inverse(const DownUpPermutation& p, int k, int N) {
    auto [w1, alpha] = enc1_perm_to_pair(p);
    if (N != 2 * (k + alpha.weight() - 1))
        throw out_of_class_error("enc1: permutation size does not match k and N");
    MarkedPalindrome mp = enc1_pair_to_marked(w1, alpha, k);
    if (enc1_forward(mp) != p) throw out_of_class_error("enc1: input fails the round-trip check");
    return mp;
}

namespace {

// Slot filler for the second encoding. Values 1 and 2 are reserved: when a
// rule asks for a value and only they remain, they go into the two remaining
// free slots with 1 first, and everything after that is skipped.
struct SlotFill {
    int m;
    std::vector<int> slot;      // 1-based, 0 = empty
    std::vector<bool> placed;   // 1-based by value
    bool finished = false;

    explicit SlotFill(int m_)
        : m(m_), slot(static_cast<size_t>(m_) + 1, 0),
          placed(static_cast<size_t>(m_) + 1, false) {}

    int largest_generic() const {
        for (int v = m; v >= 3; --v)
            if (!placed[static_cast<size_t>(v)]) return v;
        return -1;
    }
    int leftmost_free(int from) const {
        for (int i = from; i <= m; ++i)
            if (slot[static_cast<size_t>(i)] == 0) return i;
        return -1;
    }
    int rightmost_free() const {
        for (int i = m; i >= 1; --i)
            if (slot[static_cast<size_t>(i)] == 0) return i;
        return -1;
    }
    void place(int s, int v) {
        if (s < 1 || s > m || slot[static_cast<size_t>(s)] != 0 || placed[static_cast<size_t>(v)])
            throw out_of_class_error("enc2: slot conflict during filling");
        slot[static_cast<size_t>(s)] = v;
        placed[static_cast<size_t>(v)] = true;
    }
    // 1 then 2 into the free slots, by position
    void endgame() {
        int p1 = leftmost_free(1);
        place(p1, 1);
        int p2 = leftmost_free(1);
        place(p2, 2);
        finished = true;
    }
    // a computed value lands in a fixed slot unless it is reserved
    void place_or_endgame(int s, int v) {
        if (v <= 2) endgame();
        else place(s, v);
    }
};

// The filling algorithm for a mark left of the center: C is everything left
// of the mark, D everything strictly between the mark and the center, t half
// the central part.
std::vector<int> fill_slots(const std::vector<int>& C, const std::vector<int>& D, int t, int m) {
    SlotFill f(m);
    if (D.empty() && t == 0) {
        f.place_or_endgame(1, m);
    } else {
        for (int i = m - t + 1; i <= m; ++i) f.place(i, i);
        if (D.empty()) {
            // the center is the part adjacent to the mark; its value takes slot 1
            f.place_or_endgame(1, m - t);
        } else {
            f.place_or_endgame(2, m - t);
            for (int di = static_cast<int>(D.size()) - 1; di >= 0 && !f.finished; --di) {
                const int a = D[static_cast<size_t>(di)];
                for (int r = 0; r < a - 1 && !f.finished; ++r) {
                    const int v = f.largest_generic();
                    if (v < 0) { f.endgame(); break; }
                    f.place(f.rightmost_free(), v);
                }
                if (f.finished) break;
                const int v = f.largest_generic();
                if (v < 0) { f.endgame(); break; }
                f.place(di == 0 ? 1 : f.leftmost_free(3), v);
            }
        }
    }
    if (!f.finished) {
        if (C.empty() || (C.size() == 1 && C[0] == 1)) {
            for (int v = 1; v <= f.m; ++v) {
                if (f.placed[static_cast<size_t>(v)]) continue;
                f.place(f.leftmost_free(1), v);
            }
            f.finished = true;
        } else {
            std::string bits;
            for (size_t i = 0; i < C.size(); ++i) {
                bits.append(static_cast<size_t>(C[i] - 1), '0');
                if (i + 1 < C.size()) bits.push_back('1');
            }
            for (auto it = bits.rbegin(); it != bits.rend() && !f.finished; ++it) {
                const int v = f.largest_generic();
                if (v < 0) { f.endgame(); break; }
                f.place(*it == '0' ? f.leftmost_free(1) : f.rightmost_free(), v);
            }
            if (!f.finished) f.endgame();
        }
    }
    for (int i = 1; i <= m; ++i)
        if (f.slot[static_cast<size_t>(i)] == 0)
            throw out_of_class_error("enc2: filling left an empty slot");
    return std::vector<int>(f.slot.begin() + 1, f.slot.end());
}

void swap_values_12(std::vector<int>& entries) {
    for (int& e : entries) {
        if (e == 1) e = 2;
        else if (e == 2) e = 1;
    }
}

}  // namespace

DownUpPermutation enc2_forward(const MarkedPalindrome& mp) {
    const int k = mp.k();
    const int d = mp.n() - k;
    const int m = d + 1;
    if (d < 1) throw out_of_class_error("enc2: no encoding for k >= n");

    const Center c = center_of(mp.palindrome);
    if (c.has_part && mp.index == c.index)
        throw out_of_class_error("enc2: marked part is the center");
    const bool left = mp.index < c.left_count;
    const int T = mp.palindrome.size();
    const int idx = left ? mp.index : T - 1 - mp.index;

    const auto& P = mp.palindrome.parts();
    std::vector<int> C(P.begin(), P.begin() + idx);
    std::vector<int> D(P.begin() + idx + 1, P.begin() + c.left_count);

    DownUpPermutation p;
    p.entries = fill_slots(C, D, c.t, m);
    if (!left) swap_values_12(p.entries);
    if (!p.valid()) throw out_of_class_error("enc2: filling produced a non-down-up permutation");
    return p;
}

namespace {

// Recovers C from the step-2 bit placements: values start_v down to 3 were
// placed 0 -> leftmost free, 1 -> rightmost free among the slots in S.
std::vector<int> parse_c_bits(const std::vector<int>& pos, int start_v, std::set<int>& S) {
    std::string bits_rev;
    for (int v = start_v; v >= 3; --v) {
        const int p = pos[static_cast<size_t>(v)];
        if (S.empty()) throw out_of_class_error("enc2 inverse: ran out of slots parsing C");
        if (p == *S.begin()) bits_rev.push_back('0');
        else if (p == *S.rbegin()) bits_rev.push_back('1');
        else throw out_of_class_error("enc2 inverse: value placement matches no C rule");
        S.erase(p);
    }
    std::string bits(bits_rev.rbegin(), bits_rev.rend());
    if (bits.empty()) return {1};
    std::vector<int> C;
    int run = 0;
    for (char b : bits) {
        if (b == '0') ++run;
        else {
            C.push_back(run + 1);
            run = 0;
        }
    }
    C.push_back(run + 1);
    return C;
}

}  // namespace

MarkedPalindrome enc2_inverse(const DownUpPermutation& p, int k, int N) {
    if (N < 0 || N % 2 != 0) throw std::invalid_argument("enc2 inverse: N must be even");
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("enc2 inverse: k must be odd");
    if (!p.valid()) throw out_of_class_error("enc2 inverse: not a down-up permutation");
    const int n = N / 2 + 1;
    const int d = n - k;
    const int m = p.size();
    if (d < 1 || m != d + 1)
        throw out_of_class_error("enc2 inverse: permutation size does not match k and N");

    // side rule: the mark is left of the center iff 1 precedes 2
    std::vector<int> pos0(static_cast<size_t>(m) + 1, 0);
    for (int i = 1; i <= m; ++i) pos0[static_cast<size_t>(p.entries[static_cast<size_t>(i - 1)])] = i;
    const bool left = pos0[1] < pos0[2];
    std::vector<int> pl = p.entries;
    if (!left) swap_values_12(pl);

    auto w = [&pl](int i) { return pl[static_cast<size_t>(i - 1)]; };
    std::vector<int> pos(static_cast<size_t>(m) + 1, 0);
    for (int i = 1; i <= m; ++i) pos[static_cast<size_t>(w(i))] = i;

    std::vector<int> C, D;
    int t = 0;

    bool identity = true;
    for (int i = 1; i <= m; ++i)
        if (w(i) != i) { identity = false; break; }

    if (identity) {
        t = m - 2;
    } else if (w(1) == m) {
        std::set<int> S;
        for (int i = 2; i <= m; ++i) S.insert(i);
        C = parse_c_bits(pos, m - 1, S);
    } else {
        while (t < m && w(m - t) == m - t) ++t;
        const int mt = m - t;
        if (mt < 3) throw out_of_class_error("enc2 inverse: malformed tail");
        if (w(1) == mt) {
            // D empty, center adjacent to the mark
            std::set<int> S;
            for (int i = 2; i <= mt; ++i) S.insert(i);
            C = parse_c_bits(pos, mt - 1, S);
        } else if (w(2) == mt) {
            std::set<int> S;
            S.insert(1);
            for (int i = 3; i <= mt; ++i) S.insert(i);
            std::vector<int> parts_rev;
            int rights = 0;
            int v = mt - 1;
            bool slot1_event = false;
            for (; v >= 3; --v) {
                const int pv = pos[static_cast<size_t>(v)];
                if (pv == *S.rbegin()) {
                    S.erase(pv);
                    ++rights;
                    continue;
                }
                if (pv == 1) {
                    parts_rev.push_back(rights + 1);
                    S.erase(1);
                    slot1_event = true;
                    --v;
                    break;
                }
                auto above1 = S.upper_bound(1);
                if (above1 != S.end() && pv == *above1) {
                    parts_rev.push_back(rights + 1);
                    S.erase(pv);
                    rights = 0;
                    continue;
                }
                throw out_of_class_error("enc2 inverse: value placement matches no D rule");
            }
            if (slot1_event) {
                C = parse_c_bits(pos, v, S);
            } else {
                parts_rev.push_back(rights + 1);  // the blocked adjacent part; C is empty
            }
            D.assign(parts_rev.rbegin(), parts_rev.rend());
        } else {
            throw out_of_class_error("enc2 inverse: neither slot rule matches the tail value");
        }
    }

    // rebuild the palindrome and check the round trip
    std::vector<int> parts(C.begin(), C.end());
    parts.push_back(k);
    parts.insert(parts.end(), D.begin(), D.end());
    if (t > 0) parts.push_back(2 * t);
    parts.insert(parts.end(), D.rbegin(), D.rend());
    parts.push_back(k);
    parts.insert(parts.end(), C.rbegin(), C.rend());
    int idx = static_cast<int>(C.size());

    Composition pal(std::move(parts));
    if (pal.weight() != N)
        throw out_of_class_error("enc2 inverse: reconstructed palindrome has wrong weight");
    if (fill_slots(C, D, t, m) != pl)
        throw out_of_class_error("enc2 inverse: input fails the round-trip check");
    if (!left) idx = pal.size() - 1 - idx;
    return MarkedPalindrome(std::move(pal), idx);
}

std::vector<DownUpPermutation> enumerate_downup(int m) {
    if (m < 2) throw std::invalid_argument("enumerate_downup: m must be at least 2");
    check_cap(m, "enumerate_downup");
    std::vector<DownUpPermutation> out;
    for (int w1 = 1; w1 <= m; ++w1) {
        std::vector<int> rest;
        for (int v = 1; v <= m; ++v)
            if (v != w1) rest.push_back(v);
        const int low = rest.front();
        std::vector<int> others(rest.begin() + 1, rest.end());  // candidates for the descent
        const int nb = static_cast<int>(others.size());
        for (unsigned long long mask = 0; mask < (1ULL << nb); ++mask) {
            std::vector<int> down, up;
            for (int i = 0; i < nb; ++i)
                (mask >> i & 1 ? down : up).push_back(others[static_cast<size_t>(i)]);
            DownUpPermutation p;
            p.entries.push_back(w1);
            std::sort(down.rbegin(), down.rend());
            p.entries.insert(p.entries.end(), down.begin(), down.end());
            p.entries.push_back(low);
            p.entries.insert(p.entries.end(), up.begin(), up.end());
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace copatt
