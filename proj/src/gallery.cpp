#include "copatt/gallery.hpp"

#include <algorithm>
#include <stdexcept>

#include "copatt/config.hpp"

namespace copatt {

namespace {

std::vector<std::string> split_runs(const std::string& s) {
    std::vector<std::string> runs;
    for (char c : s) {
        if (runs.empty() || runs.back().back() != c) runs.emplace_back(1, c);
        else runs.back().push_back(c);
    }
    return runs;
}

// maximal blocks of consecutive values inside an increasing sequence
std::vector<std::vector<int>> split_value_runs(const std::vector<int>& v) {
    std::vector<std::vector<int>> runs;
    for (int x : v) {
        if (runs.empty() || runs.back().back() + 1 != x) runs.push_back({x});
        else runs.back().push_back(x);
    }
    return runs;
}

Perm iota_range(int lo, int hi) {  // lo, lo+1, ..., hi
    Perm out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

void append_remaining_desc(Perm& p, int top) {
    std::vector<bool> used(static_cast<size_t>(top) + 1, false);
    for (int v : p) used[static_cast<size_t>(v)] = true;
    for (int v = top; v >= 1; --v)
        if (!used[static_cast<size_t>(v)]) p.push_back(v);
}

const Perm kPat123{1, 2, 3}, kPat231{2, 3, 1}, kPat132{1, 3, 2}, kPat213{2, 1, 3},
    kPat1324{1, 3, 2, 4};

}  // namespace

bool BitonicBinary::valid() const {
    if (bits.find_first_not_of("01") != std::string::npos) return false;
    return split_runs(bits).size() <= 3;
}

bool NoSingletonBinary::valid() const {
    if (bits.empty() || bits.find_first_not_of("01") != std::string::npos) return false;
    for (const auto& r : split_runs(bits))
        if (r.size() < 2) return false;
    return true;
}

LinePair::LinePair(int n_, std::pair<int, int> p1, std::pair<int, int> p2) : n(n_) {
    if (n < 4) throw std::invalid_argument("LinePair: needs at least 4 lines");
    if (p1.first > p1.second) std::swap(p1.first, p1.second);
    if (p2.first > p2.second) std::swap(p2.first, p2.second);
    if (p1.second > p2.second) std::swap(p1, p2);
    x = p1.first;
    y = p1.second;
    z = p2.first;
    v = p2.second;
    std::vector<int> labels{x, y, z, v};
    std::sort(labels.begin(), labels.end());
    for (size_t i = 0; i < 4; ++i) {
        if (labels[i] < 1 || labels[i] > n)
            throw std::invalid_argument("LinePair: label out of range");
        if (i && labels[i] == labels[i - 1])
            throw std::invalid_argument("LinePair: labels must be distinct");
    }
}

LinePair LinePair::parse(const std::string& text, int n) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    int a, b, c, d;
    if (std::sscanf(s.c_str(), "((%d,%d),(%d,%d))", &a, &b, &c, &d) != 4)
        throw std::invalid_argument("bad line pair '" + text + "'");
    return LinePair(n, {a, b}, {c, d});
}

std::string LinePair::str() const {
    return "((" + std::to_string(x) + "," + std::to_string(y) + "),(" + std::to_string(z) + "," +
           std::to_string(v) + "))";
}

namespace {

bool s12_prefix_ok(const Perm& w, int n) {
    return (w[0] == n + 1 && w[1] == n + 2) || (w[0] == n + 2 && w[1] == n + 1);
}

}  // namespace

bool in_s1(const Perm& w) {
    const int n = static_cast<int>(w.size()) - 2;
    if (n < 1) return false;
    if (!s12_prefix_ok(w, n)) return false;
    Perm tail(w.begin() + 2, w.end());
    return !contains_classical(tail, kPat123) && !contains_classical(tail, kPat231);
}

bool in_s2(const Perm& w) {
    const int n = static_cast<int>(w.size()) - 2;
    if (n < 0) return false;
    if (!s12_prefix_ok(w, n)) return false;
    Perm tail(w.begin() + 2, w.end());
    return !contains_classical(tail, kPat123) && !contains_classical(tail, kPat132) &&
           !contains_classical(tail, kPat213);
}

bool in_s3(const Perm& w) {
    if (w.size() < 3) return false;
    if (!(w[0] < w[1] && w[1] < w[2])) return false;
    for (size_t i = 4; i < w.size(); ++i)
        if (w[i - 1] <= w[i]) return false;
    return true;
}

bool in_s4(const Perm& w) {
    if (w.size() < 4) return false;
    if (w[0] != std::max({w[0], w[1], w[2], w[3]})) return false;
    if (w[2] >= w[3]) return false;
    for (size_t i = 5; i < w.size(); ++i)
        if (w[i - 1] <= w[i]) return false;
    return true;
}

bool is_one_descent_avoider(const Perm& w) {
    return descent_count(w) == 1 && !contains_classical(w, kPat1324);
}

BitonicBinary s1_forward(const Perm& p) {
    if (!in_s1(p)) throw out_of_class_error("s1: input is not in S_1");
    const int n = static_cast<int>(p.size()) - 2;
    const bool flip = p[0] == n + 2;
    Perm tail(p.begin() + 2, p.end());

    std::string bits;
    Perm full_desc = iota_range(1, n);
    std::reverse(full_desc.begin(), full_desc.end());
    if (tail == full_desc) {
        bits.assign(static_cast<size_t>(n), '0');
    } else if (tail[0] < n) {
        // i(i-1)...1 n(n-1)...(i+1)  ->  0 1^i 0^(n-i-1)
        const int i = tail[0];
        Perm expected;
        for (int v = i; v >= 1; --v) expected.push_back(v);
        for (int v = n; v >= i + 1; --v) expected.push_back(v);
        if (tail != expected) throw out_of_class_error("s1: tail matches neither family");
        bits = "0" + std::string(static_cast<size_t>(i), '1') +
               std::string(static_cast<size_t>(n - i - 1), '0');
    } else {
        // n...(n-i+1) (j+1)...1 (n-i)...(j+2)  ->  0^(i+1) 1^(n-i-j-1) 0^j
        int i = 0;
        while (i < n && tail[static_cast<size_t>(i)] == n - i) ++i;
        const int j = tail[static_cast<size_t>(i)] - 1;
        Perm expected;
        for (int v = n; v >= n - i + 1; --v) expected.push_back(v);
        for (int v = j + 1; v >= 1; --v) expected.push_back(v);
        for (int v = n - i; v >= j + 2; --v) expected.push_back(v);
        if (tail != expected) throw out_of_class_error("s1: tail matches neither family");
        bits = std::string(static_cast<size_t>(i + 1), '0') +
               std::string(static_cast<size_t>(n - i - j - 1), '1') +
               std::string(static_cast<size_t>(j), '0');
    }
    if (flip)
        for (char& c : bits) c = (c == '0') ? '1' : '0';
    BitonicBinary out{bits};
    if (!out.valid() || static_cast<int>(bits.size()) != n)
        throw out_of_class_error("s1: produced string is not bitonic");
    return out;
}

Perm s1_backward(const BitonicBinary& b) {
    if (!b.valid() || b.bits.empty()) throw out_of_class_error("s1: input is not bitonic");
    const int n = static_cast<int>(b.bits.size());
    std::string s = b.bits;
    const bool flip = s[0] == '1';
    if (flip)
        for (char& c : s) c = (c == '0') ? '1' : '0';

    Perm tail;
    const auto runs = split_runs(s);
    if (runs.size() == 1) {
        for (int v = n; v >= 1; --v) tail.push_back(v);
    } else if (runs[0].size() == 1) {
        const int i = static_cast<int>(runs[1].size());
        for (int v = i; v >= 1; --v) tail.push_back(v);
        for (int v = n; v >= i + 1; --v) tail.push_back(v);
    } else {
        const int i = static_cast<int>(runs[0].size()) - 1;
        const int j = runs.size() == 3 ? static_cast<int>(runs[2].size()) : 0;
        for (int v = n; v >= n - i + 1; --v) tail.push_back(v);
        for (int v = j + 1; v >= 1; --v) tail.push_back(v);
        for (int v = n - i; v >= j + 2; --v) tail.push_back(v);
    }
    Perm out{flip ? n + 2 : n + 1, flip ? n + 1 : n + 2};
    out.insert(out.end(), tail.begin(), tail.end());
    if (!in_s1(out)) throw out_of_class_error("s1: string reconstructs no S_1 element");
    return out;
}

NoSingletonBinary s2_forward(const Perm& p) {
    if (!in_s2(p)) throw out_of_class_error("s2: input is not in S_2");
    const int n = static_cast<int>(p.size()) - 2;
    const bool flip = p[0] == n + 2;
    Perm tail(p.begin() + 2, p.end());

    // tail -> monomino/domino tiling, read from the right
    std::vector<int> tiles;
    int pos = n - 1, v = 1;
    while (pos >= 0) {
        if (tail[static_cast<size_t>(pos)] == v) {
            tiles.push_back(1);
            pos -= 1;
            v += 1;
        } else if (pos >= 1 && tail[static_cast<size_t>(pos - 1)] == v &&
                   tail[static_cast<size_t>(pos)] == v + 1) {
            tiles.push_back(2);
            pos -= 2;
            v += 2;
        } else {
            throw out_of_class_error("s2: tail is not a monomino/domino word");
        }
    }

    std::string bits(static_cast<size_t>(n + 2), '0');  // b[n+1] b[n+2] already "00"
    if (!tiles.empty()) {
        int i = n;  // 1-based position of the last digit written
        char x;
        if (tiles[0] == 1) {
            x = '0';
            bits[static_cast<size_t>(i - 1)] = x;
        } else {
            x = '1';
            bits[static_cast<size_t>(i - 1)] = x;
            --i;
            bits[static_cast<size_t>(i - 1)] = x;
        }
        for (size_t ti = 1; ti < tiles.size(); ++ti) {
            if (tiles[ti] == 1) {
                --i;
                bits[static_cast<size_t>(i - 1)] = x;
            } else {
                x = (x == '0') ? '1' : '0';
                --i;
                bits[static_cast<size_t>(i - 1)] = x;
                --i;
                bits[static_cast<size_t>(i - 1)] = x;
            }
        }
        if (i != 1) throw out_of_class_error("s2: tiling does not fill the board");
    }
    if (flip)
        for (char& c : bits) c = (c == '0') ? '1' : '0';
    NoSingletonBinary out{bits};
    if (!out.valid()) throw out_of_class_error("s2: produced string has a singleton");
    return out;
}

Perm s2_backward(const NoSingletonBinary& b) {
    if (!b.valid() || b.bits.size() < 2) throw out_of_class_error("s2: string has a singleton");
    const int n = static_cast<int>(b.bits.size()) - 2;
    std::string s = b.bits;
    const bool flip = s.back() == '1';
    if (flip)
        for (char& c : s) c = (c == '0') ? '1' : '0';
    if (s.substr(s.size() - 2) != "00")
        throw out_of_class_error("s2: string does not end with a doubled letter");

    std::vector<int> tiles;
    if (n > 0) {
        auto at = [&s](int i) { return s[static_cast<size_t>(i - 1)]; };  // 1-based
        int i = n;
        if (at(n) == '0') {
            tiles.push_back(1);
        } else {
            if (n < 2 || at(n - 1) != '1')
                throw out_of_class_error("s2: string reconstructs no tiling");
            tiles.push_back(2);
            i = n - 1;
        }
        while (i > 1) {
            if (at(i - 1) == at(i)) {
                tiles.push_back(1);
                i -= 1;
            } else {
                if (i < 3 || at(i - 2) != at(i - 1))
                    throw out_of_class_error("s2: string reconstructs no tiling");
                tiles.push_back(2);
                i -= 2;
            }
        }
    }

    Perm tail(static_cast<size_t>(n), 0);
    int pos = n - 1, v = 1;
    for (int t : tiles) {
        if (t == 1) {
            tail[static_cast<size_t>(pos)] = v;
            pos -= 1;
            v += 1;
        } else {
            tail[static_cast<size_t>(pos - 1)] = v;
            tail[static_cast<size_t>(pos)] = v + 1;
            pos -= 2;
            v += 2;
        }
    }
    Perm out{flip ? n + 2 : n + 1, flip ? n + 1 : n + 2};
    out.insert(out.end(), tail.begin(), tail.end());
    if (!in_s2(out)) throw out_of_class_error("s2: string reconstructs no S_2 element");
    return out;
}

Perm s3_forward(const Perm& avoider) {
    if (!is_one_descent_avoider(avoider))
        throw out_of_class_error("s3: input is not a one-descent 1-3-2-4 avoider");
    const int len = static_cast<int>(avoider.size());
    const int n = len - 2;

    int desc = 0;
    for (int i = 1; i < len; ++i)
        if (avoider[static_cast<size_t>(i - 1)] > avoider[static_cast<size_t>(i)]) desc = i;
    std::vector<int> X(avoider.begin(), avoider.begin() + desc);
    std::vector<int> Y(avoider.begin() + desc, avoider.end());

    const auto xr = split_value_runs(X);
    const auto yr = split_value_runs(Y);
    if (xr.empty() || xr.size() > 2 || yr.empty() || yr.size() > 2)
        throw out_of_class_error("s3: avoider has no ABCD structure");

    std::vector<int> A, B, C, D;
    if (xr.size() == 2) {
        A = xr[0];
        B = xr[1];
    } else if (xr[0].back() == n + 2) {
        B = xr[0];
    } else {
        A = xr[0];
    }
    if (yr.size() == 2) {
        C = yr[0];
        D = yr[1];
        if (C.front() != 1) throw out_of_class_error("s3: avoider has no ABCD structure");
    } else {
        D = yr[0];
    }
    if (!B.empty() && B.back() != n + 2)
        throw out_of_class_error("s3: avoider has no ABCD structure");

    Perm out;
    if (!A.empty() && !B.empty() && !C.empty()) {
        out = {C.back(), A.back(), D.back(), n + 3, n + 2};
    } else if (C.empty() && !A.empty() && !B.empty()) {
        out = {A.back(), D.back(), n + 3, n + 2};
    } else if (B.empty() && !A.empty() && !C.empty()) {
        out = {C.back(), A.back(), n + 2, n + 3};
    } else if (A.empty() && C.empty()) {
        out = {D.back(), n + 2, n + 3};
    } else {
        throw out_of_class_error("s3: avoider matches no case");
    }
    append_remaining_desc(out, n + 3);
    if (!in_s3(out)) throw out_of_class_error("s3: construction left S_3");
    return out;
}

Perm s3_backward(const Perm& q) {
    if (!in_s3(q)) throw out_of_class_error("s3: input is not in S_3");
    const int len = static_cast<int>(q.size());
    const int n = len - 3;
    auto at = [&q, len](int i) { return i <= len ? q[static_cast<size_t>(i - 1)] : -1; };

    Perm out;
    if (at(4) == n + 3 && at(5) == n + 2) {
        const int i1 = at(1), i2 = at(2), i3 = at(3);
        if (!(1 <= i1 && i1 < i2 && i2 < i3 && i3 <= n + 1))
            throw out_of_class_error("s3: element matches no case");
        out = iota_range(i1 + 1, i2);                   // A
        auto B = iota_range(i3 + 1, n + 2);
        out.insert(out.end(), B.begin(), B.end());
        auto C = iota_range(1, i1);
        out.insert(out.end(), C.begin(), C.end());
        auto D = iota_range(i2 + 1, i3);
        out.insert(out.end(), D.begin(), D.end());
    } else if (at(3) == n + 3 && at(4) == n + 2) {
        const int i2 = at(1), i3 = at(2);
        if (!(1 <= i2 && i2 < i3 && i3 <= n + 1))
            throw out_of_class_error("s3: element matches no case");
        out = iota_range(1, i2);                        // A
        auto B = iota_range(i3 + 1, n + 2);
        out.insert(out.end(), B.begin(), B.end());
        auto D = iota_range(i2 + 1, i3);
        out.insert(out.end(), D.begin(), D.end());
    } else if (at(3) == n + 2 && at(4) == n + 3) {
        const int i1 = at(1), i2 = at(2);
        if (!(1 <= i1 && i1 < i2 && i2 <= n + 1))
            throw out_of_class_error("s3: element matches no case");
        out = iota_range(i1 + 1, i2);                   // A
        auto C = iota_range(1, i1);
        out.insert(out.end(), C.begin(), C.end());
        auto D = iota_range(i2 + 1, n + 2);
        out.insert(out.end(), D.begin(), D.end());
    } else if (at(2) == n + 2 && at(3) == n + 3) {
        const int a = at(1);
        if (!(1 <= a && a <= n + 1)) throw out_of_class_error("s3: element matches no case");
        out = iota_range(a + 1, n + 2);                 // B
        auto D = iota_range(1, a);
        out.insert(out.end(), D.begin(), D.end());
    } else {
        throw out_of_class_error("s3: element matches no case");
    }
    if (!is_one_descent_avoider(out)) throw out_of_class_error("s3: reconstruction failed");
    return out;
}

Perm s4_forward(const LinePair& lp) {
    Perm out{lp.v, lp.z, lp.x, lp.y};
    append_remaining_desc(out, lp.n);
    if (!in_s4(out)) throw out_of_class_error("s4: construction left S_4");
    return out;
}

LinePair s4_backward(const Perm& p) {
    if (!in_s4(p)) throw out_of_class_error("s4: input is not in S_4");
    const int n = static_cast<int>(p.size());
    for (size_t i = 4; i + 1 < p.size(); ++i)
        if (p[i] <= p[i + 1]) throw out_of_class_error("s4: tail is not decreasing");
    return LinePair(n, {p[2], p[3]}, {p[1], p[0]});
}

std::vector<Perm> enumerate_s1(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_s1: n must be positive");
    check_cap(n, "enumerate_s1");
    std::vector<Perm> out;
    for (int pref = 0; pref < 2; ++pref)
        for (const auto& tail : enumerate_avoiders(n, {kPat123, kPat231})) {
            Perm p{pref == 0 ? n + 1 : n + 2, pref == 0 ? n + 2 : n + 1};
            p.insert(p.end(), tail.begin(), tail.end());
            out.push_back(std::move(p));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> enumerate_s2(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_s2: n must be nonnegative");
    check_cap(n, "enumerate_s2");
    std::vector<Perm> out;
    for (int pref = 0; pref < 2; ++pref)
        for (const auto& tail : enumerate_avoiders(n, {kPat123, kPat132, kPat213})) {
            Perm p{pref == 0 ? n + 1 : n + 2, pref == 0 ? n + 2 : n + 1};
            p.insert(p.end(), tail.begin(), tail.end());
            out.push_back(std::move(p));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> enumerate_s3(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_s3: n must be nonnegative");
    check_cap(n, "enumerate_s3");
    std::vector<Perm> out;
    const int top = n + 3;
    for (int a = 1; a <= top; ++a)
        for (int b = a + 1; b <= top; ++b)
            for (int c = b + 1; c <= top; ++c) {
                Perm p{a, b, c};
                append_remaining_desc(p, top);
                out.push_back(std::move(p));
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> enumerate_s4(int n) {
    if (n < 4) throw std::invalid_argument("enumerate_s4: n must be at least 4");
    check_cap(n, "enumerate_s4");
    std::vector<Perm> out;
    // all 4-subsets, largest first, then the three (w3 < w4) arrangements
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    const int rest[3][3] = {{a, b, c}, {b, a, c}, {c, a, b}};
                    for (const auto& r : rest) {
                        Perm p{d, r[0], r[1], r[2]};
                        append_remaining_desc(p, n);
                        out.push_back(std::move(p));
                    }
                }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitonicBinary> enumerate_bitonic(int length) {
    if (length < 0) throw std::invalid_argument("enumerate_bitonic: bad length");
    check_cap(length, "enumerate_bitonic");
    std::vector<BitonicBinary> out;
    for (unsigned long long mask = 0; mask < (1ULL << length); ++mask) {
        std::string s(static_cast<size_t>(length), '0');
        for (int i = 0; i < length; ++i)
            if (mask >> (length - 1 - i) & 1) s[static_cast<size_t>(i)] = '1';
        BitonicBinary b{s};
        if (b.valid()) out.push_back(std::move(b));
    }
    return out;
}

std::vector<NoSingletonBinary> enumerate_no_singleton(int length) {
    if (length < 0) throw std::invalid_argument("enumerate_no_singleton: bad length");
    check_cap(length, "enumerate_no_singleton");
    std::vector<NoSingletonBinary> out;
    for (unsigned long long mask = 0; mask < (1ULL << length); ++mask) {
        std::string s(static_cast<size_t>(length), '0');
        for (int i = 0; i < length; ++i)
            if (mask >> (length - 1 - i) & 1) s[static_cast<size_t>(i)] = '1';
        NoSingletonBinary b{s};
        if (b.valid()) out.push_back(std::move(b));
    }
    return out;
}

std::vector<Perm> enumerate_one_descent_avoiders(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_one_descent_avoiders: bad n");
    check_cap(n, "enumerate_one_descent_avoiders");
    std::vector<Perm> out;
    for (auto& p : enumerate_avoiders(n + 2, {kPat1324}, 1))
        if (descent_count(p) == 1) out.push_back(std::move(p));
    return out;
}

std::vector<LinePair> enumerate_line_pairs(int n) {
    if (n < 4) throw std::invalid_argument("enumerate_line_pairs: n must be at least 4");
    check_cap(n, "enumerate_line_pairs");
    std::vector<LinePair> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    out.emplace_back(n, std::make_pair(a, b), std::make_pair(c, d));
                    out.emplace_back(n, std::make_pair(a, c), std::make_pair(b, d));
                    out.emplace_back(n, std::make_pair(a, d), std::make_pair(b, c));
                }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace copatt
