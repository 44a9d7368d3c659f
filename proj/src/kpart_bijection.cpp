#include "copatt/kpart_bijection.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "copatt/config.hpp"

namespace copatt {

TElement::TElement(int n_, int k_, Composition a, Composition b)
    : n(n_), k(k_), alpha(std::move(a)), beta(std::move(b)) {
    if (n < 1 || k < 1 || k > n - 1)
        throw std::invalid_argument("TElement: requires n >= 1 and k in [n-1]");
    if (alpha.weight() + beta.weight() != n - k)
        throw std::invalid_argument("TElement: alpha and beta must weigh n-k together");
}

TElement TElement::from_marked(const MarkedKPart& mp) {
    const auto& parts = mp.composition.parts();
    std::vector<int> a(parts.begin(), parts.begin() + mp.index);
    std::vector<int> b(parts.begin() + mp.index + 1, parts.end());
    return TElement(mp.composition.weight(), mp.k(), Composition(std::move(a)),
                    Composition(std::move(b)));
}

MarkedKPart TElement::to_marked() const {
    std::vector<int> parts = alpha.parts();
    parts.push_back(k);
    parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
    return MarkedKPart(Composition(std::move(parts)), alpha.size());
}

int SPermutation::down_prefix_length() const {
    const int m = static_cast<int>(entries.size()) - 1;  // number of w_i
    int l = 1;
    while (l < m && entries[static_cast<size_t>(l)] > entries[static_cast<size_t>(l + 1)]) ++l;
    return l;
}

bool SPermutation::valid() const {
    const int M = modulus();
    if (M < 2) return false;
    std::vector<bool> seen(static_cast<size_t>(M), false);
    for (int e : entries) {
        if (e < 0 || e >= M || seen[static_cast<size_t>(e)]) return false;
        seen[static_cast<size_t>(e)] = true;
    }
    const int l = down_prefix_length();
    for (int i = l + 1; i + 1 <= M - 1; ++i)
        if (entries[static_cast<size_t>(i)] >= entries[static_cast<size_t>(i + 1)]) return false;
    const int succ = (s() + 1) % M;
    for (int i = 1; i <= l; ++i)
        if (entries[static_cast<size_t>(i)] == succ) return true;
    return false;
}

SPermutation SPermutation::parse(const std::string& text) {
    std::istringstream in(text);
    SPermutation p;
    int v;
    while (in >> v) p.entries.push_back(v);
    if (!in.eof()) throw std::invalid_argument("bad permutation text '" + text + "'");
    if (p.entries.size() < 2) throw std::invalid_argument("permutation needs at least 2 entries");
    return p;
}

std::string SPermutation::str() const {
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(entries[i]);
    }
    return out;
}

SPermutation kpart_encode(const TElement& t) {
    const int d = t.n - t.k;  // number of w_i; modulus is d+1
    const int s = t.s();
    std::vector<int> gamma = t.alpha.parts();
    gamma.insert(gamma.end(), t.beta.parts().begin(), t.beta.parts().end());
    const int l = static_cast<int>(gamma.size());

    // wbar_l = 0, wbar_{l-i} = gamma_1 + ... + gamma_i; strictly decreasing
    std::vector<int> wbar(static_cast<size_t>(l));
    int acc = 0;
    for (int i = 1; i <= l - 1; ++i) {
        acc += gamma[static_cast<size_t>(i - 1)];
        wbar[static_cast<size_t>(l - i - 1)] = acc;
    }
    wbar[static_cast<size_t>(l - 1)] = 0;

    SPermutation p;
    p.entries.reserve(static_cast<size_t>(d) + 1);
    p.entries.push_back(s);
    std::vector<bool> used(static_cast<size_t>(d) + 1, false);
    used[static_cast<size_t>(s)] = true;
    for (int i = 0; i < l; ++i) {
        const int w = wbar[static_cast<size_t>(i)] + (wbar[static_cast<size_t>(i)] >= s ? 1 : 0);
        p.entries.push_back(w);
        used[static_cast<size_t>(w)] = true;
    }
    for (int v = 0; v <= d; ++v)
        if (!used[static_cast<size_t>(v)]) p.entries.push_back(v);
    return p;
}

TElement kpart_decode(const SPermutation& p, int n, int k) {
    const int d = n - k;
    if (p.modulus() != d + 1)
        throw out_of_class_error("kpart decode: permutation has modulus " +
                                 std::to_string(p.modulus()) + ", expected " +
                                 std::to_string(d + 1));
    if (!p.valid()) throw out_of_class_error("kpart decode: input is not in S");

    const int s = p.s();
    const int l = p.down_prefix_length();
    std::vector<int> wbar(static_cast<size_t>(l));
    for (int i = 1; i <= l; ++i) {
        const int w = p.entries[static_cast<size_t>(i)];
        wbar[static_cast<size_t>(i - 1)] = w - (w > s ? 1 : 0);
    }
    std::vector<int> gamma(static_cast<size_t>(l));
    for (int i = 1; i <= l - 1; ++i)
        gamma[static_cast<size_t>(i - 1)] =
            wbar[static_cast<size_t>(l - i - 1)] - wbar[static_cast<size_t>(l - i)];
    gamma[static_cast<size_t>(l - 1)] = d - wbar[0];
    for (int g : gamma)
        if (g < 1) throw out_of_class_error("kpart decode: reconstructed part is not positive");

    int acc = 0;
    int cut = -1;
    for (int i = 0; i <= l; ++i) {
        if (acc == s) {
            cut = i;
            break;
        }
        if (i < l) acc += gamma[static_cast<size_t>(i)];
    }
    if (cut < 0) throw out_of_class_error("kpart decode: no prefix of gamma sums to s");

    std::vector<int> a(gamma.begin(), gamma.begin() + cut);
    std::vector<int> b(gamma.begin() + cut, gamma.end());
    TElement t(n, k, Composition(std::move(a)), Composition(std::move(b)));
    if (kpart_encode(t) != p)
        throw out_of_class_error("kpart decode: input fails the round-trip check");
    return t;
}

std::vector<SPermutation> enumerate_S(int n, int k) {
    if (n < 1 || k < 1 || k > n - 1)
        throw std::invalid_argument("enumerate_S: requires n >= 1 and k in [n-1]");
    check_cap(n - k, "enumerate_S");
    const int d = n - k;
    const int M = d + 1;
    std::vector<SPermutation> out;
    for (int s = 0; s < M; ++s) {
        std::vector<int> rest;
        for (int v = 0; v < M; ++v)
            if (v != s) rest.push_back(v);
        const int succ = (s + 1) % M;
        const int low = rest.front();  // min of Z \ {s}
        for (unsigned long long mask = 0; mask < (1ULL << d); ++mask) {
            std::vector<int> down, up;
            for (int i = 0; i < d; ++i)
                (mask >> i & 1 ? down : up).push_back(rest[static_cast<size_t>(i)]);
            if (down.empty()) continue;
            // the valley must be the global minimum and s+1 must go down
            if (std::find(down.begin(), down.end(), low) == down.end()) continue;
            if (std::find(down.begin(), down.end(), succ) == down.end()) continue;
            SPermutation p;
            p.entries.push_back(s);
            std::sort(down.rbegin(), down.rend());
            p.entries.insert(p.entries.end(), down.begin(), down.end());
            p.entries.insert(p.entries.end(), up.begin(), up.end());
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace copatt
