#include "copatt/permutations.hpp"

#include <sstream>
#include <stdexcept>

namespace copatt {

std::string perm_str(const Perm& p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p[i]);
    }
    return out;
}

Perm perm_parse(const std::string& text) {
    std::istringstream in(text);
    Perm p;
    int v;
    while (in >> v) p.push_back(v);
    if (!in.eof()) throw std::invalid_argument("bad permutation text '" + text + "'");
    return p;
}

namespace {

bool contains_from(const Perm& w, const Perm& pat, size_t wi, std::vector<int>& picked) {
    const size_t pi = picked.size();
    if (pi == pat.size()) return true;
    for (size_t i = wi; i < w.size(); ++i) {
        bool ok = true;
        for (size_t j = 0; j < pi && ok; ++j) {
            if ((pat[j] < pat[pi]) != (picked[j] < w[i])) ok = false;
            if (pat[j] == pat[pi]) ok = false;  // patterns here have distinct letters
        }
        if (!ok) continue;
        picked.push_back(w[i]);
        if (contains_from(w, pat, i + 1, picked)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

bool contains_classical(const Perm& w, const Perm& pattern) {
    if (pattern.empty()) return true;
    if (w.size() < pattern.size()) return false;
    std::vector<int> picked;
    picked.reserve(pattern.size());
    return contains_from(w, pattern, 0, picked);
}

int descent_count(const Perm& w) {
    int d = 0;
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) ++d;
    return d;
}

std::vector<Perm> enumerate_avoiders(int n, const std::vector<Perm>& patterns, int max_descents) {
    std::vector<Perm> out;
    Perm cur;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            cur.push_back(v);
            bool ok = max_descents < 0 || descent_count(cur) <= max_descents;
            for (size_t i = 0; ok && i < patterns.size(); ++i)
                if (contains_classical(cur, patterns[i])) ok = false;
            if (ok) {
                used[static_cast<size_t>(v)] = true;
                self(self);
                used[static_cast<size_t>(v)] = false;
            }
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace copatt
