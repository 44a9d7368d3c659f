#include "copatt/enumerate.hpp"

#include <numeric>
#include <stdexcept>

namespace copatt {

CompositionRange::CompositionRange(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("CompositionRange: n must be nonnegative");
    check_cap(n, "enumerate_compositions");
}

std::optional<Composition> CompositionRange::first() const {
    if (n_ == 0) return Composition{};
    return Composition(std::vector<int>(static_cast<size_t>(n_), 1));
}

std::optional<Composition> CompositionRange::next(const Composition& c) const {
    // lexicographic successor: drop the last part r, bump the new last part,
    // then pad with r-1 ones
    if (c.size() <= 1) return std::nullopt;
    std::vector<int> p = c.parts();
    int r = p.back();
    p.pop_back();
    p.back() += 1;
    p.insert(p.end(), static_cast<size_t>(r - 1), 1);
    return Composition(std::move(p));
}

FixedPartsRange::FixedPartsRange(int n, int parts) : n_(n), parts_(parts) {
    if (n < 0 || parts < 0) throw std::invalid_argument("FixedPartsRange: bad arguments");
    check_cap(n, "enumerate_compositions_with_parts");
}

std::optional<Composition> FixedPartsRange::first() const {
    if (parts_ == 0) {
        if (n_ == 0) return Composition{};
        return std::nullopt;
    }
    if (n_ < parts_) return std::nullopt;
    std::vector<int> p(static_cast<size_t>(parts_), 1);
    p.back() = n_ - parts_ + 1;
    return Composition(std::move(p));
}

std::optional<Composition> FixedPartsRange::next(const Composition& c) const {
    if (c.size() <= 1) return std::nullopt;
    std::vector<int> p = c.parts();
    const int m = static_cast<int>(p.size());
    int tail = p[static_cast<size_t>(m - 1)];
    for (int i = m - 2; i >= 0; --i) {
        tail += p[static_cast<size_t>(i)];
        // bumping p[i] needs one unit for the bump and one per later part
        if (tail >= p[static_cast<size_t>(i)] + 1 + (m - 1 - i)) {
            const int head = p[static_cast<size_t>(i)] + 1;
            p[static_cast<size_t>(i)] = head;
            for (int j = i + 1; j < m - 1; ++j) p[static_cast<size_t>(j)] = 1;
            p[static_cast<size_t>(m - 1)] = tail - head - (m - 2 - i);
            return Composition(std::move(p));
        }
    }
    return std::nullopt;
}

PalindromeRange::PalindromeRange(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("PalindromeRange: n must be nonnegative");
    check_cap(n, "enumerate_palindromes");
}

std::optional<Composition> PalindromeRange::first() const {
    CompositionRange all(n_);
    for (auto cur = all.first(); cur; cur = all.next(*cur))
        if (cur->is_palindrome()) return cur;
    return std::nullopt;
}

std::optional<Composition> PalindromeRange::next(const Composition& c) const {
    CompositionRange all(n_);
    for (auto cur = all.next(c); cur; cur = all.next(*cur))
        if (cur->is_palindrome()) return cur;
    return std::nullopt;
}

BigInt count_compositions(int n) {
    if (n < 0) throw std::invalid_argument("count_compositions: n must be nonnegative");
    return n == 0 ? BigInt(1) : pow2(n - 1);
}

BigInt count_palindromes(int n) {
    if (n < 0) throw std::invalid_argument("count_palindromes: n must be nonnegative");
    return n == 0 ? BigInt(1) : pow2(n / 2);
}

}  // namespace copatt
