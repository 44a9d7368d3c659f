#include "copatt/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "copatt/config.hpp"
#include "copatt/enumerate.hpp"

namespace copatt::oracle {

namespace {

// Flattened linear extensions for allocation-free window matching.
struct ExtensionSet {
    int m;
    std::vector<std::vector<int>> words;

    explicit ExtensionSet(const Spop& w) : m(w.length()) {
        for (const auto& v : w.linear_extensions()) words.push_back(v.letters());
    }

    // standardizes parts[start .. start+m) into buf and tests membership
    bool matches(const int* parts, int start, int* buf) const {
        for (int i = 0; i < m; ++i) {
            int rank = 1;
            for (int j = 0; j < m; ++j)
                if (parts[start + j] < parts[start + i]) {
                    bool duplicate = false;
                    for (int q = 0; q < j; ++q)
                        if (parts[start + q] == parts[start + j]) duplicate = true;
                    if (!duplicate) ++rank;
                }
            buf[i] = rank;
        }
        for (const auto& word : words) {
            bool eq = true;
            for (int i = 0; i < m && eq; ++i)
                if (word[static_cast<size_t>(i)] != buf[i]) eq = false;
            if (eq) return true;
        }
        return false;
    }
};

// Decodes the composition of n selected by `mask` over the n-1 inner gaps.
// Returns the number of parts.
inline int decode_mask(unsigned long long mask, int n, int* parts) {
    int count = 0;
    int prev = 0;
    for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1ULL) {
            parts[count++] = i - prev;
            prev = i;
        }
    parts[count++] = n - prev;
    return count;
}

constexpr int kMaxParts = 64;

}  // namespace

BigInt total_occurrences_serial(const Spop& w, int n) {
    check_cap(n, "total_occurrences_serial");
    BigInt total = 0;
    for (const auto& c : CompositionRange(n)) total += count_occurrences(c, w).size();
    return total;
}

CountTable occurrence_table_serial(const Spop& w, int n) {
    check_cap(n, "occurrence_table_serial");
    CountTable table(static_cast<size_t>(n) + 1,
                     std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    for (const auto& c : CompositionRange(n))
        for (const auto& rec : count_occurrences(c, w))
            ++table[static_cast<size_t>(rec.outside_parts)][static_cast<size_t>(rec.prefix_sum)];
    return table;
}

CountTable kpart_table_serial(int n, int k) {
    check_cap(n, "kpart_table_serial");
    if (k < 1) throw std::invalid_argument("kpart_table_serial: k must be positive");
    CountTable table(static_cast<size_t>(n) + 1,
                     std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    for (const auto& c : CompositionRange(n)) {
        int s = 0;
        for (int i = 0; i < c.size(); ++i) {
            if (c.part(i) == k)
                ++table[static_cast<size_t>(c.size() - 1)][static_cast<size_t>(s)];
            s += c.part(i);
        }
    }
    return table;
}

BigInt palindrome_kparts_serial(int N, int k) {
    check_cap(N, "palindrome_kparts_serial");
    if (k < 1) throw std::invalid_argument("palindrome_kparts_serial: k must be positive");
    BigInt total = 0;
    for (const auto& c : PalindromeRange(N))
        total += std::count(c.parts().begin(), c.parts().end(), k);
    return total;
}

BigInt total_occurrences(const Spop& w, int n) {
    check_cap(n, "total_occurrences");
    if (n == 0) return 0;
    const ExtensionSet ext(w);
    const long long masks = 1LL << (n - 1);
    long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (long long mask = 0; mask < masks; ++mask) {
        int parts[kMaxParts], buf[kMaxParts];
        const int count = decode_mask(static_cast<unsigned long long>(mask), n, parts);
        for (int start = 0; start + ext.m <= count; ++start)
            if (ext.matches(parts, start, buf)) ++total;
    }
    return total;
}

CountTable occurrence_table(const Spop& w, int n) {
    check_cap(n, "occurrence_table");
    CountTable table(static_cast<size_t>(n) + 1,
                     std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    if (n == 0) return table;
    const ExtensionSet ext(w);
    const long long masks = 1LL << (n - 1);
#pragma omp parallel
    {
        CountTable local(static_cast<size_t>(n) + 1,
                         std::vector<long long>(static_cast<size_t>(n) + 1, 0));
#pragma omp for schedule(static) nowait
        for (long long mask = 0; mask < masks; ++mask) {
            int parts[kMaxParts], buf[kMaxParts];
            const int count = decode_mask(static_cast<unsigned long long>(mask), n, parts);
            int prefix = 0;
            for (int start = 0; start + ext.m <= count; ++start) {
                if (ext.matches(parts, start, buf))
                    ++local[static_cast<size_t>(count - ext.m)][static_cast<size_t>(prefix)];
                prefix += parts[start];
            }
        }
#pragma omp critical
        for (size_t l = 0; l < table.size(); ++l)
            for (size_t s = 0; s < table.size(); ++s) table[l][s] += local[l][s];
    }
    return table;
}

CountTable kpart_table(int n, int k) {
    check_cap(n, "kpart_table");
    if (k < 1) throw std::invalid_argument("kpart_table: k must be positive");
    CountTable table(static_cast<size_t>(n) + 1,
                     std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    if (n == 0) return table;
    const long long masks = 1LL << (n - 1);
#pragma omp parallel
    {
        CountTable local(static_cast<size_t>(n) + 1,
                         std::vector<long long>(static_cast<size_t>(n) + 1, 0));
#pragma omp for schedule(static) nowait
        for (long long mask = 0; mask < masks; ++mask) {
            int parts[kMaxParts];
            const int count = decode_mask(static_cast<unsigned long long>(mask), n, parts);
            int prefix = 0;
            for (int i = 0; i < count; ++i) {
                if (parts[i] == k)
                    ++local[static_cast<size_t>(count - 1)][static_cast<size_t>(prefix)];
                prefix += parts[i];
            }
        }
#pragma omp critical
        for (size_t l = 0; l < table.size(); ++l)
            for (size_t s = 0; s < table.size(); ++s) table[l][s] += local[l][s];
    }
    return table;
}

BigInt palindrome_kparts(int N, int k) {
    check_cap(N, "palindrome_kparts");
    if (k < 1) throw std::invalid_argument("palindrome_kparts: k must be positive");
    if (N == 0) return 0;
    long long total = 0;
    // a palindrome is its left half (weight hw) plus the center N - 2 hw,
    // which is either a part or, when zero, absent
    for (int hw = 0; hw <= N / 2; ++hw) {
        const int center = N - 2 * hw;
        if (hw == 0) {
            if (center == k) total += 1;  // the single-part palindrome (N)
            continue;
        }
        const long long masks = 1LL << (hw - 1);
        long long sub = 0;
#pragma omp parallel for reduction(+ : sub) schedule(static)
        for (long long mask = 0; mask < masks; ++mask) {
            int parts[kMaxParts];
            const int count = decode_mask(static_cast<unsigned long long>(mask), hw, parts);
            int hits = 0;
            for (int i = 0; i < count; ++i)
                if (parts[i] == k) ++hits;
            sub += 2 * hits + (center == k ? 1 : 0);
        }
        total += sub;
    }
    return total;
}

}  // namespace copatt::oracle
