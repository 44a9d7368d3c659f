#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "copatt/bigint.hpp"
#include "copatt/composition.hpp"

namespace copatt {

/// A segmented pattern: a word over {1..j} whose letter set is exactly
/// {1..j} (an order ideal of the positive integers). Occurrences in
/// compositions are contiguous and order-isomorphic.
class SegmentedPattern {
public:
    explicit SegmentedPattern(std::vector<int> letters);

    /// Replaces values by their dense ranks: (5,5,7) -> 112. Rejects empty input.
    static SegmentedPattern standardize(std::span<const int> values);

    /// Parses a digit literal such as "112" (letters 1..9).
    static SegmentedPattern parse(const std::string& digits);

    int length() const { return static_cast<int>(letters_.size()); }
    int max_letter() const;
    const std::vector<int>& letters() const { return letters_; }

    /// Content vector mu: mu[k-1] = multiplicity of letter k.
    std::vector<int> content() const;

    std::string str() const;
    auto operator<=>(const SegmentedPattern&) const = default;

private:
    std::vector<int> letters_;
};

/// A finite partially ordered alphabet given by labeled elements and a strict
/// order. The relation is transitively closed at construction; cycles are
/// rejected.
class PosetAlphabet {
public:
    PosetAlphabet(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& less_pairs);

    /// Totally ordered alphabet {"1", ..., "j"}.
    static PosetAlphabet chain(int j);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    int index(const std::string& label) const;  // -1 if absent
    bool less(int a, int b) const { return less_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

    bool operator==(const PosetAlphabet&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> less_;
};

/// A segmented partially ordered pattern: a nonempty word over a poset
/// alphabet whose used letters form an order ideal. Linear extensions are
/// computed eagerly and cached in the value.
class Spop {
public:
    Spop(PosetAlphabet alphabet, const std::vector<std::string>& word_labels);

    /// A segmented pattern viewed as a SPOP over a chain alphabet.
    static Spop from_pattern(const SegmentedPattern& p);

    /// Parses either a digit literal ("112") or a JSON document with fields
    /// `elements`, `less`, `word`.
    static Spop parse(const std::string& text);
    static Spop parse_json(const std::string& json_text);

    int length() const { return static_cast<int>(word_.size()); }
    const PosetAlphabet& alphabet() const { return alphabet_; }
    const std::vector<int>& word() const { return word_; }

    /// All linear extensions, lexicographically sorted. For a segmented
    /// pattern this is the singleton containing the pattern itself.
    const std::vector<SegmentedPattern>& linear_extensions() const { return extensions_; }

    /// Smallest weight of a composition order-isomorphic to some extension.
    int min_weight() const;

    std::string str() const;
    bool operator==(const Spop&) const = default;

private:
    PosetAlphabet alphabet_;
    std::vector<int> word_;
    std::vector<SegmentedPattern> extensions_;

    void compute_extensions();
};

/// One occurrence of a pattern in a composition.
struct OccurrenceRecord {
    int start;          // 0-based index of the first part of the occurrence
    int prefix_sum;     // sum of the parts strictly before it (the paper's s)
    int outside_parts;  // total parts minus pattern length (the paper's ell)

    auto operator<=>(const OccurrenceRecord&) const = default;
};

/// All occurrences of w in c: contiguous factors whose standardization is a
/// linear extension of w, sorted by start index.
std::vector<OccurrenceRecord> count_occurrences(const Composition& c, const Spop& w);

/// P_v(n): number of compositions of n order-isomorphic to v, computed by
/// enumerating the integral solutions 0 < t_1 < ... < t_j of
/// mu_1 t_1 + ... + mu_j t_j = n. Independent of the generating-function path.
BigInt pattern_count_oracle(const SegmentedPattern& v, int n);

}  // namespace copatt
