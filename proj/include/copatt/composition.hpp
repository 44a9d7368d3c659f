#pragma once

#include <compare>
#include <string>
#include <vector>

namespace copatt {

/// A composition of a nonnegative integer: a finite sequence of positive
/// integer parts. The empty sequence is the unique composition of 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    /// Parses "3+1+1+2"; the empty composition is written "0".
    static Composition parse(const std::string& text);

    int weight() const;  // sum of parts, recomputed
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    /// Prefix sums 0 = s_0 < s_1 < ... < s_m = weight; size() + 1 values.
    std::vector<int> splits() const;

    Composition reversed() const;
    bool is_palindrome() const;

    std::string str() const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// A composition with one distinguished part (the paper's marked k-part).
struct MarkedKPart {
    Composition composition;
    int index = 0;  // 0-based position of the marked part

    MarkedKPart(Composition c, int idx);

    int k() const { return composition.part(index); }
    /// Sum of the parts strictly before the marked one.
    int prefix_sum() const;
    /// Number of unmarked parts.
    int other_parts() const { return composition.size() - 1; }

    /// Parses the bracket notation "3+1+[6]+2".
    static MarkedKPart parse(const std::string& text);
    std::string str() const;

    auto operator<=>(const MarkedKPart&) const = default;
};

}  // namespace copatt
