#pragma once

#include <string>
#include <utility>
#include <vector>

#include "copatt/composition.hpp"

namespace copatt {

/// A palindromic composition of even weight N with a marked odd part.
struct MarkedPalindrome {
    Composition palindrome;
    int index = 0;  // 0-based marked part

    MarkedPalindrome(Composition p, int idx);

    int k() const { return palindrome.part(index); }
    int N() const { return palindrome.weight(); }
    /// n with N = 2(n-1).
    int n() const { return N() / 2 + 1; }

    static MarkedPalindrome parse(const std::string& text);  // bracket form
    std::string str() const { return MarkedKPart(palindrome, index).str(); }

    auto operator<=>(const MarkedPalindrome&) const = default;
};

/// A permutation w_1 ... w_m of [m] whose suffix w_2 ... w_m is strictly
/// decreasing then strictly increasing (w_1 unconstrained).
struct DownUpPermutation {
    std::vector<int> entries;  // 1-based values

    int size() const { return static_cast<int>(entries.size()); }
    bool valid() const;
    /// The paper's l: 1-based position of the minimum of w_2 ... w_m.
    int valley() const;

    static DownUpPermutation parse(const std::string& text);
    std::string str() const;

    auto operator<=>(const DownUpPermutation&) const = default;
};

/// First encoding: a permutation corresponds to a pair (w_1, alpha) with
/// alpha a composition of n-k; the pair corresponds to a marked k-part
/// through the case analysis on w_1 and the splits of alpha.
std::pair<int, Composition> enc1_perm_to_pair(const DownUpPermutation& p);
DownUpPermutation enc1_pair_to_perm(int w1, const Composition& alpha);
MarkedPalindrome enc1_pair_to_marked(int w1, const Composition& alpha, int k);
std::pair<int, Composition> enc1_marked_to_pair(const MarkedPalindrome& mp);

DownUpPermutation enc1_forward(const MarkedPalindrome& mp);
MarkedPalindrome enc1_inverse(const DownUpPermutation& p, int k, int N);

/// Second encoding: the slot-filling algorithm. Left-of-center marks encode
/// directly; right-side marks encode the mirrored part and then swap the
/// values 1 and 2 (a mark is left of center iff 1 precedes 2 in the output).
DownUpPermutation enc2_forward(const MarkedPalindrome& mp);
MarkedPalindrome enc2_inverse(const DownUpPermutation& p, int k, int N);

/// All down-up permutations of [m], sorted lexicographically; m 2^(m-2) items.
std::vector<DownUpPermutation> enumerate_downup(int m);

}  // namespace copatt
