#pragma once

#include <string>
#include <vector>

#include "copatt/composition.hpp"

namespace copatt {

/// A marked k-part in a composition of n, held as the pair (alpha, beta) of
/// compositions flanking the mark; alpha has weight s, beta has weight
/// n - k - s, together they have l >= 1 parts.
struct TElement {
    int n = 0, k = 0;
    Composition alpha, beta;

    TElement(int n, int k, Composition alpha, Composition beta);

    int l() const { return alpha.size() + beta.size(); }
    int s() const { return alpha.weight(); }

    static TElement from_marked(const MarkedKPart& mp);
    MarkedKPart to_marked() const;

    auto operator<=>(const TElement&) const = default;
};

/// A permutation s w_1 ... w_{n-k} of the canonical residues of
/// Z/(n-k+1)Z with w_1 > ... > w_l < w_{l+1} < ... < w_{n-k} for some l and
/// (s+1) mod M among the first l entries.
struct SPermutation {
    std::vector<int> entries;  // entries[0] is s

    int modulus() const { return static_cast<int>(entries.size()); }
    int s() const { return entries.front(); }

    /// l, recomputed as the maximal strictly decreasing prefix of the w_i.
    int down_prefix_length() const;

    bool valid() const;

    static SPermutation parse(const std::string& text);
    std::string str() const;

    auto operator<=>(const SPermutation&) const = default;
};

/// Theorem 2's map T -> S.
SPermutation kpart_encode(const TElement& t);

/// Its inverse; n and k identify the family. Inputs outside S are rejected.
TElement kpart_decode(const SPermutation& p, int n, int k);

/// All of S for the parameters (n, k), sorted lexicographically by entries.
std::vector<SPermutation> enumerate_S(int n, int k);

}  // namespace copatt
