#pragma once

#include <string>
#include <vector>

#include "copatt/permutations.hpp"

namespace copatt {

/// Binary string with at most three maximal runs.
struct BitonicBinary {
    std::string bits;
    bool valid() const;
};

/// Binary string whose maximal runs all have length at least 2.
struct NoSingletonBinary {
    std::string bits;
    bool valid() const;
};

/// A line through two intersection points of an n-line arrangement, held as
/// two disjoint label pairs normalized to x < y, z < v, y < v.
struct LinePair {
    int n = 0;
    int x = 0, y = 0, z = 0, v = 0;

    LinePair(int n, std::pair<int, int> p1, std::pair<int, int> p2);  // normalizes

    static LinePair parse(const std::string& text, int n);  // "((x,y),(z,v))"
    std::string str() const;

    auto operator<=>(const LinePair&) const = default;
};

// membership predicates for the restricted classes (w over [n+2], [n+2],
// [n+3], [n] respectively)
bool in_s1(const Perm& w);
bool in_s2(const Perm& w);
bool in_s3(const Perm& w);
bool in_s4(const Perm& w);
/// one descent exactly, avoiding 1-3-2-4
bool is_one_descent_avoider(const Perm& w);

// Bijection 1: S_1 <-> bitonic binary strings of length n
BitonicBinary s1_forward(const Perm& p);
Perm s1_backward(const BitonicBinary& b);

// Bijection 2: S_2 <-> binary strings of length n+2 without singletons
NoSingletonBinary s2_forward(const Perm& p);
Perm s2_backward(const NoSingletonBinary& b);

// Bijection 3: one-descent 1-3-2-4-avoiders of [n+2] <-> S_3 in [n+3]
Perm s3_forward(const Perm& avoider);
Perm s3_backward(const Perm& s3_element);

// Bijection 4: line pairs <-> S_4 in [n]
Perm s4_forward(const LinePair& lp);
LinePair s4_backward(const Perm& p);

// exhaustive class enumerations (lexicographic)
std::vector<Perm> enumerate_s1(int n);
std::vector<Perm> enumerate_s2(int n);
std::vector<Perm> enumerate_s3(int n);
std::vector<Perm> enumerate_s4(int n);
std::vector<BitonicBinary> enumerate_bitonic(int length);
std::vector<NoSingletonBinary> enumerate_no_singleton(int length);
std::vector<Perm> enumerate_one_descent_avoiders(int n);  // perms of [n+2]
std::vector<LinePair> enumerate_line_pairs(int n);

}  // namespace copatt
