#pragma once

#include <functional>
#include <string>
#include <vector>

namespace copatt {

/// One-line notation, 1-based values.
using Perm = std::vector<int>;

std::string perm_str(const Perm& p);
Perm perm_parse(const std::string& text);

/// true iff some scattered subsequence of w is order-isomorphic to pattern
/// (classical containment; works on any word with distinct values).
bool contains_classical(const Perm& w, const Perm& pattern);

int descent_count(const Perm& w);

/// All permutations of [n] avoiding every pattern in `patterns` and having at
/// most `max_descents` descents (-1 = unrestricted), by pruned backtracking.
/// Emitted in lexicographic order.
std::vector<Perm> enumerate_avoiders(int n, const std::vector<Perm>& patterns,
                                     int max_descents = -1);

}  // namespace copatt
