#pragma once

#include <vector>

#include "copatt/bigint.hpp"
#include "copatt/pattern.hpp"

namespace copatt::oracle {

/// (l, s)-indexed count table, dimensions (n+1) x (n+1).
using CountTable = std::vector<std::vector<long long>>;

// Serial reference implementations, built on the lexicographic streams.
BigInt total_occurrences_serial(const Spop& w, int n);
CountTable occurrence_table_serial(const Spop& w, int n);
CountTable kpart_table_serial(int n, int k);
BigInt palindrome_kparts_serial(int N, int k);

// OpenMP kernels over bitmask-encoded compositions (a composition of n is a
// subset of the n-1 inner gaps; palindromes are driven by their left half).
// Exact integer results, identical to the serial references.
BigInt total_occurrences(const Spop& w, int n);
CountTable occurrence_table(const Spop& w, int n);
CountTable kpart_table(int n, int k);
BigInt palindrome_kparts(int N, int k);

}  // namespace copatt::oracle
