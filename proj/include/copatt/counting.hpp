#pragma once

#include "copatt/bigint.hpp"
#include "copatt/pattern.hpp"
#include "copatt/series.hpp"

namespace copatt {

/// Parameters of a marked k-part query: compositions of n with l+1 parts, a
/// marked part equal to k, and prefix sum s before the mark.
struct KPartQuery {
    int n = 0, k = 0, l = 0, s = 0;
};

/// C(n, l): number of compositions of n with exactly l parts; the x^n
/// coefficient of x^l/(1-x)^l, i.e. binom(n-1, l-1) with C(0,0) = 1.
BigInt composition_count(int n, int l);

/// The x-only rational form prod_k x^{m_k}/(1 - x^{m_k}) whose x^n
/// coefficient counts compositions of n order-isomorphic to v; m_k are the
/// suffix partial sums of v's content vector.
RationalGF pattern_gf(const SegmentedPattern& v);

/// The trivariate rational form whose (n, l, s) coefficient counts
/// occurrences of w among compositions of n with l + |w| parts and prefix
/// sum s before the occurrence, summed over all linear extensions of w.
RationalGF omega(const Spop& w);

/// [x^n] of omega with y = z = 1 substituted on the rational form.
BigInt count_occurrences_total(const Spop& w, int n);

/// Coefficient of x^n y^l z^s in the expansion of omega(w); 0 whenever
/// l > n or s > n (a composition of n has at most n parts and splits).
BigInt c_w(const Spop& w, int n, int l, int s);

/// The closed form for marked k-parts:
///   binom(n-k-1, l-1)  if s in {0, n-k} and l in [n-k],
///   binom(n-k-2, l-2)  if s in [n-k-1] and l in [2, n-k],
///   0                  otherwise;
/// with the boundary rules f = 0 for n = 0 or k = 0 or k > n, and
/// f(n, n, l, s) = 1 iff l = s = 0.
BigInt f_closed(int n, int k, int l, int s);

/// 2^(n-k-2) (n-k+3) in exact arithmetic (valid for 1 <= k <= n-1; the
/// n-k = 1 case is the integer 2).
BigInt total_kparts(int n, int k);

/// Number of k-parts among palindromic compositions of even N = 2(n-1) for
/// odd k: (n-k+1) 2^(n-k-1) when k <= n-1, and 0 for k in [n, N]. Parity
/// violations (odd N or even k) are errors.
BigInt palindrome_kpart_count(int N, int k);

}  // namespace copatt
