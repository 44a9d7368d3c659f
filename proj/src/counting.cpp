#include "copatt/counting.hpp"

#include <stdexcept>

namespace copatt {

BigInt composition_count(int n, int l) {
    if (n < 0 || l < 0) throw std::domain_error("composition_count: negative argument");
    if (n == 0 && l == 0) return 1;
    if (n == 0 || l == 0) return 0;
    return binomial(n - 1, l - 1);
}

RationalGF pattern_gf(const SegmentedPattern& v) {
    const auto mu = v.content();
    const int j = static_cast<int>(mu.size());
    TruncatedSeries3 den = TruncatedSeries3::poly({{0, 0, 0, 1}});
    int degree = 0;
    for (int k = 1; k <= j; ++k) {
        int m_k = 0;  // mu_{j-k+1} + ... + mu_j
        for (int i = j - k; i < j; ++i) m_k += mu[static_cast<size_t>(i)];
        den = mul(den, TruncatedSeries3::poly({{0, 0, 0, 1}, {m_k, 0, 0, -1}}));
        degree += m_k;
    }
    TruncatedSeries3 num = TruncatedSeries3::poly({{degree, 0, 0, 1}});
    return RationalGF(std::move(num), std::move(den));
}

RationalGF omega(const Spop& w) {
    const auto one_minus_x = TruncatedSeries3::poly({{0, 0, 0, 1}, {1, 0, 0, -1}});
    const auto one_minus_xz = TruncatedSeries3::poly({{0, 0, 0, 1}, {1, 0, 1, -1}});
    const auto left = TruncatedSeries3::poly({{0, 0, 0, 1}, {1, 0, 0, -1}, {1, 1, 0, -1}});
    const auto right = TruncatedSeries3::poly({{0, 0, 0, 1}, {1, 0, 1, -1}, {1, 1, 1, -1}});

    const auto& exts = w.linear_extensions();
    std::vector<RationalGF> parts;
    parts.reserve(exts.size());
    for (const auto& v : exts) parts.push_back(pattern_gf(v));

    // sum over a common denominator: num = sum_v num_v prod_{u != v} den_u
    TruncatedSeries3 num_sum = TruncatedSeries3::poly({});
    for (size_t v = 0; v < parts.size(); ++v) {
        TruncatedSeries3 term = parts[v].num;
        for (size_t u = 0; u < parts.size(); ++u)
            if (u != v) term = mul(term, parts[u].den);
        num_sum = add(num_sum, term);
    }
    TruncatedSeries3 den_all = mul(left, right);
    for (const auto& p : parts) den_all = mul(den_all, p.den);

    TruncatedSeries3 num = mul(mul(one_minus_x, one_minus_xz), num_sum);
    return RationalGF(std::move(num), std::move(den_all));
}

BigInt count_occurrences_total(const Spop& w, int n) {
    if (n < 0) throw std::domain_error("count_occurrences_total: negative n");
    RationalGF om = omega(w);
    RationalGF collapsed(set_z1(set_y1(om.num)), set_z1(set_y1(om.den)));
    return expand(collapsed, {n, 0, 0}).coeff(n, 0, 0);
}

BigInt c_w(const Spop& w, int n, int l, int s) {
    if (n < 0 || l < 0 || s < 0) throw std::domain_error("c_w: negative argument");
    if (l > n || s > n) return 0;
    return expand(omega(w), {n, n, n}).coeff(n, l, s);
}

BigInt f_closed(int n, int k, int l, int s) {
    if (n < 0 || k < 0 || l < 0 || s < 0) throw std::domain_error("f_closed: negative argument");
    if (n == 0 || k == 0 || k > n) return 0;
    if (k == n) return (l == 0 && s == 0) ? 1 : 0;
    const int d = n - k;  // >= 1 here
    if ((s == 0 || s == d) && 1 <= l && l <= d) return binomial(d - 1, l - 1);
    if (1 <= s && s <= d - 1 && 2 <= l && l <= d) return binomial(d - 2, l - 2);
    return 0;
}

BigInt total_kparts(int n, int k) {
    if (n < 1 || k < 1 || k > n - 1)
        throw std::domain_error("total_kparts: requires n >= 1 and k in [n-1]");
    // 2^(n-k-2) (n-k+3); at n-k = 1 the power is fractional, so compute
    // (n-k+3) 2^(n-k) / 4, which is exact
    return pow2(n - k) * (n - k + 3) / 4;
}

BigInt palindrome_kpart_count(int N, int k) {
    if (N < 0 || N % 2 != 0)
        throw std::domain_error("palindrome_kpart_count: N must be even (N = 2(n-1))");
    if (k < 1 || k % 2 == 0) throw std::domain_error("palindrome_kpart_count: k must be odd");
    if (k > N) throw std::domain_error("palindrome_kpart_count: k exceeds N");
    const int n = N / 2 + 1;
    if (k >= n) return 0;  // an odd part above N/2 cannot occur in an even palindrome
    return pow2(n - k - 1) * (n - k + 1);
}

}  // namespace copatt
