#pragma once

/* Reference computations for the tests, kept deliberately independent of the
 * library: different algorithms, plain integer types where ranges allow.
 */

#include <utility>
#include <vector>

namespace oracles {

/* p(0..n_max) by the pentagonal number recurrence
 * p(n) = sum_j (-1)^{j+1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)]
 */
inline std::vector<long> partition_counts(unsigned n_max) {
    std::vector<long> p(n_max + 1, 0);
    p[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        long acc = 0;
        for (long j = 1;; ++j) {
            const long g1 = j * (3 * j - 1) / 2;
            const long g2 = j * (3 * j + 1) / 2;
            if (g1 > static_cast<long>(n))
                break;
            const long sign = (j % 2 == 1) ? 1 : -1;
            acc += sign * p[n - g1];
            if (g2 <= static_cast<long>(n))
                acc += sign * p[n - g2];
        }
        p[n] = acc;
    }
    return p;
}

/* partitions of m with at most max_count parts, each part at most max_part
 * (box counting; dp[j][c] after round a = partitions of j, <= c parts, parts <= a)
 */
inline long box_partition_count(unsigned m, unsigned max_part, unsigned max_count) {
    std::vector<std::vector<long>> dp(m + 1, std::vector<long>(max_count + 1, 0));
    for (unsigned c = 0; c <= max_count; ++c)
        dp[0][c] = 1;
    for (unsigned a = 1; a <= max_part; ++a)
        for (unsigned j = a; j <= m; ++j)
            for (unsigned c = 1; c <= max_count; ++c)
                dp[j][c] += dp[j - a][c - 1];
    return dp[m][max_count];
}

/* (arm, leg) of every cell, legs counted by scanning the rows below the cell
 * rather than through the conjugate
 */
inline std::vector<std::pair<unsigned, unsigned>> cell_hooks(const std::vector<unsigned>& rows) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (unsigned j = 1; j <= rows[i]; ++j) {
            const unsigned arm = rows[i] - j;
            unsigned leg = 0;
            for (std::size_t i2 = i + 1; i2 < rows.size(); ++i2)
                if (rows[i2] >= j)
                    ++leg;
            out.emplace_back(arm, leg);
        }
    return out;
}

inline long binomial_ll(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    long r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/* [z^n] of sum_{i>=k} (z^i/(1-z^i))^r: the i-th summand contributes
 * C(n/i - 1, r - 1) whenever i divides n and n/i >= r
 */
inline long sigma_coefficient(unsigned r, unsigned k, unsigned n) {
    long acc = 0;
    for (unsigned i = k; i * r <= n; ++i)
        if (n % i == 0 && n / i >= r)
            acc += binomial_ll(n / i - 1, r - 1);
    return acc;
}

inline unsigned divisor_count(unsigned n) {
    unsigned c = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0)
            ++c;
    return c;
}

/* falling factorial x(x-1)...(x-i+1); 0 whenever x < i */
inline long falling_factorial(unsigned x, unsigned i) {
    long r = 1;
    for (unsigned t = 0; t < i; ++t)
        r *= static_cast<long>(x) - static_cast<long>(t);
    return r;
}

} // namespace oracles
