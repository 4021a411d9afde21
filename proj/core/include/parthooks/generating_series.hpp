#pragma once

#include <parthooks/integer.hpp>
#include <parthooks/partition.hpp>
#include <parthooks/series.hpp>

#include <vector>

namespace parthooks {

/* prod_{i=1}^{N} 1/(1 - z^i); [z^n] is the number of partitions of n */
truncated_series euler_product(unsigned order);

/* z^k/(1 - z^k) = z^k + z^{2k} + ...; k >= 1 */
truncated_series geometric_factor(unsigned k, unsigned order);

/* sum of nu_k over partitions of n, as [z^n] of
 * z^k/(1 - z^k) * prod_i 1/(1 - z^i)
 */
truncated_series nu_series(unsigned k, unsigned order);

/* sum of k-th parts over partitions of n, as [z^n] of
 * (sum_{j>=k} z^j/(1 - z^j)) * prod_i 1/(1 - z^i); the tail keeps j <= N
 */
truncated_series lambda_series(unsigned k, unsigned order);

/* sum of gamma_k over partitions of n, as [z^n] of
 * z^k (1 - z) / ((1 - z^k)(1 - z^{k+1})) * prod_i 1/(1 - z^i)
 */
truncated_series gamma_series(unsigned k, unsigned order);

/* 1/(1 - q^{alpha+beta+1}) * (sum_i q^{i(beta+1)} prod_{j=i+1}^{i+alpha} (1 - q^j))^{-1};
 * the sum keeps the terms with i(beta+1) <= N
 */
truncated_series prop12_rhs(unsigned alpha, unsigned beta, unsigned order);

/* sum of C(lambda_k, d) over partitions, as [z^n] of
 * prod_{j<k} 1/(1-z^j) * sum_i C(i,d) z^{ik} prod_{j<=i} 1/(1-z^j);
 * the sum keeps the terms with i*k <= N
 */
truncated_series lambda_binomial_series(unsigned k, unsigned d, unsigned order);

/* sum of C(nu_k, d) over partitions, as [z^n] of
 * (z^k/(1 - z^k))^d * prod_i 1/(1 - z^i)
 */
truncated_series nu_binomial_series(unsigned k, unsigned d, unsigned order);

/* sigma_r(k) = sum_{i>=k} (z^i/(1 - z^i))^r, keeping the summands with
 * i*r <= N (the i-th summand starts at z^{ir}); r >= 1, k >= 1
 */
truncated_series sigma_series(unsigned r, unsigned k, unsigned order);

struct cycle_index_series {
    unsigned d;
    unsigned k;
    truncated_series series;
};

/* order of the centralizer quotient: d! / prod_j j^{m_j} m_j! where m_j is
 * the number of parts of cycle_type equal to j
 */
Integer conjugacy_class_size(const partition& cycle_type);

/* S_d(k) = sum over cycle types t of d of
 * conjugacy_class_size(t) * prod_p sigma_p(k), the product running over the
 * parts p of t; S_0 = 1. The per-type weights sum to d!.
 */
cycle_index_series s_series(unsigned d, unsigned k, unsigned order);

/* Stirling number of the second kind: partitions of a d-set into i blocks */
Integer stirling2(unsigned d, unsigned i);

} // namespace parthooks
