#pragma once

#include <parthooks/integer.hpp>
#include <parthooks/partition.hpp>

#include <vector>

namespace parthooks {

enum class stat_family { lambda, nu };

/* Coordinatewise sums over all partitions of n: lambda[k-1] sums the k-th
 * parts, nu[k-1] the multiplicities of k, gamma[k-1] the number of part
 * sizes repeated exactly k times. Index range is k = 1..n.
 */
struct aggregate_vectors {
    explicit aggregate_vectors(unsigned n);

    unsigned n;
    std::vector<Integer> lambda;
    std::vector<Integer> nu;
    std::vector<Integer> gamma;
};

/* result[k-1] = sum over partitions of n of C(x_k, d) where x_k is the k-th
 * part (family lambda) or the multiplicity of k (family nu); C(x, d) = 0
 * for x < d
 */
std::vector<Integer> aggregate_binomial(unsigned n, unsigned d, stat_family which);

/* sum over partitions of n of x_k^d, with x_k as above; requires 1 <= k <= n */
Integer aggregate_power_moment(unsigned n, unsigned d, unsigned k, stat_family which);

} // namespace parthooks
