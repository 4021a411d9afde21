#include <parthooks/aggregates.hpp>

#include <stdexcept>

namespace parthooks {

aggregate_vectors::aggregate_vectors(unsigned n_in) : n(n_in), lambda(n_in), nu(n_in), gamma(n_in) {
    if (n == 0)
        throw std::invalid_argument("aggregate_vectors: n must be positive");
    for (const partition& p : enumerate_partitions(n)) {
        const auto& parts = p.parts();
        for (std::size_t k = 0; k < parts.size(); ++k)
            lambda[k] += parts[k];
        const multiplicity_vector mv(p, n);
        for (unsigned i = 0; i < n; ++i)
            nu[i] += mv.counts()[i];
        const gamma_vector gv(mv);
        for (unsigned i = 0; i < n; ++i)
            gamma[i] += gv.counts()[i];
    }
}

std::vector<Integer> aggregate_binomial(unsigned n, unsigned d, stat_family which) {
    if (n == 0)
        throw std::invalid_argument("aggregate_binomial: n must be positive");
    std::vector<Integer> choose(n + 1); /* choose[x] = C(x, d), x <= n */
    for (unsigned x = 0; x <= n; ++x)
        choose[x] = binomial(x, d);
    std::vector<Integer> acc(n);
    for (const partition& p : enumerate_partitions(n)) {
        if (which == stat_family::lambda) {
            for (unsigned k = 1; k <= n; ++k)
                acc[k - 1] += choose[p.part(k)];
        } else {
            const multiplicity_vector mv(p, n);
            for (unsigned i = 0; i < n; ++i)
                acc[i] += choose[mv.counts()[i]];
        }
    }
    return acc;
}

Integer aggregate_power_moment(unsigned n, unsigned d, unsigned k, stat_family which) {
    if (n == 0)
        throw std::invalid_argument("aggregate_power_moment: n must be positive");
    if (k < 1 || k > n)
        throw std::invalid_argument("aggregate_power_moment: k must lie in 1..n");
    std::vector<Integer> power(n + 1); /* power[x] = x^d with 0^0 = 1 */
    for (unsigned x = 0; x <= n; ++x)
        power[x] = ui_pow(x, d);
    Integer acc = 0;
    for (const partition& p : enumerate_partitions(n)) {
        const unsigned x =
            which == stat_family::lambda ? p.part(k) : multiplicity_vector(p, n).count(k);
        acc += power[x];
    }
    return acc;
}

} // namespace parthooks
