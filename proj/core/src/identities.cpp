#include <parthooks/identities.hpp>

#include <parthooks/aggregates.hpp>
#include <parthooks/generating_series.hpp>
#include <parthooks/partition.hpp>
#include <parthooks/q_binomial.hpp>
#include <parthooks/series.hpp>

#include <algorithm>
#include <array>

namespace parthooks {

namespace {

constexpr std::array<const char*, 8> labels = {
    "THM_1_1", "PROP_1_2", "THM_1_3", "LEMMA_MK_NU",
    "COR_1_4", "PROP_1_5", "REM_1_6", "THM_1_7",
};

void require(bool ok, const char* what) {
    if (!ok)
        throw std::invalid_argument(what);
}

const Integer& integer_zero() {
    static const Integer zero = 0;
    return zero;
}

void record(verification_report& r, nlohmann::json point, const Integer& expected,
            const Integer& actual) {
    if (expected != actual)
        r.mismatches.push_back({std::move(point), to_decimal(expected), to_decimal(actual)});
}

} // namespace

std::string to_label(identity_id id) { return labels[static_cast<std::size_t>(id)]; }

identity_id from_label(const std::string& label) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (label == labels[i])
            return static_cast<identity_id>(i);
    throw std::invalid_argument("unknown identity label: " + label);
}

std::vector<identity_id> all_identities() {
    std::vector<identity_id> ids;
    for (std::size_t i = 0; i < labels.size(); ++i)
        ids.push_back(static_cast<identity_id>(i));
    return ids;
}

nlohmann::json verification_report::to_json() const {
    nlohmann::json j;
    j["identity_id"] = to_label(id);
    auto params = nlohmann::json::object();
    for (const auto& [name, value] : parameters)
        params[name] = value;
    j["parameters"] = std::move(params);
    j["status"] = passed() ? "pass" : "fail";
    auto arr = nlohmann::json::array();
    for (const mismatch& m : mismatches)
        arr.push_back({{"point", m.point}, {"expected", m.expected}, {"actual", m.actual}});
    j["mismatches"] = std::move(arr);
    return j;
}

/* For every k and every arm 0..k-1, the number of length-k hooks with that
 * arm, summed over all partitions of n, is independent of the arm and equals
 * the aggregate multiplicity of k, read off nu_series.
 */
verification_report verify_thm_1_1(unsigned k_max, unsigned n_max) {
    require(k_max >= 1, "verify_thm_1_1: k_max must be positive");
    require(n_max >= 1, "verify_thm_1_1: n_max must be positive");
    verification_report r{identity_id::thm_1_1, {{"k_max", k_max}, {"n_max", n_max}}, {}};

    /* totals[n-1][k-1][alpha], by diagram enumeration */
    std::vector<std::vector<std::vector<Integer>>> totals(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        auto& t = totals[n - 1];
        t.resize(k_max);
        for (unsigned k = 1; k <= k_max; ++k)
            t[k - 1].assign(k, 0);
        for (const partition& p : enumerate_partitions(n)) {
            const auto hist = hook_type_histogram(p, k_max);
            for (unsigned k = 1; k <= k_max; ++k)
                for (unsigned alpha = 0; alpha < k; ++alpha)
                    t[k - 1][alpha] += hist[k - 1][alpha];
        }
    }

    for (unsigned k = 1; k <= k_max; ++k) {
        const truncated_series nu = nu_series(k, n_max);
        for (unsigned alpha = 0; alpha < k; ++alpha)
            for (unsigned n = 1; n <= n_max; ++n)
                record(r, {{"k", k}, {"alpha", alpha}, {"n", n}}, totals[n - 1][k - 1][alpha],
                       nu[n]);
    }
    return r;
}

/* Gaussian binomial by box-counting recurrence vs the reciprocal-sum closed
 * form, coefficient by coefficient up to the truncation order.
 */
verification_report verify_prop_1_2(unsigned alpha_max, unsigned beta_max, unsigned order) {
    verification_report r{
        identity_id::prop_1_2, {{"alpha_max", alpha_max}, {"beta_max", beta_max}, {"order", order}},
        {}};
    for (unsigned alpha = 0; alpha <= alpha_max; ++alpha)
        for (unsigned beta = 0; beta <= beta_max; ++beta) {
            const q_binomial qb(alpha, beta);
            const truncated_series rhs = prop12_rhs(alpha, beta, order);
            for (unsigned m = 0; m <= order; ++m)
                record(r, {{"alpha", alpha}, {"beta", beta}, {"m", m}}, qb.coefficient(m), rhs[m]);
        }
    return r;
}

/* Boundary values and the two interleaved recursions of the aggregate
 * vectors: lambda_k = nu_k + lambda_{k+1} and nu_k = gamma_k + nu_{k+1},
 * with lambda_n = nu_n = gamma_n = 1.
 */
verification_report verify_thm_1_3(unsigned n_max) {
    require(n_max >= 1, "verify_thm_1_3: n_max must be positive");
    verification_report r{identity_id::thm_1_3, {{"n_max", n_max}}, {}};
    for (unsigned n = 1; n <= n_max; ++n) {
        const aggregate_vectors agg(n);
        record(r, {{"relation", "lambda_boundary"}, {"n", n}}, 1, agg.lambda[n - 1]);
        record(r, {{"relation", "nu_boundary"}, {"n", n}}, 1, agg.nu[n - 1]);
        record(r, {{"relation", "gamma_boundary"}, {"n", n}}, 1, agg.gamma[n - 1]);
        for (unsigned k = 1; k < n; ++k) {
            record(r, {{"relation", "lambda_recursion"}, {"n", n}, {"k", k}},
                   agg.nu[k - 1] + agg.lambda[k], agg.lambda[k - 1]);
            record(r, {{"relation", "nu_recursion"}, {"n", n}, {"k", k}},
                   agg.gamma[k - 1] + agg.nu[k], agg.nu[k - 1]);
        }
    }
    return r;
}

/* The number of part sizes repeated at least k times, summed over all
 * partitions of n, equals the aggregate multiplicity of k.
 */
verification_report verify_lemma_mk_nu(unsigned n_max) {
    require(n_max >= 1, "verify_lemma_mk_nu: n_max must be positive");
    verification_report r{identity_id::lemma_mk_nu, {{"n_max", n_max}}, {}};
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<Integer> m(n, 0);
        for (const partition& p : enumerate_partitions(n)) {
            const auto profile = multiplicity_at_least_profile(multiplicity_vector(p, n));
            for (unsigned k = 1; k <= n; ++k)
                m[k - 1] += profile[k - 1];
        }
        const aggregate_vectors agg(n);
        for (unsigned k = 1; k <= n; ++k)
            record(r, {{"n", n}, {"k", k}}, m[k - 1], agg.nu[k - 1]);
    }
    return r;
}

/* Aggregate lambda and gamma vectors vs their closed-form series. */
verification_report verify_cor_1_4(unsigned k_max, unsigned order, unsigned n_max) {
    require(k_max >= 1, "verify_cor_1_4: k_max must be positive");
    require(n_max >= 1, "verify_cor_1_4: n_max must be positive");
    verification_report r{
        identity_id::cor_1_4, {{"k_max", k_max}, {"order", order}, {"n_max", n_max}}, {}};
    const unsigned n_limit = std::min(order, n_max);
    std::vector<aggregate_vectors> aggs;
    aggs.reserve(n_limit);
    for (unsigned n = 1; n <= n_limit; ++n)
        aggs.emplace_back(n);
    for (unsigned k = 1; k <= k_max; ++k) {
        const truncated_series ls = lambda_series(k, order);
        const truncated_series gs = gamma_series(k, order);
        for (unsigned n = 1; n <= n_limit; ++n) {
            const Integer& lambda_brute = k <= n ? aggs[n - 1].lambda[k - 1] : integer_zero();
            const Integer& gamma_brute = k <= n ? aggs[n - 1].gamma[k - 1] : integer_zero();
            record(r, {{"family", "lambda"}, {"k", k}, {"n", n}}, lambda_brute, ls[n]);
            record(r, {{"family", "gamma"}, {"k", k}, {"n", n}}, gamma_brute, gs[n]);
        }
    }
    return r;
}

/* Aggregate binomial moments vs the binomial-moment series, both families. */
verification_report verify_prop_1_5(unsigned k_max, unsigned d_max, unsigned order,
                                    unsigned n_max) {
    require(k_max >= 1, "verify_prop_1_5: k_max must be positive");
    require(n_max >= 1, "verify_prop_1_5: n_max must be positive");
    verification_report r{identity_id::prop_1_5,
                          {{"k_max", k_max}, {"d_max", d_max}, {"order", order}, {"n_max", n_max}},
                          {}};
    const unsigned n_limit = std::min(order, n_max);
    /* for k > n every coordinate is 0, so the aggregate is p(n) * C(0,d) */
    std::vector<Integer> pcount(n_limit + 1, 0);
    for (unsigned n = 1; n <= n_limit; ++n)
        for ([[maybe_unused]] const partition& p : enumerate_partitions(n))
            pcount[n] += 1;
    for (unsigned d = 0; d <= d_max; ++d) {
        /* brute[n-1] = per-coordinate binomial sums over partitions of n */
        std::vector<std::vector<Integer>> brute_lambda, brute_nu;
        for (unsigned n = 1; n <= n_limit; ++n) {
            brute_lambda.push_back(aggregate_binomial(n, d, stat_family::lambda));
            brute_nu.push_back(aggregate_binomial(n, d, stat_family::nu));
        }
        for (unsigned k = 1; k <= k_max; ++k) {
            const truncated_series lb = lambda_binomial_series(k, d, order);
            const truncated_series nb = nu_binomial_series(k, d, order);
            for (unsigned n = 1; n <= n_limit; ++n) {
                const Integer& tail = d == 0 ? pcount[n] : integer_zero();
                const Integer& bl = k <= n ? brute_lambda[n - 1][k - 1] : tail;
                const Integer& bn = k <= n ? brute_nu[n - 1][k - 1] : tail;
                record(r, {{"family", "lambda"}, {"k", k}, {"d", d}, {"n", n}}, bl, lb[n]);
                record(r, {{"family", "nu"}, {"k", k}, {"d", d}, {"n", n}}, bn, nb[n]);
            }
        }
    }
    return r;
}

/* Power moments vs binomial moments converted through Stirling numbers:
 * sum x^d = sum_i i! S(d,i) C(x,i), the binomial side read off the series.
 */
verification_report verify_rem_1_6(unsigned k_max, unsigned d_max, unsigned n_max) {
    require(k_max >= 1, "verify_rem_1_6: k_max must be positive");
    require(n_max >= 1, "verify_rem_1_6: n_max must be positive");
    verification_report r{
        identity_id::rem_1_6, {{"k_max", k_max}, {"d_max", d_max}, {"n_max", n_max}}, {}};
    const unsigned k_limit = std::min(k_max, n_max);
    for (unsigned k = 1; k <= k_limit; ++k) {
        std::vector<truncated_series> lambda_binom, nu_binom;
        for (unsigned i = 0; i <= d_max; ++i) {
            lambda_binom.push_back(lambda_binomial_series(k, i, n_max));
            nu_binom.push_back(nu_binomial_series(k, i, n_max));
        }
        for (unsigned d = 0; d <= d_max; ++d) {
            std::vector<Integer> weight(d + 1); /* i! S(d,i) */
            for (unsigned i = 0; i <= d; ++i)
                weight[i] = factorial(i) * stirling2(d, i);
            for (unsigned n = k; n <= n_max; ++n) {
                Integer conv_lambda = 0, conv_nu = 0;
                for (unsigned i = 0; i <= d; ++i) {
                    conv_lambda += weight[i] * lambda_binom[i][n];
                    conv_nu += weight[i] * nu_binom[i][n];
                }
                record(r, {{"family", "lambda"}, {"k", k}, {"d", d}, {"n", n}},
                       aggregate_power_moment(n, d, k, stat_family::lambda), conv_lambda);
                record(r, {{"family", "nu"}, {"k", k}, {"d", d}, {"n", n}},
                       aggregate_power_moment(n, d, k, stat_family::nu), conv_nu);
            }
        }
    }
    return r;
}

/* d-th falling moment of lambda_k scaled by d! vs the cycle-index form
 * S_d(k) times the partition-count series.
 */
verification_report verify_thm_1_7(unsigned k_max, unsigned d_max, unsigned order) {
    require(k_max >= 1, "verify_thm_1_7: k_max must be positive");
    require(d_max >= 1, "verify_thm_1_7: d_max must be positive");
    verification_report r{
        identity_id::thm_1_7, {{"k_max", k_max}, {"d_max", d_max}, {"order", order}}, {}};
    const truncated_series euler = euler_product(order);
    for (unsigned d = 1; d <= d_max; ++d) {
        const Integer d_factorial = factorial(d);
        for (unsigned k = 1; k <= k_max; ++k) {
            const truncated_series lhs_base = lambda_binomial_series(k, d, order);
            const truncated_series rhs = s_series(d, k, order).series * euler;
            for (unsigned n = 0; n <= order; ++n)
                record(r, {{"d", d}, {"k", k}, {"n", n}}, d_factorial * lhs_base[n], rhs[n]);
        }
    }
    return r;
}

verification_report run_verifier(identity_id id, const sweep_options& o) {
    switch (id) {
    case identity_id::thm_1_1:
        return verify_thm_1_1(o.k_max, o.n_max);
    case identity_id::prop_1_2:
        return verify_prop_1_2(o.alpha_max, o.beta_max, o.order);
    case identity_id::thm_1_3:
        return verify_thm_1_3(o.n_max);
    case identity_id::lemma_mk_nu:
        return verify_lemma_mk_nu(o.n_max);
    case identity_id::cor_1_4:
        return verify_cor_1_4(o.k_max, o.order, o.n_max);
    case identity_id::prop_1_5:
        return verify_prop_1_5(o.k_max, o.d_max, o.order, o.n_max);
    case identity_id::rem_1_6:
        return verify_rem_1_6(o.k_max, o.d_max, o.n_max);
    case identity_id::thm_1_7:
        return verify_thm_1_7(o.k_max, o.d_max, o.order);
    }
    throw std::invalid_argument("run_verifier: unknown identity");
}

} // namespace parthooks
