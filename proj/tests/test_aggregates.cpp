#include <doctest.h>

#include <parthooks/aggregates.hpp>

#include "oracles.hpp"

#include <stdexcept>

using namespace parthooks;

TEST_SUITE_BEGIN("aggregates");

TEST_CASE("aggregate vectors for n=4 match the worked display") {
    const aggregate_vectors agg(4);
    CHECK(agg.lambda == std::vector<Integer>{12, 5, 2, 1});
    CHECK(agg.nu == std::vector<Integer>{7, 3, 1, 1});
    CHECK(agg.gamma == std::vector<Integer>{4, 2, 0, 1});
}

TEST_CASE("aggregate vectors for n=1") {
    const aggregate_vectors agg(1);
    CHECK(agg.lambda == std::vector<Integer>{1});
    CHECK(agg.nu == std::vector<Integer>{1});
    CHECK(agg.gamma == std::vector<Integer>{1});
    CHECK_THROWS_AS(aggregate_vectors(0), std::invalid_argument);
}

TEST_CASE("content conservation and boundary coordinates up to n=30") {
    const auto p = oracles::partition_counts(30);
    for (unsigned n = 1; n <= 30; ++n) {
        const aggregate_vectors agg(n);
        CHECK(agg.lambda[n - 1] == 1);
        CHECK(agg.nu[n - 1] == 1);
        CHECK(agg.gamma[n - 1] == 1);
        Integer lambda_total = 0, weighted_nu = 0;
        for (unsigned k = 1; k <= n; ++k) {
            lambda_total += agg.lambda[k - 1];
            weighted_nu += k * agg.nu[k - 1];
        }
        const Integer want = Integer(p[n]) * n;
        CHECK(lambda_total == want);
        CHECK(weighted_nu == want);
    }
}

TEST_CASE("aggregate recursions up to n=30") {
    for (unsigned n = 1; n <= 30; ++n) {
        const aggregate_vectors agg(n);
        for (unsigned k = 1; k < n; ++k) {
            CHECK(agg.lambda[k - 1] == agg.nu[k - 1] + agg.lambda[k]);
            CHECK(agg.nu[k - 1] == agg.gamma[k - 1] + agg.nu[k]);
        }
    }
}

TEST_CASE("binomial aggregates reproduce the worked displays") {
    CHECK(aggregate_binomial(4, 2, stat_family::lambda) == std::vector<Integer>{11, 1, 0, 0});
    CHECK(aggregate_binomial(4, 3, stat_family::lambda) == std::vector<Integer>{5, 0, 0, 0});
    CHECK(aggregate_binomial(4, 2, stat_family::nu) == std::vector<Integer>{7, 1, 0, 0});
    CHECK(aggregate_binomial(4, 3, stat_family::nu) == std::vector<Integer>{4, 0, 0, 0});
}

TEST_CASE("binomial aggregates at d=0 and d=1") {
    const auto p = oracles::partition_counts(12);
    for (unsigned n = 1; n <= 12; ++n) {
        const auto d0 = aggregate_binomial(n, 0, stat_family::lambda);
        for (const Integer& v : d0)
            CHECK(v == p[n]); /* C(x,0) = 1 for every coordinate */
        const auto d1_lambda = aggregate_binomial(n, 1, stat_family::lambda);
        const auto d1_nu = aggregate_binomial(n, 1, stat_family::nu);
        const aggregate_vectors agg(n);
        CHECK(d1_lambda == agg.lambda); /* C(x,1) = x */
        CHECK(d1_nu == agg.nu);
    }
    CHECK_THROWS_AS(aggregate_binomial(0, 2, stat_family::nu), std::invalid_argument);
}

TEST_CASE("power moments: frozen values and edge rules") {
    CHECK(aggregate_power_moment(4, 1, 1, stat_family::lambda) == 12);
    CHECK(aggregate_power_moment(4, 2, 1, stat_family::lambda) == 34); /* 16+9+4+4+1 */
    CHECK(aggregate_power_moment(4, 0, 1, stat_family::lambda) == 5);  /* x^0 = 1, p(4) terms */
    CHECK(aggregate_power_moment(4, 0, 3, stat_family::nu) == 5);      /* 0^0 = 1 as well */
    CHECK(aggregate_power_moment(4, 1, 2, stat_family::nu) == 3);
    CHECK_THROWS_AS(aggregate_power_moment(4, 1, 0, stat_family::nu), std::invalid_argument);
    CHECK_THROWS_AS(aggregate_power_moment(4, 1, 5, stat_family::nu), std::invalid_argument);
    CHECK_THROWS_AS(aggregate_power_moment(0, 1, 1, stat_family::nu), std::invalid_argument);
}

TEST_CASE("power moments agree with direct per-partition sums") {
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned d = 0; d <= 3; ++d)
            for (unsigned k = 1; k <= n; ++k) {
                Integer direct_lambda = 0, direct_nu = 0;
                for (const partition& p : enumerate_partitions(n)) {
                    direct_lambda += ui_pow(p.part(k), d);
                    direct_nu += ui_pow(multiplicity_vector(p, n).count(k), d);
                }
                CHECK(aggregate_power_moment(n, d, k, stat_family::lambda) == direct_lambda);
                CHECK(aggregate_power_moment(n, d, k, stat_family::nu) == direct_nu);
            }
}

TEST_SUITE_END();
