#include <parthooks/aggregates.hpp>
#include <parthooks/generating_series.hpp>
#include <parthooks/series.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace parthooks;

/* operator* is schoolbook; a subquadratic multiply would slot in behind the
 * same interface if these numbers ever warrant it
 */
void bm_series_multiply(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    const truncated_series a = euler_product(order);
    const truncated_series b = a.inverse();
    for (auto _ : state) {
        truncated_series c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bm_series_multiply)->Arg(64)->Arg(128)->Arg(256);

void bm_series_inverse(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    const truncated_series a = euler_product(order);
    for (auto _ : state) {
        truncated_series c = a.inverse();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bm_series_inverse)->Arg(64)->Arg(256);

void bm_euler_product(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        truncated_series s = euler_product(order);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_euler_product)->Arg(60)->Arg(240);

void bm_nu_series(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        truncated_series s = nu_series(3, order);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_nu_series)->Arg(60)->Arg(240);

void bm_lambda_binomial_series(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        truncated_series s = lambda_binomial_series(3, 4, order);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_lambda_binomial_series)->Arg(60)->Arg(120);

void bm_s_series(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        cycle_index_series s = s_series(4, 2, order);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_s_series)->Arg(60)->Arg(120);

/* full enumeration of partitions of n with all three statistics */
void bm_aggregate_vectors(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        aggregate_vectors agg(n);
        benchmark::DoNotOptimize(agg);
    }
}
BENCHMARK(bm_aggregate_vectors)->Arg(20)->Arg(30);

} // namespace

BENCHMARK_MAIN();
