#include <benchmark/benchmark.h>

#include <random>

#include "opineq/chains.hpp"
#include "opineq/random.hpp"

using namespace opineq;

namespace {

SymMatrix worked_example() { return SymMatrix::from_rows({{2.0, -1.0}, {-1.0, 3.0}}); }

void BM_eigendecompose(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const SymMatrix a = ensembles::symmetric(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        auto ed = eigendecompose(a);
        benchmark::DoNotOptimize(ed.eigenvalues.data());
    }
}
BENCHMARK(BM_eigendecompose)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_operator_chain_example(benchmark::State& state) {
    const SymMatrix a = worked_example();
    const Interval j(1.35, 3.8);
    for (auto _ : state) {
        auto rep = power_chain(-1.0, PowerTransform{0.5}, a, MapDescriptor::normalized_trace(), j,
                               PowerChainMode::RatioK);
        benchmark::DoNotOptimize(rep.passed);
    }
}
BENCHMARK(BM_operator_chain_example);

void BM_beta_constant(benchmark::State& state) {
    const Interval j(0.7, 3.1);
    const FunctionDescriptor f = FunctionDescriptor::power(-1.0);
    for (auto _ : state) {
        double beta = beta_constant(f, j, 1.0);
        benchmark::DoNotOptimize(beta);
    }
}
BENCHMARK(BM_beta_constant);

void BM_ratio_alpha(benchmark::State& state) {
    const Interval j(0.7, 3.1);
    const FunctionDescriptor f = FunctionDescriptor::exp();
    for (auto _ : state) {
        double alpha = ratio_alpha(f, j);
        benchmark::DoNotOptimize(alpha);
    }
}
BENCHMARK(BM_ratio_alpha);

void BM_kantorovich_integral_chain(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const SymMatrix a =
        ensembles::symmetric_with_floor(static_cast<int>(state.range(0)), 0.3, rng);
    for (auto _ : state) {
        auto rep = kantorovich_integral_chain(a, MapDescriptor::normalized_trace(), std::nullopt,
                                              QuadratureConfig::gauss_legendre(64));
        benchmark::DoNotOptimize(rep.passed);
    }
}
BENCHMARK(BM_kantorovich_integral_chain)->Arg(2)->Arg(4)->Arg(8);

void BM_gauss_rule(benchmark::State& state) {
    for (auto _ : state) {
        double acc = integrate([](double z) { return 1.0 / z; }, 0.5, 2.0,
                               QuadratureConfig::gauss_legendre(static_cast<int>(state.range(0))));
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_gauss_rule)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
