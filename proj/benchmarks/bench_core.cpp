#include <benchmark/benchmark.h>

#include "nlcl/problem.hpp"

namespace {

nlcl::StateField smooth_field(int n) {
    nlcl::Grid1D g(0.0, 1.0, n, nlcl::Bc::periodic);
    return nlcl::initial_average(nlcl::initial_datum("u01"), g);
}

void BM_SecondOrderOperator(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    nlcl::StateField u = smooth_field(n);
    auto wt = nlcl::build_second_order(nlcl::KernelSpec::power_law(0.125, 1.0),
                                       u.grid.dx());
    auto flux = nlcl::FluxSpec::burgers(nlcl::NumericalFlux::godunov);
    for (auto _ : state)
        benchmark::DoNotOptimize(nlcl::apply_nonlocal_second_order(u, wt, flux));
    state.SetComplexityN(n);
}
BENCHMARK(BM_SecondOrderOperator)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_FirstOrderOperator(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    nlcl::StateField u = smooth_field(n);
    auto wt = nlcl::build_first_order(nlcl::KernelSpec::power_law(0.125, 1.0),
                                      u.grid.dx());
    auto flux = nlcl::FluxSpec::burgers(nlcl::NumericalFlux::godunov);
    for (auto _ : state)
        benchmark::DoNotOptimize(nlcl::apply_nonlocal_first_order(u, wt, flux));
}
BENCHMARK(BM_FirstOrderOperator)->RangeMultiplier(2)->Range(64, 1024);

void BM_WeightBuild(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto kernel = nlcl::KernelSpec::power_law(0.125, -0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(nlcl::build_second_order(kernel, 1.0 / n));
}
BENCHMARK(BM_WeightBuild)->RangeMultiplier(4)->Range(16, 1024);

void BM_SmoothRun(benchmark::State& state) {
    nlcl::Problem prob;
    prob.kernel.delta = 0.125;
    prob.kernel.p = 1.0;
    prob.lambda = 0.8;
    prob.t_end = 0.1;
    prob.u0 = nlcl::initial_datum("u01");
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(nlcl::solve_final(prob, n));
}
BENCHMARK(BM_SmoothRun)->Arg(64)->Arg(256);

} // namespace

BENCHMARK_MAIN();
