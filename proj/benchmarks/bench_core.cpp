#include <benchmark/benchmark.h>

#include <random>

#include "hyperalg/dynamics.hpp"
#include "hyperalg/oracle.hpp"
#include "hyperalg/symbol.hpp"
#include "hyperalg/witness.hpp"
#include "hyperalg/witness_params.hpp"

using namespace hyperalg;

namespace {

ExpPoly random_exppoly(int terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Term> t;
    for (int i = 0; i < terms; ++i) t.push_back({Cplx(u(rng), u(rng)), Cplx(2.0 * u(rng), 2.0 * u(rng))});
    return ExpPoly(std::move(t));
}

void BM_ExpPolyMul(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const ExpPoly f = random_exppoly(n, 1), g = random_exppoly(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
    state.SetComplexityN(n);
}
BENCHMARK(BM_ExpPolyMul)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_ExpPolyEval(benchmark::State& state) {
    const ExpPoly f = random_exppoly(static_cast<int>(state.range(0)), 3);
    const auto pts = DiskGrid{3.0, 32, 4}.points();
    for (auto _ : state)
        for (Cplx z : pts) benchmark::DoNotOptimize(eval_exppoly(f, z));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(pts.size()));
}
BENCHMARK(BM_ExpPolyEval)->Arg(8)->Arg(64);

void BM_TaylorCoefficients(benchmark::State& state) {
    const auto K = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(taylor_coefficients(SymbolSpec::sinc_pi(), 0.0, K));
}
BENCHMARK(BM_TaylorCoefficients)->Arg(8)->Arg(32);

void BM_WitnessT2(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const SymbolSpec phi = SymbolSpec::gaussian();
    const DiskGrid grid{3.0, 32, 4};
    for (auto _ : state) {
        const WitnessParams p = prepare_params_T2(phi, m, grid, 1e-6, 1LL << 20);
        benchmark::DoNotOptimize(construct_witness_T2(phi, m, ExpPoly::exponential(1.0, p.w),
                                                      ExpPoly::exponential(1.0, p.w0), 1e-6, grid, 1LL << 20, p));
    }
}
BENCHMARK(BM_WitnessT2)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_TaylorOracle(benchmark::State& state) {
    const SymbolSpec phi = SymbolSpec::cos();
    const ExpPoly f = ExpPoly({{1.0, 0.3}, {0.5, Cplx(0.0, 0.4)}});
    const long long q = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(taylor_oracle_power(phi, {f}, {2}, q, DiskGrid{1.0, 16, 2}));
}
BENCHMARK(BM_TaylorOracle)->Arg(1)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ApplySymbolPower(benchmark::State& state) {
    // real frequencies in (0, 1) keep |cos| below one, so 2^20 powers stay in range
    std::vector<Term> t;
    for (int i = 1; i <= 32; ++i) t.push_back({1.0, Cplx(i / 33.0, 0.0)});
    const ExpPoly f(std::move(t));
    for (auto _ : state) benchmark::DoNotOptimize(apply_symbol_power(SymbolSpec::cos(), f, 1LL << 20));
}
BENCHMARK(BM_ApplySymbolPower);

}  // namespace

BENCHMARK_MAIN();
