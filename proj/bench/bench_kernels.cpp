// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to the
// thread count of interest; on a single core the two should tie.
#include <benchmark/benchmark.h>

#include "wgmcool/dynamics.hpp"
#include "wgmcool/ensemble.hpp"
#include "wgmcool/gas.hpp"
#include "wgmcool/spectrum.hpp"

namespace {

wgmcool::ScanRequest scan_request(benchmark::State& state) {
    wgmcool::ScanRequest r;
    r.x_min = 39.0;
    r.x_max = 41.0;
    r.step = 2.0 / static_cast<double>(state.range(0));
    r.refractive_index = 1.45;
    r.power = 10e-3;
    return r;
}

void BM_ScanSerial(benchmark::State& state) {
    const auto r = scan_request(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wgmcool::scan_spectrum_serial(r));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanParallel(benchmark::State& state) {
    const auto r = scan_request(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wgmcool::scan_spectrum(r));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

wgmcool::SimConfig gas_only() {
    wgmcool::SimConfig c;
    c.trap = {wgmcool::TrapKind::optical_trap, 5e-5, 4e-12};
    c.gas = wgmcool::GasEnvironment{};
    c.gas->pressure = 100.0;
    c.sphere_radius = 10e-6;
    c.duration = 0.2;
    c.timestep = 2e-5;
    c.seed = 7;
    c.record_stride = 10;
    return c;
}

void BM_EnsembleSerial(benchmark::State& state) {
    const auto c = gas_only();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            wgmcool::simulate_ensemble_serial(c, static_cast<std::size_t>(state.range(0))));
    }
}

void BM_EnsembleParallel(benchmark::State& state) {
    const auto c = gas_only();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            wgmcool::simulate_ensemble(c, static_cast<std::size_t>(state.range(0))));
    }
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnsembleSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnsembleParallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
