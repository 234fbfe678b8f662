#include <benchmark/benchmark.h>

#include "hhiv/harmonic.hpp"
#include "hhiv/quadrature.hpp"

namespace {

using hhiv::quad::Execution;

const hhiv::IVFunction& member() {
    static const hhiv::IVFunction f("x", "5 - x", hhiv::HarmonicDomain(1.0, 2.0));
    return f;
}

const hhiv::IVFunction& wiggly() {
    static const hhiv::IVFunction f("1 + exp(-x)*abs(x - 1.37)", "4 + sqrt(x)*ln(x + 1)", hhiv::HarmonicDomain(1.0, 2.0));
    return f;
}

void certify(benchmark::State& state, Execution exec) {
    const int n = static_cast<int>(state.range(0));
    const hhiv::CertifyOptions opts{1e-12, exec};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hhiv::certify_sx(member(), hhiv::WeightFunction::linear(), n, opts));
    }
    state.SetItemsProcessed(state.iterations() * int64_t{n} * n * (n + 1));
}

void integrate(benchmark::State& state, Execution exec) {
    hhiv::QuadratureSpec spec;
    spec.panels = static_cast<int>(state.range(0));
    spec.tol = 1e-12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hhiv::harmonic_weighted_integral(wiggly(), wiggly(), spec, exec));
    }
}

}  // namespace

BENCHMARK_CAPTURE(certify, serial, Execution::serial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(certify, parallel, Execution::parallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(integrate, serial, Execution::serial)->Arg(8)->Arg(64)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(integrate, parallel, Execution::parallel)->Arg(8)->Arg(64)->Arg(512)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
