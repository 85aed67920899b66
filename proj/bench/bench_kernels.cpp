// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "codescout/code_catalog.hpp"
#include "codescout/coset_profile.hpp"
#include "codescout/profile_kernels.hpp"
#include "codescout/simulator.hpp"

using namespace codescout;

namespace {

const LinearCode& bch_31_16() {
    static const LinearCode code = parse_code_spec("bch:31,16");
    return code;
}

const LinearCode& hamming_15_11() {
    static const LinearCode code = build_hamming(4);
    return code;
}

LinearCode direct_bench_code(std::int64_t index) {
    switch (index) {
        case 0: return build_hamming(4);
        case 1: return parse_code_spec("bch:15,7");
        default: return build_reed_muller(2, 4);
    }
}

void direct_counts_serial(benchmark::State& state) {
    const auto code = direct_bench_code(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::coset_weight_counts_serial(code));
}

void direct_counts_parallel(benchmark::State& state) {
    const auto code = direct_bench_code(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::coset_weight_counts_parallel(code));
}

// n-k = 8, 11, 15.
LinearCode dual_bench_code(std::int64_t index) {
    switch (index) {
        case 0: return parse_code_spec("bch:15,7");
        case 1: return build_reed_muller(1, 4);
        default: return bch_31_16();
    }
}

void dual_signatures_serial(benchmark::State& state) {
    const auto code = dual_bench_code(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::dual_signatures_serial(code));
}

void dual_signatures_parallel(benchmark::State& state) {
    const auto code = dual_bench_code(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::dual_signatures_parallel(code));
}

void dual_profile_bch_31_16(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(profile_dual_transform(bch_31_16()));
}

void np_trials(benchmark::State& state) {
    const auto mode = state.range(0) == 0 ? Execution::serial : Execution::parallel;
    const auto profile = profile_direct(hamming_15_11());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            run_np_trials(hamming_15_11(), profile, 10, 0.05, 0.05, 20000, 1, Hypothesis::h1, mode));
    state.SetItemsProcessed(state.iterations() * 20000);
}

void sprt_trials(benchmark::State& state) {
    const auto mode = state.range(0) == 0 ? Execution::serial : Execution::parallel;
    const auto profile = profile_direct(hamming_15_11());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            run_sprt_trials(hamming_15_11(), profile, 0.05, 0.05, 0.99, 20000, 1, Hypothesis::h0, mode));
    state.SetItemsProcessed(state.iterations() * 20000);
}

}  // namespace

BENCHMARK(direct_counts_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(direct_counts_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(dual_signatures_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(dual_signatures_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(dual_profile_bch_31_16)->Unit(benchmark::kMillisecond);
BENCHMARK(np_trials)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(sprt_trials)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
