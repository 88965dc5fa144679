#include <benchmark/benchmark.h>

#include "opmine/miner.hpp"
#include "opmine/synth.hpp"

using namespace opmine;

namespace {

EvidentialDatabase make_db(std::size_t rows, std::size_t attributes, std::size_t frame_size) {
    return generate({.rows = rows,
                     .attributes = attributes,
                     .frame_size = frame_size,
                     .max_focal = 3,
                     .p_certain = 0.3,
                     .seed = 20240101});
}

}  // namespace

static void BM_Plausibility(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("e" + std::to_string(i));
    }
    const FrameOfDiscernment frame(names);
    std::mt19937_64 rng(7);
    const MassFunction m = random_bba(frame, std::min<std::size_t>(6, frame.subset_count()), 0.0, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(plausibility(m));
    }
}
BENCHMARK(BM_Plausibility)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

static void BM_SupportEvaluation(benchmark::State& state) {
    const std::size_t rows = static_cast<std::size_t>(state.range(0));
    const auto db = make_db(rows, 4, 4);
    const auto proj = pl_project(db);
    const BbaPattern probe = {{0, certain_bba(db.attribute(0).frame, "v1")},
                              {1, certain_bba(db.attribute(1).frame, "v2")}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(support(probe, proj));
    }
    state.SetComplexityN(static_cast<std::int64_t>(rows));
}
BENCHMARK(BM_SupportEvaluation)->Range(250, 4000)->Complexity(benchmark::oN);

static void BM_ExtractItems(benchmark::State& state) {
    const auto db = make_db(static_cast<std::size_t>(state.range(0)), 6, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_items(db));
    }
}
BENCHMARK(BM_ExtractItems)->Arg(100)->Arg(400);

static void BM_OpMiner(benchmark::State& state) {
    const auto db = make_db(static_cast<std::size_t>(state.range(0)), 10, 4);
    const double minsup = static_cast<double>(state.range(1)) / 100.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(opminer(db, {minsup, 4}));
    }
}
BENCHMARK(BM_OpMiner)->Args({200, 30})->Args({1000, 30})->Args({1000, 10});

BENCHMARK_MAIN();
