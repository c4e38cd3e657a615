#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "sigvis/experiment.hpp"
#include "sigvis/path.hpp"
#include "sigvis/pipeline.hpp"
#include "sigvis/rng.hpp"
#include "sigvis/signature.hpp"
#include "sigvis/tensor.hpp"
#include "sigvis/theorems.hpp"
#include "sigvis/transforms.hpp"

namespace {

using namespace sigvis;

TensorSeries random_series(Rng& rng, int alphabet, int depth) {
    TensorSeries s(alphabet, depth);
    for (auto& c : s.data()) c = rng.uniform(-1.0, 1.0);
    return s;
}

PiecewiseLinearPath make_path(int dim, int knots, std::uint64_t seed) {
    Rng rng(seed);
    PathGenOptions opt;
    opt.min_knots = knots;
    opt.max_knots = knots;
    return random_path(rng, dim, opt);
}

void BM_TensorMul(benchmark::State& state) {
    Rng rng(1);
    const int alphabet = static_cast<int>(state.range(0));
    const int depth = static_cast<int>(state.range(1));
    const TensorSeries a = random_series(rng, alphabet, depth);
    const TensorSeries b = random_series(rng, alphabet, depth);
    for (auto _ : state) benchmark::DoNotOptimize(tensor_mul(a, b));
}
BENCHMARK(BM_TensorMul)->Args({2, 5})->Args({4, 3})->Args({5, 3})->Args({8, 3});

void BM_Signature(benchmark::State& state) {
    const auto path =
        make_path(static_cast<int>(state.range(0)), 100, 7);
    const int depth = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(signature(path, depth));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(path.num_segments()));
}
BENCHMARK(BM_Signature)->Args({2, 3})->Args({3, 3})->Args({5, 3})->Args({2, 5});

void BM_LogSignature(benchmark::State& state) {
    const auto path = make_path(3, 100, 7);
    for (auto _ : state) benchmark::DoNotOptimize(log_signature(path, 3));
}
BENCHMARK(BM_LogSignature);

void BM_VisibilityLiftSignature(benchmark::State& state) {
    const auto path = make_path(static_cast<int>(state.range(0)), 100, 7);
    for (auto _ : state) {
        const auto lifted = visibility_lift_path(path, Visibility::Initial);
        benchmark::DoNotOptimize(signature(lifted, 3));
    }
}
BENCHMARK(BM_VisibilityLiftSignature)->Arg(2)->Arg(4);

void BM_ExtractBatch(benchmark::State& state) {
    Rng rng(11);
    std::vector<StreamRecord> records;
    for (int i = 0; i < 50; ++i) {
        Stream s;
        for (int r = 0; r < 20; ++r)
            s.points.push_back({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
        records.push_back({"s" + std::to_string(i), std::nullopt, std::move(s)});
    }
    RunConfig config;
    config.depth = 3;
    config.chain = parse_chain("leadlag,vis_i");
    for (auto _ : state) benchmark::DoNotOptimize(extract(records, config));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(records.size()));
}
BENCHMARK(BM_ExtractBatch);

void BM_RidgeFit(benchmark::State& state) {
    const auto data = synth_dataset(3, 20);
    RunConfig config;
    config.depth = 3;
    config.chain = parse_chain("leadlag,vis_i");
    const auto features = extract(data.samples, config);
    for (auto _ : state) benchmark::DoNotOptimize(ridge_fit(features, 1e-3));
}
BENCHMARK(BM_RidgeFit);

void BM_VerificationChecks(benchmark::State& state) {
    Rng rng(5);
    const auto x = random_path(rng, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_lift_embedding(x, 4));
        benchmark::DoNotOptimize(
            check_lift_decomposition(x, Visibility::Initial, 4));
    }
}
BENCHMARK(BM_VerificationChecks);

}  // namespace

BENCHMARK_MAIN();
