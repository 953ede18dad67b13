#include <benchmark/benchmark.h>

#include <random>

#include "hodge/birational.hpp"
#include "hodge/blowup.hpp"
#include "hodge/builtins.hpp"
#include "hodge/manifest.hpp"

using namespace hodge;

namespace {

HodgeDiamond random_diamond(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> dist(0, 9);
    std::vector<std::vector<int>> h(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (auto& row : h)
        for (auto& cell : row) cell = dist(rng);
    h[0][0] = 1;
    return HodgeDiamond(n, std::move(h));
}

ManifoldModel random_model(std::mt19937_64& rng, int n) {
    ManifoldModel m;
    m.name = "bench";
    m.dim = n;
    m.diamond = random_diamond(rng, n);
    return normalized(std::move(m));
}

void BM_BlowUp(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const int n = static_cast<int>(state.range(0));
    const ManifoldModel x = random_model(rng, n);
    const ManifoldModel z = random_model(rng, n - 2);
    const BlowUpSpec spec(x, z);
    for (auto _ : state) benchmark::DoNotOptimize(blow_up(spec));
}
BENCHMARK(BM_BlowUp)->Arg(3)->Arg(6)->Arg(12);

void BM_ProjectiveBundle(benchmark::State& state) {
    std::mt19937_64 rng(11);
    const ManifoldModel base = random_model(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(projective_bundle(base, 4));
}
BENCHMARK(BM_ProjectiveBundle)->Arg(4)->Arg(8);

void BM_HochschildBlowUp(benchmark::State& state) {
    std::mt19937_64 rng(13);
    const ManifoldModel x = random_model(rng, 6);
    const ManifoldModel z = random_model(rng, 3);
    const BlowUpSpec spec(x, z);
    for (auto _ : state) benchmark::DoNotOptimize(hochschild_blow_up(spec));
}
BENCHMARK(BM_HochschildBlowUp);

void BM_RunScript(benchmark::State& state) {
    const ManifoldModel pt = point_model();
    FactorizationScript script{"bench", projective_space(4), {}};
    for (int i = 0; i < 8; ++i)
        script.steps.push_back({i % 2 ? StepDirection::BlowDown : StepDirection::BlowUp, pt});
    for (auto _ : state) benchmark::DoNotOptimize(run_script(script));
}
BENCHMARK(BM_RunScript);

void BM_SerializeParse(benchmark::State& state) {
    ManifestDocument doc;
    for (int n = 0; n <= 8; ++n) doc.manifolds.push_back(projective_space(n));
    const std::string text = serialize(doc);
    for (auto _ : state) benchmark::DoNotOptimize(serialize(parse_manifest(text)));
}
BENCHMARK(BM_SerializeParse);

}  // namespace

BENCHMARK_MAIN();
