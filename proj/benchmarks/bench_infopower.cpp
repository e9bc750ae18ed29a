#include <benchmark/benchmark.h>

#include "infopower/infopower.hpp"

using namespace infopower;

static void BM_MutualInformation(benchmark::State& state) {
    const CatalogEntry trine = zn_symmetric_povm(3);
    const PureEnsemble& antitrine = trine.known_optimal_ensembles.front();
    for (auto _ : state)
        benchmark::DoNotOptimize(mutual_information(antitrine, trine.povm));
}
BENCHMARK(BM_MutualInformation);

static void BM_GradientOperators(benchmark::State& state) {
    const CatalogEntry sic = sic_qubit();
    const PureEnsemble start = random_pure_ensemble(2, 4, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(gradient_operators(start, sic.povm));
}
BENCHMARK(BM_GradientOperators);

static void BM_AscentStep(benchmark::State& state) {
    const CatalogEntry sic = sic_qubit();
    PureEnsemble current = random_pure_ensemble(2, 4, 7);
    for (auto _ : state) {
        current = ascent_step(current, sic.povm, 0.2);
        benchmark::DoNotOptimize(current);
    }
}
BENCHMARK(BM_AscentStep);

static void BM_MaximizePowerTrine(benchmark::State& state) {
    const CatalogEntry trine = zn_symmetric_povm(3);
    OptimizerConfig cfg;
    cfg.restarts = 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(maximize_informational_power(trine.povm, cfg));
}
BENCHMARK(BM_MaximizePowerTrine)->Unit(benchmark::kMillisecond);

static void BM_BlahutNoisyProjective(benchmark::State& state) {
    const auto dim = static_cast<Eigen::Index>(state.range(0));
    const CatalogEntry entry = noisy_projective_povm(dim, 0.7);
    const auto basis = common_eigenbasis(entry.povm);
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_priors(basis->outcome_table));
}
BENCHMARK(BM_BlahutNoisyProjective)->Arg(2)->Arg(4)->Arg(8);

static void BM_PrettyGoodMeasurement(benchmark::State& state) {
    const auto dim = static_cast<Eigen::Index>(state.range(0));
    std::vector<std::pair<double, DensityMatrix>> items;
    for (std::size_t i = 0; i < 4; ++i)
        items.emplace_back(0.25, random_density_matrix(dim, 100 + i));
    const Ensemble ensemble = validate_ensemble(items);
    for (auto _ : state)
        benchmark::DoNotOptimize(pretty_good_measurement(ensemble));
}
BENCHMARK(BM_PrettyGoodMeasurement)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
