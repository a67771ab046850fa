// Compares the grouped/OpenMP simulation kernel against the serial
// term-by-term reference, plus the surrounding building blocks.
#include <benchmark/benchmark.h>

#include "ballfield/sampler.hpp"

using namespace ballfield;

namespace {

struct Setup {
  AngularSpectrum spectrum;
  RadialFactor factor;
  NodeSet nodes;
  SamplerConfig config;

  Setup(double rho, int n_r, int n_theta, int n_phi, int n_terms)
      : spectrum(geometric_spectrum(rho, default_geometric_max_degree(rho))),
        factor(cholesky(
            build_radial_matrix(RadialGrid::uniform(n_r), RadialCovarianceModel{1.0, 0.15}))),
        nodes(NodeSet::from_grid(
            BallGrid{RadialGrid::uniform(n_r), SphereGrid::uniform(n_theta, n_phi)})) {
    config.n_terms = n_terms;
    config.seed = 12345;
  }
};

void BM_SimulateBallReference(benchmark::State& state) {
  Setup setup(0.7, static_cast<int>(state.range(0)), 17, 32,
              static_cast<int>(state.range(1)));
  std::uint32_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_ball_reference(setup.config, setup.spectrum, setup.factor, setup.nodes, index++));
  }
  state.SetItemsProcessed(state.iterations() * setup.nodes.node_count());
}

void BM_SimulateBallGrouped(benchmark::State& state) {
  Setup setup(0.7, static_cast<int>(state.range(0)), 17, 32,
              static_cast<int>(state.range(1)));
  std::uint32_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_ball(setup.config, setup.spectrum, setup.factor, setup.nodes, index++));
  }
  state.SetItemsProcessed(state.iterations() * setup.nodes.node_count());
}

void BM_EnsembleSegmentSized(benchmark::State& state) {
  // the validation workload shape: 21 scattered points, many realizations
  const RadialCovarianceModel model{1.0, 0.15};
  const AngularSpectrum spectrum = geometric_spectrum(0.7, default_geometric_max_degree(0.7));
  std::vector<BallPoint> points;
  for (int i = 0; i < 21; ++i) {
    points.push_back({0.3 + 0.7 * i / 20.0, {0.1 * i, 0.05 + 0.14 * i}});
  }
  const NodeSet nodes = NodeSet::from_points(points);
  const RadialFactor factor = cholesky(build_radial_matrix(nodes.radial(), model));
  SamplerConfig config;
  config.n_terms = 2000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generate_ensemble(config, spectrum, factor, nodes, static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SimulateBallReference)->Args({8, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateBallGrouped)->Args({8, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateBallReference)->Args({16, 1000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateBallGrouped)->Args({16, 1000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnsembleSegmentSized)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
