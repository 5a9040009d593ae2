#include <benchmark/benchmark.h>

#include "pw/epsilon_certify.hpp"
#include "pw/immanant.hpp"
#include "pw/polytope.hpp"
#include "pw/projectors.hpp"
#include "pw/sampling.hpp"
#include "pw/seesaw.hpp"
#include "pw/witness.hpp"

using namespace pw;

static void BM_ProjectorSet(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_projector_set(d, n));
  state.SetLabel("d^n = " + std::to_string(ipow(d, n)));
}
BENCHMARK(BM_ProjectorSet)->Args({2, 4})->Args({3, 4})->Args({4, 4})->Args({2, 7})->Unit(benchmark::kMillisecond);

static void BM_SemisepClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> row(enumerate_partitions(n).size());
  for (std::size_t i = 0; i < row.size(); ++i) row[i] = (i % 2 ? -1.0 : 1.0) * double(i + 1);
  const auto w = make_witness(n, 4, row);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_semisep_closed(w));
}
BENCHMARK(BM_SemisepClosed)->DenseRange(4, 10, 2);

static void BM_SemisepNumeric(benchmark::State& state) {
  const auto w = make_witness(4, 4, std::vector<double>{0.0, 0.0, 0.0, 1.0, -9.0});
  for (auto _ : state) benchmark::DoNotOptimize(alpha_semisep_numeric(w));
}
BENCHMARK(BM_SemisepNumeric)->Unit(benchmark::kMillisecond);

static void BM_Seesaw(benchmark::State& state) {
  const auto op = witness_operator(make_witness(4, 3, std::vector<double>{0.0, 9.0, 0.0, -9.0, 0.0}));
  SeesawOptions opt;
  opt.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(seesaw_minimize(op, SeparabilityPartition({2, 1, 1}), opt));
}
BENCHMARK(BM_Seesaw)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_Immanants(benchmark::State& state) {
  CounterRng rng(1);
  const auto g = random_psd(static_cast<int>(state.range(0)), 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(immanants(g));
}
BENCHMARK(BM_Immanants)->DenseRange(4, 7);

static void BM_PolytopeSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(extreme_point_search(0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PolytopeSearch)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_EpsilonCertify(benchmark::State& state) {
  const auto w = dual_basis_witness(4, 4, indecomposable_rows()[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_certify(w));
}
BENCHMARK(BM_EpsilonCertify)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Sample(benchmark::State& state) {
  const auto p = make_distribution(4, 4, {0.1, 0.4, 0.2, 0.25, 0.05});
  const std::int64_t shots = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sample(p, shots, 3));
  state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_Sample)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
