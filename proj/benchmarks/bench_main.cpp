#include <benchmark/benchmark.h>

#include <random>

#include "mukai/autoeq.hpp"
#include "mukai/entropy.hpp"
#include "mukai/spectral.hpp"
#include "mukai/wallcross.hpp"

using namespace mukai;

namespace {

IntMatrix phi_matrix(long d) { return IntMatrix{{-d, 2 * d, -1}, {-1, 1, 0}, {-1, 0, 0}}; }

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> e(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
  return m;
}

void BM_CharPoly(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(3)->Arg(6)->Arg(12)->Arg(20);

void BM_SpectralRadiusPhi(benchmark::State& state) {
  const IntMatrix m = phi_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(m));
}
BENCHMARK(BM_SpectralRadiusPhi)->Arg(2)->Arg(5)->Arg(100);

void BM_SpectralRadiusRandom(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(m));
}
BENCHMARK(BM_SpectralRadiusRandom)->Arg(4)->Arg(8)->Arg(16);

void BM_GyGapSweep(benchmark::State& state) {
  const long d_max = state.range(0);
  for (auto _ : state)
    for (long d = 1; d <= d_max; ++d) benchmark::DoNotOptimize(gy_gap(d));
  state.SetItemsProcessed(state.iterations() * d_max);
}
BENCHMARK(BM_GyGapSweep)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_PhiRestriction(benchmark::State& state) {
  const K3LatticeModel model = K3LatticeModel::of_degree(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(restrict_to_sublattice(phi_h_full(model), polarized_sublattice_basis(model)));
}
BENCHMARK(BM_PhiRestriction)->Arg(5)->Arg(50);

void BM_FindPositiveOrthogonal(benchmark::State& state) {
  const K3LatticeModel model(IntMatrix{{4, 1, 0}, {1, -2, 3}, {0, 3, -6}});
  const MukaiVector s = structure_sheaf_class(model);
  for (auto _ : state) benchmark::DoNotOptimize(find_positive_orthogonal(model, s, state.range(0)));
}
BENCHMARK(BM_FindPositiveOrthogonal)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
