#include <benchmark/benchmark.h>

#include <random>

#include "toric_dmod/charvar.hpp"
#include "toric_dmod/dmod.hpp"
#include "toric_dmod/fan_cox.hpp"
#include "toric_dmod/groebner.hpp"
#include "toric_dmod/lattice.hpp"

using namespace toric;

namespace {

Fan hirzebruch(long a) {
  std::vector<IntVector> rays{{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  return Fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

Fan projective_space(std::size_t n) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVector(n, -1));
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  return Fan(n, rays, cones);
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_GradingData(benchmark::State& state) {
  Fan f = projective_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grading_data(f));
}
BENCHMARK(BM_GradingData)->DenseRange(2, 5);

static void BM_CommutativeBuchberger(benchmark::State& state) {
  // cyclic-4
  VarNames names{"a", "b", "c", "d"};
  std::vector<CommPoly> gens;
  for (const char* s : {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b",
                        "a*b*c*d - 1"})
    gens.push_back(parse_comm_poly(s, names));
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(gens, 4));
}
BENCHMARK(BM_CommutativeBuchberger);

static void BM_WeylBuchberger(benchmark::State& state) {
  GradingData g = grading_data(hirzebruch(state.range(0)));
  std::vector<WeylVector> gens = d_module_left(g, g.class_group().zero()).relations;
  gens.push_back({parse_weyl("d1*d3 - x4*d2^2", 4)});
  for (auto _ : state) benchmark::DoNotOptimize(WeylGroebnerBasis(gens, 1, 4));
}
BENCHMARK(BM_WeylBuchberger)->Arg(1)->Arg(2);

static void BM_CharacteristicIdeal(benchmark::State& state) {
  GradingData g = grading_data(projective_space(static_cast<std::size_t>(state.range(0))));
  GradedPresentation f = d_module_left(g, g.class_group().zero());
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_ideal(f));
}
BENCHMARK(BM_CharacteristicIdeal)->DenseRange(1, 4);

static void BM_DimensionReport(benchmark::State& state) {
  GradingData g = grading_data(hirzebruch(state.range(0)));
  GradedPresentation f = d_module_left(g, g.class_group().zero());
  for (auto _ : state) benchmark::DoNotOptimize(dimension_report(g, f));
}
BENCHMARK(BM_DimensionReport)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ChartIdeals(benchmark::State& state) {
  GradingData g = grading_data(hirzebruch(1));
  GradedPresentation f = d_module_left(g, g.class_group().zero());
  for (auto _ : state) benchmark::DoNotOptimize(verify_quotient_dimension(g, f));
}
BENCHMARK(BM_ChartIdeals)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
