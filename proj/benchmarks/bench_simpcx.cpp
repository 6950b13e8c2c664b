#include <benchmark/benchmark.h>

#include "simpcx/catalog.hpp"
#include "simpcx/homology.hpp"
#include "simpcx/moves.hpp"
#include "simpcx/product_subdivision.hpp"

using namespace simpcx;

namespace {

void BM_Homology(benchmark::State& state, const char* name, SnfMethod method) {
  const auto& k = get(name).complex;
  for (auto _ : state) benchmark::DoNotOptimize(homology(k, method));
}
BENCHMARK_CAPTURE(BM_Homology, cp2_min_pivot, "CP2_10", SnfMethod::min_pivot);
BENCHMARK_CAPTURE(BM_Homology, cp2_bezout, "CP2_10", SnfMethod::bezout_echelon);
BENCHMARK_CAPTURE(BM_Homology, s2xs2_16_min_pivot, "S2xS2_16", SnfMethod::min_pivot);

void BM_AutomorphismGroup(benchmark::State& state, const char* name) {
  const auto& k = get(name).complex;
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(k).order());
}
BENCHMARK_CAPTURE(BM_AutomorphismGroup, cp2, "CP2_10");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, s2xs2_12, "S2xS2_12");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, s2xs2_16, "S2xS2_16");

void BM_VerifySubdivision(benchmark::State& state) {
  const auto& k = get("S2xS2_16").complex;
  const auto p = build_product_cell_complex();
  for (auto _ : state) benchmark::DoNotOptimize(verify_subdivision(k, p).certified);
}
BENCHMARK(BM_VerifySubdivision)->Unit(benchmark::kMillisecond);

void BM_SubdivisionSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_equivariant_pure_subdivisions().results.size());
}
BENCHMARK(BM_SubdivisionSearch)->Unit(benchmark::kMillisecond);

void BM_FlipReduction(benchmark::State& state) {
  const auto lk = link(get("S2xS2_12").complex, Simplex::parse("x12"));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_boundary_simplex(lk, 0).moves_used);
}
BENCHMARK(BM_FlipReduction)->Unit(benchmark::kMillisecond);

void BM_FindProperMoves(benchmark::State& state) {
  const auto& k = get("CP2_10").complex;
  for (auto _ : state) benchmark::DoNotOptimize(find_proper_moves(k).size());
}
BENCHMARK(BM_FindProperMoves);

}  // namespace
BENCHMARK_MAIN();
