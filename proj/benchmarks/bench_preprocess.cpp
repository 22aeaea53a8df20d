#include <benchmark/benchmark.h>

#include <random>

#include "hsindt/preprocess.hpp"

namespace {

hsindt::Hypercube random_reflectance(std::size_t lines, std::size_t samples, std::size_t bands) {
  hsindt::Hypercube cube(lines, samples, bands, hsindt::CubeKind::kReflectance);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (auto& v : cube.values()) v = u(rng);
  return cube;
}

void BM_Jbf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto cube = random_reflectance(n, n, 16);
  const auto guide = hsindt::first_principal_component(cube);
  const auto params = hsindt::JbfParams::for_guide(guide);
  for (auto _ : state) benchmark::DoNotOptimize(hsindt::joint_bilateral_filter(cube, guide, params));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cube.size()));
}
BENCHMARK(BM_Jbf)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Pca(benchmark::State& state) {
  const auto bands = static_cast<std::size_t>(state.range(0));
  const auto cube = random_reflectance(128, 128, bands);
  for (auto _ : state) benchmark::DoNotOptimize(hsindt::pca(cube, 3));
}
BENCHMARK(BM_Pca)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Snv(benchmark::State& state) {
  const auto cube = random_reflectance(128, 128, 64);
  for (auto _ : state) benchmark::DoNotOptimize(hsindt::snv_correct(cube, hsindt::SnvMode::kPerBand));
}
BENCHMARK(BM_Snv)->Unit(benchmark::kMillisecond);

void BM_Bin(benchmark::State& state) {
  const auto cube = random_reflectance(64, 1344, 32);
  for (auto _ : state) benchmark::DoNotOptimize(hsindt::bin(cube, 4, 1));
}
BENCHMARK(BM_Bin)->Unit(benchmark::kMillisecond);

}  // namespace
