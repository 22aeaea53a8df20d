#include <benchmark/benchmark.h>

#include "hsindt/detect.hpp"
#include "hsindt/synth.hpp"

namespace {

hsindt::Hypercube scene_cube() {
  hsindt::SceneSpec spec;
  spec.noise_sigma = 0.01;
  spec.damages.push_back({hsindt::DamageShape::kEllipse, 40, 40, 14, 12, 0, 0.6});
  spec.damages.push_back({hsindt::DamageShape::kBar, 90, 100, 84, 10, 15, 0.6});
  const auto scene = hsindt::generate_scene(spec);
  return hsindt::calibrate(scene.raw, scene.refs).cube;
}

void BM_DetectDamage(benchmark::State& state) {
  const auto cube = scene_cube();
  for (auto _ : state) benchmark::DoNotOptimize(hsindt::detect_damage(cube));
}
BENCHMARK(BM_DetectDamage)->Unit(benchmark::kMillisecond);

void BM_Saliency(benchmark::State& state) {
  const auto pc1 = hsindt::first_principal_component(scene_cube());
  for (auto _ : state) benchmark::DoNotOptimize(hsindt::saliency_map(pc1));
}
BENCHMARK(BM_Saliency)->Unit(benchmark::kMillisecond);

void BM_GenerateScene(benchmark::State& state) {
  hsindt::SceneSpec spec;
  spec.noise_sigma = 0.01;
  for (auto _ : state) benchmark::DoNotOptimize(hsindt::generate_scene(spec));
}
BENCHMARK(BM_GenerateScene)->Unit(benchmark::kMillisecond);

}  // namespace
