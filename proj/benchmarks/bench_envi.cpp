#include <benchmark/benchmark.h>

#include <filesystem>

#include "hsindt/envi.hpp"

namespace {

void BM_EnviRoundTrip(benchmark::State& state) {
  const auto interleave = static_cast<hsindt::Interleave>(state.range(0));
  hsindt::Hypercube cube(128, 128, 64, hsindt::CubeKind::kReflectance);
  double x = 0.0;
  for (auto& v : cube.values()) v = (x += 0.001);
  const auto path = std::filesystem::temp_directory_path() / "hsindt_bench.hdr";
  for (auto _ : state) {
    hsindt::write_envi(cube, path, {interleave, hsindt::EnviDataType::kFloat32});
    benchmark::DoNotOptimize(hsindt::read_envi(path));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(cube.size() * sizeof(float)));
}
BENCHMARK(BM_EnviRoundTrip)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
