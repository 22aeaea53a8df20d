#include <cmath>
#include <string>

#include "hsindt/error.hpp"
#include "hsindt/preprocess.hpp"

namespace hsindt {
namespace {

SnvResult per_band(const Hypercube& cube) {
  SnvResult result{cube, {SnvMode::kPerBand, std::vector<double>(cube.bands()), std::vector<double>(cube.bands())}};
  const double n = static_cast<double>(cube.valid_count());
  std::size_t first = 0;
  while (!cube.valid(first / cube.samples(), first % cube.samples())) ++first;
  for (std::size_t b = 0; b < cube.bands(); ++b) {
    const double ref = cube.at(first / cube.samples(), first % cube.samples(), b);
    double sum = 0.0;
    for (std::size_t i = 0; i < cube.lines(); ++i)
      for (std::size_t j = 0; j < cube.samples(); ++j)
        if (cube.valid(i, j)) sum += cube.at(i, j, b) - ref;
    const double mu = ref + sum / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < cube.lines(); ++i)
      for (std::size_t j = 0; j < cube.samples(); ++j)
        if (cube.valid(i, j)) ss += (cube.at(i, j, b) - mu) * (cube.at(i, j, b) - mu);
    const double sigma = std::sqrt(ss / n);
    if (!(sigma > 0.0)) {
      throw DegenerateInput("snv_correct: band " + std::to_string(b) + " has zero standard deviation over pixels");
    }
    result.stats.mu[b] = mu;
    result.stats.sigma[b] = sigma;
    for (std::size_t i = 0; i < cube.lines(); ++i)
      for (std::size_t j = 0; j < cube.samples(); ++j)
        result.cube.at(i, j, b) = cube.valid(i, j) ? (cube.at(i, j, b) - mu) / sigma : kMaskedValue;
  }
  return result;
}

SnvResult per_spectrum(const Hypercube& cube) {
  const std::size_t pixels = cube.plane_size();
  SnvResult result{cube, {SnvMode::kPerSpectrum, std::vector<double>(pixels), std::vector<double>(pixels)}};
  const double n = static_cast<double>(cube.bands());
  for (std::size_t i = 0; i < cube.lines(); ++i) {
    for (std::size_t j = 0; j < cube.samples(); ++j) {
      if (!cube.valid(i, j)) {
        for (std::size_t b = 0; b < cube.bands(); ++b) result.cube.at(i, j, b) = kMaskedValue;
        continue;
      }
      const double ref = cube.at(i, j, 0);
      double sum = 0.0;
      for (std::size_t b = 0; b < cube.bands(); ++b) sum += cube.at(i, j, b) - ref;
      const double mu = ref + sum / n;
      double ss = 0.0;
      for (std::size_t b = 0; b < cube.bands(); ++b) ss += (cube.at(i, j, b) - mu) * (cube.at(i, j, b) - mu);
      const double sigma = std::sqrt(ss / n);
      if (!(sigma > 0.0)) {
        throw DegenerateInput("snv_correct: pixel (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") has a flat spectrum");
      }
      result.stats.mu[i * cube.samples() + j] = mu;
      result.stats.sigma[i * cube.samples() + j] = sigma;
      for (std::size_t b = 0; b < cube.bands(); ++b) result.cube.at(i, j, b) = (cube.at(i, j, b) - mu) / sigma;
    }
  }
  return result;
}

}  // namespace

SnvResult snv_correct(const Hypercube& cube, SnvMode mode) {
  if (cube.kind() != CubeKind::kReflectance) {
    throw InvalidArgument("snv_correct: expected a reflectance cube, got " + std::string(to_string(cube.kind())));
  }
  if (cube.valid_count() == 0) throw DegenerateInput("snv_correct: no valid pixels");
  SnvResult result = mode == SnvMode::kPerBand ? per_band(cube) : per_spectrum(cube);
  result.cube.set_kind(CubeKind::kSnvCorrected);
  result.cube.append_provenance("snv", mode == SnvMode::kPerBand ? "mode=per-band" : "mode=per-spectrum");
  return result;
}

}  // namespace hsindt
