#include "hsindt/stats.hpp"

#include <algorithm>
#include <cmath>

#include "hsindt/error.hpp"

namespace hsindt {

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("mean_std: empty input");
  const double ref = values.front();
  double sum = 0.0;
  for (double v : values) sum += v - ref;
  const double mean = ref + sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size()))};
}

double percentile(std::span<const double> values, double q) {
  if (values.empty()) throw InvalidArgument("percentile: empty input");
  if (!(q >= 0.0 && q <= 100.0)) throw InvalidArgument("percentile: q must lie in [0, 100]");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double rank = q / 100.0 * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = rank - static_cast<double>(lo);
  if (frac == 0.0) return sorted[lo];
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double median(std::span<const double> values) { return percentile(values, 50.0); }

Image gaussian_blur(const Image& image, double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("gaussian_blur: sigma must be > 0");
  const auto radius = static_cast<std::ptrdiff_t>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
  for (std::ptrdiff_t t = -radius; t <= radius; ++t) {
    kernel[static_cast<std::size_t>(t + radius)] = std::exp(-static_cast<double>(t * t) / (2.0 * sigma * sigma));
  }
  const auto rows = static_cast<std::ptrdiff_t>(image.rows());
  const auto cols = static_cast<std::ptrdiff_t>(image.cols());

  auto pass = [&](const Image& src, bool along_rows) {
    Image dst(src.rows(), src.cols());
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
      for (std::ptrdiff_t c = 0; c < cols; ++c) {
        const double ref = src(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        double acc = 0.0, norm = 0.0;
        for (std::ptrdiff_t t = -radius; t <= radius; ++t) {
          const std::ptrdiff_t rr = along_rows ? r : r + t;
          const std::ptrdiff_t cc = along_rows ? c + t : c;
          if (rr < 0 || rr >= rows || cc < 0 || cc >= cols) continue;
          const double w = kernel[static_cast<std::size_t>(t + radius)];
          acc += w * (src(static_cast<std::size_t>(rr), static_cast<std::size_t>(cc)) - ref);
          norm += w;
        }
        dst(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = ref + acc / norm;
      }
    }
    return dst;
  };
  return pass(pass(image, true), false);
}

}  // namespace hsindt
