#include <algorithm>
#include <cmath>

#include "hsindt/detect.hpp"
#include "hsindt/error.hpp"
#include "hsindt/stats.hpp"

namespace hsindt {

SaliencyMap saliency_map(const Image& guide, std::string source) {
  if (guide.empty()) throw InvalidArgument("saliency_map: empty guide");
  for (double v : guide.data()) {
    if (!std::isfinite(v)) throw InvalidArgument("saliency_map: guide contains non-finite values");
  }
  Image smoothed = gaussian_blur(guide, kSaliencySmoothingSigma);
  const double centre = median(smoothed.data());
  Image deviation(smoothed.rows(), smoothed.cols());
  for (std::size_t k = 0; k < smoothed.size(); ++k) deviation.data()[k] = std::fabs(smoothed.data()[k] - centre);

  double scale = percentile(deviation.data(), kSaliencyPercentile);
  if (!(scale > 0.0)) scale = *std::max_element(deviation.data().begin(), deviation.data().end());

  Image values(guide.rows(), guide.cols());
  if (scale > 0.0) {
    for (std::size_t k = 0; k < values.size(); ++k) values.data()[k] = std::min(deviation.data()[k] / scale, 1.0);
  }
  return {std::move(values), std::move(source)};
}

}  // namespace hsindt
