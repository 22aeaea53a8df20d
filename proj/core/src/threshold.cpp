#include <algorithm>
#include <array>
#include <cmath>

#include "hsindt/detect.hpp"
#include "hsindt/error.hpp"

namespace hsindt {

double otsu_threshold(const Image& map) {
  constexpr std::size_t kBins = 256;
  std::array<double, kBins> hist{};
  for (double v : map.data()) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    const auto bin = std::min<std::size_t>(kBins - 1, static_cast<std::size_t>(clamped * kBins));
    hist[bin] += 1.0;
  }
  const double total = static_cast<double>(map.size());
  double total_moment = 0.0;
  for (std::size_t k = 0; k < kBins; ++k) total_moment += hist[k] * (static_cast<double>(k) + 0.5);

  std::array<double, kBins> between{};
  double w0 = 0.0, m0 = 0.0;
  for (std::size_t k = 1; k < kBins; ++k) {
    w0 += hist[k - 1];
    m0 += hist[k - 1] * (static_cast<double>(k - 1) + 0.5);
    const double w1 = total - w0;
    if (w0 == 0.0 || w1 == 0.0) continue;
    const double mu0 = m0 / w0;
    const double mu1 = (total_moment - m0) / w1;
    between[k] = (w0 / total) * (w1 / total) * (mu0 - mu1) * (mu0 - mu1);
  }
  const double best = *std::max_element(between.begin() + 1, between.end());
  std::size_t first = 0, last = 0;
  for (std::size_t k = 1; k < kBins; ++k) {
    if (between[k] >= best * (1.0 - 1e-12)) {
      if (first == 0) first = k;
      last = k;
    } else if (first != 0) {
      break;
    }
  }
  return static_cast<double>((first + last) / 2) / static_cast<double>(kBins);
}

BinaryMask threshold_mask(const SaliencyMap& map, ThresholdPolicy policy) {
  double t = policy.value;
  if (policy.kind == ThresholdPolicy::Kind::kFixed) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("threshold_mask: fixed threshold must lie in [0, 1]");
  } else {
    t = otsu_threshold(map.values);
  }
  BinaryMask mask(map.values.rows(), map.values.cols());
  for (std::size_t k = 0; k < map.values.size(); ++k) mask.data()[k] = map.values.data()[k] >= t ? 1 : 0;
  mask.set_threshold_used(t);
  return mask;
}

}  // namespace hsindt
