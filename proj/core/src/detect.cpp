#include <algorithm>
#include <cmath>
#include <string>

#include "hsindt/detect.hpp"
#include "hsindt/error.hpp"
#include "hsindt/stats.hpp"

namespace hsindt {

Image suppress_background(const Image& plane, double q) {
  if (plane.empty()) throw InvalidArgument("suppress_background: empty plane");
  if (!(q >= 0.0 && q < 100.0)) throw InvalidArgument("suppress_background: percentile must lie in [0, 100)");
  for (double v : plane.data()) {
    if (!std::isfinite(v)) throw InvalidArgument("suppress_background: plane contains non-finite values");
  }
  const double floor_value = percentile(plane.data(), q);
  Image out(plane.rows(), plane.cols());
  double hi = floor_value;
  for (std::size_t k = 0; k < plane.size(); ++k) {
    out.data()[k] = std::max(plane.data()[k], floor_value);
    hi = std::max(hi, out.data()[k]);
  }
  const double span = hi - floor_value;
  for (double& v : out.data()) v = span > 0.0 ? (v - floor_value) / span : 0.0;
  return out;
}

DetectionResult detect_damage(const Hypercube& cube, const DetectConfig& config) {
  if (cube.kind() == CubeKind::kRawRadiance) {
    throw InvalidArgument("detect_damage: expected a calibrated cube, got raw-radiance");
  }
  DetectionResult result;
  result.guide = first_principal_component(cube);
  if (config.denoise) {
    JbfParams params = JbfParams::for_guide(result.guide, config.sigma_d, config.range_fraction);
    result.denoised = joint_bilateral_filter(cube, result.guide, params);
  } else {
    result.denoised = cube;
  }
  result.feature = first_principal_component(result.denoised);
  result.saliency = saliency_map(result.feature, "pc1(" + result.denoised.provenance_string() + ")");
  result.threshold_mask = threshold_mask(result.saliency, config.threshold);
  result.regions = extract_regions(result.threshold_mask, config.min_area);
  result.mask = regions_to_mask(result.regions, cube.lines(), cube.samples());
  result.mask.set_threshold_used(result.threshold_mask.threshold_used());
  result.features.reserve(result.regions.size());
  for (std::size_t k = 0; k < result.regions.size(); ++k) {
    result.features.push_back(region_features(result.regions[k], k + 1));
  }
  return result;
}

}  // namespace hsindt
