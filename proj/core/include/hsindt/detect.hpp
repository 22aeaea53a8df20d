#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hsindt/hypercube.hpp"
#include "hsindt/image.hpp"
#include "hsindt/preprocess.hpp"

namespace hsindt {

// ---------------------------------------------------------------------------
// Saliency
// ---------------------------------------------------------------------------

struct SaliencyMap {
  Image values;        // in [0, 1]
  std::string source;  // what the guide image was derived from
};

inline constexpr double kSaliencySmoothingSigma = 2.0;
inline constexpr double kSaliencyPercentile = 99.5;

// Median-deviation saliency:
//   1. Gaussian-smooth the guide (sigma 2, truncated/renormalized borders);
//   2. take |smoothed - median(smoothed)|;
//   3. divide by the 99.5th percentile of those deviations and clip to 1.
// When that percentile is zero the maximum deviation is used instead; a
// constant guide yields an all-zero map. Throws InvalidArgument on non-finite input.
SaliencyMap saliency_map(const Image& guide, std::string source = {});

// ---------------------------------------------------------------------------
// Thresholding
// ---------------------------------------------------------------------------

struct ThresholdPolicy {
  enum class Kind { kFixed, kOtsu };
  Kind kind = Kind::kFixed;
  double value = 0.5;  // used by kFixed

  static ThresholdPolicy fixed(double t) { return {Kind::kFixed, t}; }
  static ThresholdPolicy otsu() { return {Kind::kOtsu, 0.0}; }
};

// Otsu cut on a 256-bin histogram of [0, 1] values. Candidate thresholds are
// k / 256, k = 1..255; ties resolve to the middle of the maximizing run.
double otsu_threshold(const Image& map);

// mask = map >= t. Throws InvalidArgument for a fixed t outside [0, 1].
BinaryMask threshold_mask(const SaliencyMap& map, ThresholdPolicy policy = {});

// ---------------------------------------------------------------------------
// Regions and shape features
// ---------------------------------------------------------------------------

struct Pixel {
  std::size_t row;
  std::size_t col;
  auto operator<=>(const Pixel&) const = default;
};

// Pixels of one connected component in row-major order.
using Region = std::vector<Pixel>;

// 8-connected components with at least `min_area` pixels, ordered by their
// first pixel in row-major scan order.
std::vector<Region> extract_regions(const BinaryMask& mask, std::size_t min_area = 1);

// Rasterizes regions back to a mask.
BinaryMask regions_to_mask(const std::vector<Region>& regions, std::size_t rows, std::size_t cols);

struct RegionFeatures {
  std::size_t label = 0;
  double area = 0.0;       // pixels
  double perimeter = 0.0;  // pixels
  double centroid_row = 0.0;
  double centroid_col = 0.0;
  double major_axis = 0.0;   // moment-equivalent ellipse, pixels
  double minor_axis = 0.0;
  double orientation = 0.0;  // radians, from the column axis toward increasing row
  double roundness = 0.0;    // 4 pi a / p^2
  double rmm = 0.0;          // major / minor
};

// Outer-boundary length of a region. The 8-connected boundary chain is
// measured with corner-count weights (0.980 per isothetic step, 1.406 per
// diagonal step, -0.091 per direction change), offset by pi for the half
// pixel between boundary pixel centres and the pixel edges, and floored at
// the perimeter of the equal-area disk 2 sqrt(pi a). Roundness therefore
// never exceeds 1.
double region_perimeter(const Region& region);

// Throws InvalidArgument for an empty region. Second central moments treat
// each pixel as a unit square (+1/12 on the diagonal terms); axis lengths
// are 4 sqrt(eigenvalue).
RegionFeatures region_features(const Region& region, std::size_t label = 0);

// ---------------------------------------------------------------------------
// Feature-map background suppression
// ---------------------------------------------------------------------------

inline constexpr double kDefaultBackgroundPercentile = 75.0;

// Clamps values below the q-th percentile up to it, then min-max rescales to
// [0, 1]. A plane that is constant after clamping maps to zeros.
Image suppress_background(const Image& plane, double percentile = kDefaultBackgroundPercentile);

// ---------------------------------------------------------------------------
// Full detection chain
// ---------------------------------------------------------------------------

struct DetectConfig {
  bool denoise = true;
  double sigma_d = 2.0;
  // sigma_r = range_fraction * dynamic range of the PC1 guide.
  double range_fraction = 0.1;
  ThresholdPolicy threshold{};
  std::size_t min_area = 10;
};

struct DetectionResult {
  Image guide;          // PC1 of the input cube (JBF guide)
  Hypercube denoised;   // JBF output (copy of the input when denoise = false)
  Image feature;        // PC1 of the denoised cube
  SaliencyMap saliency;
  BinaryMask threshold_mask;  // raw threshold output
  BinaryMask mask;            // union of retained regions
  std::vector<Region> regions;
  std::vector<RegionFeatures> features;
};

// JBF(PC1 guide) -> PCA -> saliency -> threshold -> regions -> features.
// Rejects raw-radiance input.
DetectionResult detect_damage(const Hypercube& cube, const DetectConfig& config = {});

}  // namespace hsindt
