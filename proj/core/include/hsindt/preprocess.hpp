#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hsindt/hypercube.hpp"
#include "hsindt/image.hpp"

namespace hsindt {

// ---------------------------------------------------------------------------
// Reflectance calibration
// ---------------------------------------------------------------------------

// Per sensor position reference: J samples x B bands, stored j * B + b.
class ReferenceFrame {
 public:
  ReferenceFrame() = default;
  ReferenceFrame(std::size_t samples, std::size_t bands, double fill = 0.0)
      : samples_(samples), bands_(bands), values_(samples * bands, fill) {}

  std::size_t samples() const { return samples_; }
  std::size_t bands() const { return bands_; }
  double operator()(std::size_t j, std::size_t b) const { return values_[j * bands_ + b]; }
  double& operator()(std::size_t j, std::size_t b) { return values_[j * bands_ + b]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t samples_ = 0;
  std::size_t bands_ = 0;
  std::vector<double> values_;
};

// Arithmetic mean over the lines of a multi-line reference recording.
ReferenceFrame average_lines(const Hypercube& recording);

struct CalibrationRefs {
  ReferenceFrame dark;
  ReferenceFrame white;
};

CalibrationRefs make_calibration_refs(const Hypercube& dark_recording, const Hypercube& white_recording);

struct DeadPosition {
  std::size_t sample;
  std::size_t band;
  bool operator==(const DeadPosition&) const = default;
};

struct CalibrationResult {
  Hypercube cube;
  // Sensor positions with white <= dark. Their values are set to
  // kMaskedValue and every pixel in the affected column is marked invalid.
  std::vector<DeadPosition> dead;
};

inline constexpr double kMaskedValue = 0.0;

// r = (s - d) / (w - d), per pixel and band; not clipped.
CalibrationResult calibrate(const Hypercube& raw, const CalibrationRefs& refs);

// ---------------------------------------------------------------------------
// Binning
// ---------------------------------------------------------------------------

// Averages non-overlapping blocks of `spatial_factor` samples by
// `spectral_factor` bands; trailing remainders are dropped.
Hypercube bin(const Hypercube& cube, std::size_t spatial_factor, std::size_t spectral_factor);

// ---------------------------------------------------------------------------
// Standard normal variate
// ---------------------------------------------------------------------------

enum class SnvMode {
  kPerBand,      // each band standardized over all valid pixels
  kPerSpectrum,  // each pixel spectrum standardized by its own mean/std
};

struct SnvStats {
  SnvMode mode = SnvMode::kPerBand;
  // Length B for kPerBand, I*J (row-major pixels) for kPerSpectrum.
  // Invalid pixels carry mu = sigma = 0.
  std::vector<double> mu;
  std::vector<double> sigma;
};

struct SnvResult {
  Hypercube cube;
  SnvStats stats;
};

// Requires a reflectance cube. Throws DegenerateInput naming the band or pixel
// with zero standard deviation.
SnvResult snv_correct(const Hypercube& cube, SnvMode mode = SnvMode::kPerBand);

// ---------------------------------------------------------------------------
// Principal components
// ---------------------------------------------------------------------------

struct PcaModel {
  std::vector<double> mean_spectrum;
  // k orthonormal loading vectors of length B; the largest-magnitude
  // coefficient of each is positive.
  std::vector<std::vector<double>> components;
  // Population covariance eigenvalues, non-increasing.
  std::vector<double> explained_variance;

  std::size_t size() const { return components.size(); }
};

struct PcaResult {
  PcaModel model;
  // k score planes as a feature cube (band p = scores on component p).
  Hypercube scores;
};

PcaResult pca(const Hypercube& cube, std::size_t components);

// Score plane of the first principal component.
Image first_principal_component(const Hypercube& cube);

// ---------------------------------------------------------------------------
// Joint bilateral filter
// ---------------------------------------------------------------------------

enum class JbfWindowRule {
  // Square window with half-width ceil(2 sigma_d).
  kTwoSigmaSpatial,
  // (2 sigma_d + 1) rows x (2 sigma_r + 1) columns; integer parameters only.
  kLiteral,
};

struct JbfParams {
  double sigma_d = 2.0;
  double sigma_r = 0.1;
  JbfWindowRule window_rule = JbfWindowRule::kTwoSigmaSpatial;

  // Throws InvalidArgument unless both sigmas are > 0 (and integral under kLiteral).
  void validate() const;
  std::size_t half_rows() const;
  std::size_t half_cols() const;
  std::size_t window_rows() const { return 2 * half_rows() + 1; }
  std::size_t window_cols() const { return 2 * half_cols() + 1; }

  // sigma_d = 2 and sigma_r = range_fraction * (max - min) of the guide
  // (1.0 when the guide is constant).
  static JbfParams for_guide(const Image& guide, double sigma_d = 2.0, double range_fraction = 0.1);
};

struct JbfTap {
  std::size_t row;
  std::size_t col;
  double weight;  // normalized: taps of one pixel sum to 1
};

// Normalized weights the filter applies at (row, col). Taps outside the image
// or on invalid pixels (validity != nullptr and entry 0) are dropped.
std::vector<JbfTap> jbf_weights(const Image& guide, const JbfParams& params, std::size_t row, std::size_t col,
                                const std::vector<std::uint8_t>* validity = nullptr);

// Filters every band with the same guide-derived weights. Invalid pixels pass
// through unchanged.
Hypercube joint_bilateral_filter(const Hypercube& cube, const Image& guide, const JbfParams& params);

// Guide = first principal component score plane of `cube`.
Hypercube joint_bilateral_filter(const Hypercube& cube, const JbfParams& params);

}  // namespace hsindt
