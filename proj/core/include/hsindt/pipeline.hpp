#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsindt/detect.hpp"
#include "hsindt/envi.hpp"
#include "hsindt/error.hpp"
#include "hsindt/evaluate.hpp"
#include "hsindt/geometry.hpp"
#include "hsindt/hypercube.hpp"
#include "hsindt/preprocess.hpp"
#include "hsindt/profile.hpp"
#include "hsindt/report.hpp"

namespace hsindt {

enum class Stage { kCalibrate, kBin, kSnv, kJbf, kPca, kSaliency, kThreshold, kRegions, kEvaluate, kStitch, kTilt, kProfile };

std::string_view to_string(Stage stage);
// Throws ConfigError for an unknown name.
Stage parse_stage(std::string_view name);

// Malformed or inconsistent pipeline configuration.
class ConfigError : public FormatError {
 public:
  using FormatError::FormatError;
};

// A stage failed while running.
class StageError : public Error {
 public:
  StageError(Stage stage, const std::string& message);
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

struct PipelineConfig {
  std::filesystem::path input;
  std::optional<CubeKind> input_kind;  // overrides the kind recorded in the header
  std::filesystem::path output = ".";
  std::filesystem::path dark;
  std::filesystem::path white;
  std::filesystem::path truth;
  ReportFormat format = ReportFormat::kCsv;
  EnviDataType cube_type = EnviDataType::kFloat64;
  std::vector<Stage> stages;

  std::size_t bin_spatial = 1;
  std::size_t bin_spectral = 1;
  SnvMode snv_mode = SnvMode::kPerBand;
  double jbf_sigma_d = 2.0;
  double jbf_range_fraction = 0.1;
  std::optional<double> jbf_sigma_r;
  JbfWindowRule jbf_window = JbfWindowRule::kTwoSigmaSpatial;
  std::size_t pca_components = 3;
  double suppress_percentile = kDefaultBackgroundPercentile;
  ThresholdPolicy threshold{};
  std::size_t min_area = 10;
  std::string sample_id = "sample";
  std::string impactor;
  std::filesystem::path stitch_with;
  StitchSpec stitch{};
  double tilt_theta_deg = 0.0;
  std::vector<Roi> rois;
  bool profile_png = true;

  // Key/value text; relative paths resolve against `base_dir`. Runs
  // validate() before returning.
  static PipelineConfig parse(std::string_view text, const std::filesystem::path& base_dir = {});
  static PipelineConfig load(const std::filesystem::path& path);

  // Static checks: non-empty stage list, stage dependencies, required paths
  // and parameters, and the cube kind sequence when the starting kind is
  // known (input.kind, or raw when the list calibrates). Throws ConfigError.
  void validate() const;
};

struct PipelineResult {
  Hypercube cube;  // state after the last cube-producing stage
  std::optional<Image> feature;
  std::optional<SaliencyMap> saliency;
  std::optional<BinaryMask> threshold_mask;
  std::optional<BinaryMask> mask;
  std::vector<RegionFeatures> regions;
  std::optional<EvalResult> evaluation;
  std::vector<SpectralProfile> profiles;
  std::vector<std::filesystem::path> artifacts;
};

// Runs the stages in order, writing artifacts into config.output and one
// summary line per stage to `log`. Missing inputs throw ConfigError; a stage
// failure throws StageError.
PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& log);

}  // namespace hsindt
