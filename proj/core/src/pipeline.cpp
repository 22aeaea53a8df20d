#include "hsindt/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hsindt/chart.hpp"
#include "hsindt/keyvalue.hpp"
#include "hsindt/pnm.hpp"
#include "numfmt.hpp"

namespace hsindt {
namespace {

constexpr std::array<std::string_view, 12> kStageNames = {
    "calibrate", "bin", "snv", "jbf", "pca", "saliency", "threshold", "regions", "evaluate", "stitch", "tilt", "profile",
};

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
  std::filesystem::path p(value);
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim_copy(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<double, double> value_range(const Image& img) {
  if (img.empty()) return {0.0, 1.0};
  const auto [lo, hi] = std::minmax_element(img.data().begin(), img.data().end());
  return {*lo, *hi > *lo ? *hi : *lo + 1.0};
}

BinaryMask load_truth(const std::filesystem::path& path) {
  if (path.extension() == ".pgm") return read_pgm_mask(path);
  const Hypercube cube = read_envi(path);
  BinaryMask mask(cube.lines(), cube.samples());
  for (std::size_t i = 0; i < cube.lines(); ++i)
    for (std::size_t j = 0; j < cube.samples(); ++j) mask.set(i, j, cube.at(i, j, 0) != 0.0);
  return mask;
}

Hypercube with_kind(const Hypercube& cube, CubeKind kind) {
  Hypercube out(cube.lines(), cube.samples(), cube.bands(), std::vector<double>(cube.values().begin(), cube.values().end()),
                cube.wavelengths(), kind);
  out.set_provenance(cube.provenance());
  if (cube.has_validity_mask()) out.set_validity(cube.validity());
  out.metadata() = cube.metadata();
  return out;
}

std::string format_crossings(const SpectralProfile& a, const SpectralProfile& b, const ProfileCrossings& c,
                             const ProfileSeparation& s) {
  std::string out = "roi_a,roi_b,type,wavelength_nm\n";
  for (double w : c.crossings) out += a.name + "," + b.name + ",crossing," + detail::num6(w) + "\n";
  for (double w : c.tangencies) out += a.name + "," + b.name + ",tangency," + detail::num6(w) + "\n";
  if (!s.score.empty()) {
    const double w = a.wavelengths.empty() ? static_cast<double>(s.best_band) : a.wavelengths[s.best_band];
    out += a.name + "," + b.name + ",best_separation," + detail::num6(w) + "\n";
  }
  return out;
}

}  // namespace

std::string_view to_string(Stage stage) { return kStageNames[static_cast<std::size_t>(stage)]; }

Stage parse_stage(std::string_view name) {
  for (std::size_t k = 0; k < kStageNames.size(); ++k) {
    if (kStageNames[k] == name) return static_cast<Stage>(k);
  }
  throw ConfigError("unknown stage '" + std::string(name) + "'");
}

StageError::StageError(Stage stage, const std::string& message)
    : Error("stage '" + std::string(to_string(stage)) + "' failed: " + message), stage_(stage) {}

PipelineConfig PipelineConfig::parse(std::string_view text, const std::filesystem::path& base_dir) {
  KeyValueFile kv;
  try {
    kv = KeyValueFile::parse(text);
    kv.require_known({"input", "input.kind", "output", "dark", "white", "truth", "format", "cube.type", "stages",
                      "bin.spatial", "bin.spectral", "snv.mode", "jbf.sigma_d", "jbf.range_fraction", "jbf.sigma_r",
                      "jbf.window", "pca.k", "pca.suppress_percentile", "threshold.policy", "threshold.value",
                      "regions.min_area", "evaluate.sample", "evaluate.impactor", "stitch.with", "stitch.overlap",
                      "stitch.blend", "tilt.theta", "profile.roi", "profile.png"});
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }

  PipelineConfig c;
  try {
    if (auto v = kv.get("input")) c.input = resolve(base_dir, *v);
    if (auto v = kv.get("input.kind")) c.input_kind = parse_cube_kind(*v);
    if (auto v = kv.get("output")) c.output = resolve(base_dir, *v);
    else if (!base_dir.empty()) c.output = base_dir;
    if (auto v = kv.get("dark")) c.dark = resolve(base_dir, *v);
    if (auto v = kv.get("white")) c.white = resolve(base_dir, *v);
    if (auto v = kv.get("truth")) c.truth = resolve(base_dir, *v);
    if (auto v = kv.get("format")) c.format = parse_report_format(*v);
    if (auto v = kv.get("cube.type")) {
      if (*v == "float32") c.cube_type = EnviDataType::kFloat32;
      else if (*v == "float64") c.cube_type = EnviDataType::kFloat64;
      else throw ConfigError("cube.type must be float32 or float64, got '" + *v + "'");
    }
    if (auto v = kv.get("stages")) {
      for (const auto& name : split_list(*v)) c.stages.push_back(parse_stage(name));
    }
    c.bin_spatial = kv.get_size("bin.spatial", c.bin_spatial);
    c.bin_spectral = kv.get_size("bin.spectral", c.bin_spectral);
    if (auto v = kv.get("snv.mode")) {
      if (*v == "per-band") c.snv_mode = SnvMode::kPerBand;
      else if (*v == "per-spectrum") c.snv_mode = SnvMode::kPerSpectrum;
      else throw ConfigError("snv.mode must be per-band or per-spectrum, got '" + *v + "'");
    }
    c.jbf_sigma_d = kv.get_double("jbf.sigma_d", c.jbf_sigma_d);
    c.jbf_range_fraction = kv.get_double("jbf.range_fraction", c.jbf_range_fraction);
    if (kv.has("jbf.sigma_r")) c.jbf_sigma_r = kv.get_double("jbf.sigma_r", 0.0);
    if (auto v = kv.get("jbf.window")) {
      if (*v == "two-sigma") c.jbf_window = JbfWindowRule::kTwoSigmaSpatial;
      else if (*v == "literal") c.jbf_window = JbfWindowRule::kLiteral;
      else throw ConfigError("jbf.window must be two-sigma or literal, got '" + *v + "'");
    }
    c.pca_components = kv.get_size("pca.k", c.pca_components);
    c.suppress_percentile = kv.get_double("pca.suppress_percentile", c.suppress_percentile);
    if (auto v = kv.get("threshold.policy")) {
      if (*v == "fixed") c.threshold = ThresholdPolicy::fixed(kv.get_double("threshold.value", 0.5));
      else if (*v == "otsu") c.threshold = ThresholdPolicy::otsu();
      else throw ConfigError("threshold.policy must be fixed or otsu, got '" + *v + "'");
    } else {
      c.threshold = ThresholdPolicy::fixed(kv.get_double("threshold.value", 0.5));
    }
    c.min_area = kv.get_size("regions.min_area", c.min_area);
    c.sample_id = kv.get_string("evaluate.sample", c.sample_id);
    c.impactor = kv.get_string("evaluate.impactor", c.impactor);
    if (auto v = kv.get("stitch.with")) c.stitch_with = resolve(base_dir, *v);
    c.stitch.overlap = kv.get_size("stitch.overlap", 0);
    if (auto v = kv.get("stitch.blend")) {
      if (*v == "average") c.stitch.blend = Blend::kAverage;
      else if (*v == "take-first") c.stitch.blend = Blend::kTakeFirst;
      else throw ConfigError("stitch.blend must be average or take-first, got '" + *v + "'");
    }
    c.tilt_theta_deg = kv.get_double("tilt.theta", c.tilt_theta_deg);
    for (const auto& roi : kv.get_all("profile.roi")) c.rois.push_back(parse_roi(roi));
    c.profile_png = kv.get_bool("profile.png", c.profile_png);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  c.validate();
  return c;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  std::string text;
  {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot read config '" + path.string() + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return parse(text, path.parent_path());
}

void PipelineConfig::validate() const {
  if (stages.empty()) throw ConfigError("no stages given (set 'stages = name, name, ...')");
  if (input.empty()) throw ConfigError("missing 'input'");

  std::optional<CubeKind> kind = input_kind;
  if (!kind && std::find(stages.begin(), stages.end(), Stage::kCalibrate) != stages.end()) {
    kind = CubeKind::kRawRadiance;
  }
  bool saliency = false;
  bool thresholded = false;
  auto fail = [](Stage s, const std::string& msg) { throw ConfigError("stage '" + std::string(to_string(s)) + "': " + msg); };
  auto need_kind = [&](Stage s, CubeKind required) {
    if (kind && *kind != required) {
      fail(s, "needs a " + std::string(to_string(required)) + " cube but the pipeline holds " +
                  std::string(to_string(*kind)) + " at this point");
    }
  };

  for (Stage s : stages) {
    switch (s) {
      case Stage::kCalibrate:
        need_kind(s, CubeKind::kRawRadiance);
        if (dark.empty() || white.empty()) fail(s, "needs 'dark' and 'white' reference recordings");
        kind = CubeKind::kReflectance;
        break;
      case Stage::kBin:
        if (bin_spatial == 0 || bin_spectral == 0) fail(s, "binning factors must be >= 1");
        break;
      case Stage::kSnv:
        need_kind(s, CubeKind::kReflectance);
        kind = CubeKind::kSnvCorrected;
        break;
      case Stage::kJbf:
        if (!(jbf_sigma_d > 0.0) || !(jbf_range_fraction > 0.0)) fail(s, "sigma_d and range_fraction must be > 0");
        if (jbf_sigma_r && !(*jbf_sigma_r > 0.0)) fail(s, "sigma_r must be > 0");
        break;
      case Stage::kPca:
        if (pca_components == 0) fail(s, "pca.k must be >= 1");
        kind = CubeKind::kFeature;
        break;
      case Stage::kSaliency:
        saliency = true;
        break;
      case Stage::kThreshold:
        if (!saliency) fail(s, "needs a preceding 'saliency' stage");
        if (threshold.kind == ThresholdPolicy::Kind::kFixed && !(threshold.value >= 0.0 && threshold.value <= 1.0)) {
          fail(s, "threshold.value must lie in [0, 1]");
        }
        thresholded = true;
        break;
      case Stage::kRegions:
        if (!thresholded) fail(s, "needs a preceding 'threshold' stage");
        break;
      case Stage::kEvaluate:
        if (!thresholded) fail(s, "needs a preceding 'threshold' stage");
        if (truth.empty()) fail(s, "needs a 'truth' mask");
        break;
      case Stage::kStitch:
        if (stitch_with.empty()) fail(s, "needs 'stitch.with'");
        break;
      case Stage::kTilt:
        if (!(tilt_theta_deg >= 0.0 && tilt_theta_deg < 90.0)) fail(s, "tilt.theta must lie in [0, 90)");
        break;
      case Stage::kProfile:
        if (rois.empty()) fail(s, "needs at least one 'profile.roi'");
        break;
    }
  }
}

PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& log) {
  config.validate();
  for (const auto* p : {&config.input, &config.dark, &config.white, &config.truth, &config.stitch_with}) {
    if (!p->empty() && !std::filesystem::exists(*p)) throw ConfigError("input not found: '" + p->string() + "'");
  }
  std::error_code ec;
  std::filesystem::create_directories(config.output, ec);
  if (ec) throw ConfigError("cannot create output directory '" + config.output.string() + "': " + ec.message());

  PipelineResult r;
  try {
    r.cube = read_envi(config.input);
  } catch (const Error& e) {
    throw ConfigError("cannot read input: " + std::string(e.what()));
  }
  if (config.input_kind && *config.input_kind != r.cube.kind()) r.cube = with_kind(r.cube, *config.input_kind);
  log << "load: " << config.input.string() << " " << r.cube.lines() << "x" << r.cube.samples() << "x" << r.cube.bands()
      << " " << to_string(r.cube.kind()) << "\n";

  const EnviWriteOptions cube_options{Interleave::kBsq, config.cube_type, ByteOrder::kLittle};
  auto artifact = [&](const std::string& name) {
    const auto p = config.output / name;
    r.artifacts.push_back(p);
    return p;
  };
  auto save_cube = [&](const Hypercube& cube, const std::string& stem) {
    const auto files = write_envi(cube, config.output / (stem + ".hdr"), cube_options);
    r.artifacts.push_back(files.header);
    r.artifacts.push_back(files.data);
  };
  const std::string ext = config.format == ReportFormat::kJson ? ".json" : ".csv";
  auto current_feature = [&]() {
    if (r.cube.kind() == CubeKind::kFeature) return slice_band(r.cube, 0);
    return first_principal_component(r.cube);
  };

  for (Stage stage : config.stages) {
    try {
      std::ostringstream line;
      line << to_string(stage) << ": ";
      switch (stage) {
        case Stage::kCalibrate: {
          const auto refs = make_calibration_refs(read_envi(config.dark), read_envi(config.white));
          auto cal = calibrate(r.cube, refs);
          r.cube = std::move(cal.cube);
          save_cube(r.cube, "reflectance");
          line << "reflectance " << r.cube.lines() << "x" << r.cube.samples() << "x" << r.cube.bands() << ", "
               << cal.dead.size() << " dead positions";
          break;
        }
        case Stage::kBin:
          r.cube = bin(r.cube, config.bin_spatial, config.bin_spectral);
          save_cube(r.cube, "binned");
          line << "factors " << config.bin_spatial << "/" << config.bin_spectral << " -> " << r.cube.samples()
               << " samples, " << r.cube.bands() << " bands";
          break;
        case Stage::kSnv:
          r.cube = snv_correct(r.cube, config.snv_mode).cube;
          save_cube(r.cube, "snv");
          line << (config.snv_mode == SnvMode::kPerBand ? "per-band" : "per-spectrum");
          break;
        case Stage::kJbf: {
          const Image guide = current_feature();
          JbfParams params = JbfParams::for_guide(guide, config.jbf_sigma_d, config.jbf_range_fraction);
          if (config.jbf_sigma_r) params.sigma_r = *config.jbf_sigma_r;
          params.window_rule = config.jbf_window;
          r.cube = joint_bilateral_filter(r.cube, guide, params);
          save_cube(r.cube, "denoised");
          line << "sigma_d " << detail::num6(params.sigma_d) << ", sigma_r " << detail::num6(params.sigma_r) << ", window "
               << params.window_rows() << "x" << params.window_cols();
          break;
        }
        case Stage::kPca: {
          auto res = pca(r.cube, config.pca_components);
          r.cube = std::move(res.scores);
          r.feature = slice_band(r.cube, 0);
          save_cube(r.cube, "pca");
          const auto [lo, hi] = value_range(*r.feature);
          write_pgm(*r.feature, artifact("pc1.pgm"), lo, hi);
          write_pgm(suppress_background(*r.feature, config.suppress_percentile), artifact("pc1_suppressed.pgm"));
          line << res.model.size() << " components, pc1 variance " << detail::num6(res.model.explained_variance.front());
          break;
        }
        case Stage::kSaliency:
          r.feature = current_feature();
          r.saliency = saliency_map(*r.feature, r.cube.provenance_string());
          write_pgm(r.saliency->values, artifact("saliency.pgm"));
          line << r.saliency->values.rows() << "x" << r.saliency->values.cols();
          break;
        case Stage::kThreshold:
          r.threshold_mask = threshold_mask(*r.saliency, config.threshold);
          r.mask = r.threshold_mask;
          write_pgm(*r.threshold_mask, artifact("threshold.pgm"));
          line << "t = " << detail::num6(r.threshold_mask->threshold_used()) << ", " << r.threshold_mask->count()
               << " pixels";
          break;
        case Stage::kRegions: {
          const auto regions = extract_regions(*r.threshold_mask, config.min_area);
          r.mask = regions_to_mask(regions, r.threshold_mask->rows(), r.threshold_mask->cols());
          r.mask->set_threshold_used(r.threshold_mask->threshold_used());
          r.regions.clear();
          for (std::size_t k = 0; k < regions.size(); ++k) r.regions.push_back(region_features(regions[k], k + 1));
          write_pgm(*r.mask, artifact("mask.pgm"));
          save_cube(mask_to_cube(*r.mask), "mask");
          write_text_file(artifact("regions" + ext), format_regions(r.regions, config.format));
          line << r.regions.size() << " regions, " << r.mask->count() << " pixels";
          break;
        }
        case Stage::kEvaluate: {
          const BinaryMask truth = load_truth(config.truth);
          r.evaluation = precision_recall(*r.mask, truth);
          write_text_file(artifact("evaluation" + ext),
                          format_evaluation({{config.sample_id, config.impactor, *r.evaluation, 1.0}}, config.format));
          line << "precision " << detail::num6(r.evaluation->precision) << ", recall "
               << detail::num6(r.evaluation->recall);
          break;
        }
        case Stage::kStitch: {
          const Hypercube right = read_envi(config.stitch_with);
          r.cube = stitch(r.cube, right.kind() == r.cube.kind() ? right : with_kind(right, r.cube.kind()), config.stitch);
          save_cube(r.cube, "stitched");
          line << r.cube.samples() << " samples x " << r.cube.lines() << " lines";
          break;
        }
        case Stage::kTilt:
          r.cube = tilt_correct(r.cube, {config.tilt_theta_deg});
          save_cube(r.cube, "tilt_corrected");
          line << "theta " << detail::num6(config.tilt_theta_deg) << " deg -> " << r.cube.lines() << " lines";
          break;
        case Stage::kProfile: {
          r.profiles.clear();
          for (const auto& roi : config.rois) r.profiles.push_back(roi_profile(r.cube, roi));
          write_text_file(artifact("profiles" + ext), format_profiles(r.profiles, config.format));
          if (r.profiles.size() >= 2) {
            const auto& a = r.profiles[0];
            const auto& b = r.profiles[1];
            write_text_file(artifact("crossings.csv"),
                            format_crossings(a, b, profile_crossings(a, b), profile_separation(a, b)));
          }
          if (config.profile_png) write_png(render_profile_chart(r.profiles), artifact("profiles.png"));
          line << r.profiles.size() << " profiles";
          break;
        }
      }
      log << line.str() << "\n";
    } catch (const StageError&) {
      throw;
    } catch (const std::exception& e) {
      throw StageError(stage, e.what());
    }
  }
  return r;
}

}  // namespace hsindt
