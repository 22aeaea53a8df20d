// hsindt command-line front end.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hsindt/chart.hpp"
#include "hsindt/detect.hpp"
#include "hsindt/envi.hpp"
#include "hsindt/evaluate.hpp"
#include "hsindt/geometry.hpp"
#include "hsindt/parallel.hpp"
#include "hsindt/pipeline.hpp"
#include "hsindt/pnm.hpp"
#include "hsindt/preprocess.hpp"
#include "hsindt/profile.hpp"
#include "hsindt/report.hpp"
#include "hsindt/synth.hpp"

namespace fs = std::filesystem;
using namespace hsindt;

namespace {

constexpr int kExitStage = 1;
constexpr int kExitConfig = 2;

struct Globals {
  std::size_t threads = 0;
  std::string format = "csv";
};

EnviDataType data_type_option(int code) {
  try {
    return envi_data_type_from_code(code);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create '" + dir.string() + "': " + ec.message());
}

void print_files(const EnviFiles& files) { std::cout << "wrote " << files.header.string() << "\n"; }

std::string dims(const Hypercube& c) {
  return std::to_string(c.lines()) + "x" + std::to_string(c.samples()) + "x" + std::to_string(c.bands());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperspectral inspection toolkit: ENVI cubes, calibration, denoising, damage detection"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (default: HSINDT_THREADS or 1)");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"csv", "json"}));

  // convert
  auto* convert = app.add_subcommand("convert", "Rewrite an ENVI cube with another interleave, type or byte order");
  fs::path conv_in, conv_out;
  std::string conv_interleave = "bsq";
  int conv_type = 4;
  int conv_order = 0;
  convert->add_option("-i,--input", conv_in, "Input header")->required();
  convert->add_option("-o,--output", conv_out, "Output header")->required();
  convert->add_option("--interleave", conv_interleave)->check(CLI::IsMember({"bsq", "bil", "bip"}));
  convert->add_option("--type", conv_type, "ENVI data type code (1, 2, 4, 5, 12)");
  convert->add_option("--byte-order", conv_order)->check(CLI::IsMember({0, 1}));

  // calibrate
  auto* calib = app.add_subcommand("calibrate", "Raw counts to reflectance with dark and white references");
  fs::path cal_in, cal_dark, cal_white, cal_out;
  calib->add_option("-i,--input", cal_in)->required();
  calib->add_option("--dark", cal_dark)->required();
  calib->add_option("--white", cal_white)->required();
  calib->add_option("-o,--output", cal_out)->required();

  // preprocess
  auto* prep = app.add_subcommand("preprocess", "Binning, SNV and joint bilateral denoising");
  fs::path prep_in, prep_out;
  std::size_t bin_spatial = 1, bin_spectral = 1;
  std::string snv = "none";
  bool jbf = false;
  double sigma_d = 2.0, range_fraction = 0.1;
  std::optional<double> sigma_r;
  prep->add_option("-i,--input", prep_in)->required();
  prep->add_option("-o,--output", prep_out)->required();
  prep->add_option("--bin-spatial", bin_spatial)->check(CLI::PositiveNumber);
  prep->add_option("--bin-spectral", bin_spectral)->check(CLI::PositiveNumber);
  prep->add_option("--snv", snv)->check(CLI::IsMember({"none", "per-band", "per-spectrum"}));
  prep->add_flag("--jbf", jbf, "Apply the PC1-guided joint bilateral filter");
  prep->add_option("--sigma-d", sigma_d);
  prep->add_option("--range-fraction", range_fraction);
  prep->add_option("--sigma-r", sigma_r, "Absolute range sigma (overrides --range-fraction)");

  // detect
  auto* det = app.add_subcommand("detect", "Saliency-based damage detection with shape features");
  fs::path det_in, det_out;
  double det_threshold = 0.5;
  bool det_otsu = false, det_no_denoise = false;
  std::size_t det_min_area = 10;
  det->add_option("-i,--input", det_in)->required();
  det->add_option("-o,--output", det_out, "Output directory")->required();
  det->add_option("--threshold", det_threshold)->check(CLI::Range(0.0, 1.0));
  det->add_flag("--otsu", det_otsu);
  det->add_option("--min-area", det_min_area);
  det->add_flag("--no-denoise", det_no_denoise);
  det->add_option("--sigma-d", sigma_d);
  det->add_option("--range-fraction", range_fraction);

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "Pixel precision/recall against ground-truth masks");
  std::vector<fs::path> ev_detected, ev_truth;
  std::vector<std::string> ev_sample, ev_impactor;
  std::vector<double> ev_weight;
  fs::path ev_out;
  eval->add_option("--detected", ev_detected, "Detected mask (PGM), repeatable")->required();
  eval->add_option("--truth", ev_truth, "Truth mask (PGM), repeatable")->required();
  eval->add_option("--sample", ev_sample);
  eval->add_option("--impactor", ev_impactor);
  eval->add_option("--weight", ev_weight);
  eval->add_option("-o,--output", ev_out, "Report file (stdout when omitted)");

  // stitch
  auto* st = app.add_subcommand("stitch", "Join two scans sharing a fixed column overlap");
  fs::path st_left, st_right, st_out;
  std::size_t st_overlap = 0;
  std::string st_blend = "average";
  st->add_option("-i,--input", st_left)->required();
  st->add_option("--with", st_right)->required();
  st->add_option("--overlap", st_overlap)->required();
  st->add_option("--blend", st_blend)->check(CLI::IsMember({"average", "take-first"}));
  st->add_option("-o,--output", st_out)->required();

  // tilt
  auto* tl = app.add_subcommand("tilt", "Restore along-scan pitch of a tilted acquisition");
  fs::path tl_in, tl_out;
  double tl_theta = 0.0;
  tl->add_option("-i,--input", tl_in)->required();
  tl->add_option("--theta", tl_theta, "Tilt angle in degrees")->required();
  tl->add_option("-o,--output", tl_out)->required();

  // profile
  auto* prof = app.add_subcommand("profile", "Mean/std spectral profiles over regions of interest");
  fs::path pr_in, pr_out, pr_png;
  std::vector<std::string> pr_rois;
  prof->add_option("-i,--input", pr_in)->required();
  prof->add_option("--roi", pr_rois, "name:row0,col0,rows,cols, repeatable")->required();
  prof->add_option("-o,--output", pr_out, "Report file (stdout when omitted)");
  prof->add_option("--png", pr_png, "Chart output");

  // synth
  auto* syn = app.add_subcommand("synth", "Generate a synthetic scene with references and truth masks");
  fs::path sy_config, sy_out;
  std::optional<std::uint64_t> sy_seed;
  bool sy_pushbroom = false;
  ScanKinematics kin;
  syn->add_option("--config", sy_config, "Scene description");
  syn->add_option("-o,--output", sy_out, "Output directory")->required();
  syn->add_option("--seed", sy_seed);
  syn->add_flag("--pushbroom", sy_pushbroom, "Simulate a push-broom scan");
  syn->add_option("--speed", kin.speed_mm_s, "mm/s");
  syn->add_option("--line-rate", kin.line_rate_hz, "Hz");
  syn->add_option("--path-length", kin.path_length_mm, "mm");
  syn->add_option("--tilt", kin.tilt_deg, "degrees");

  // run
  auto* run = app.add_subcommand("run", "Execute a multi-stage pipeline configuration");
  fs::path run_config, run_out;
  run->add_option("--config", run_config)->required();
  run->add_option("-o,--output", run_out, "Override the configured output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (g.threads == 0) {
    if (const char* env = std::getenv("HSINDT_THREADS")) {
      try {
        g.threads = static_cast<std::size_t>(std::stoul(env));
      } catch (const std::exception&) {
        std::cerr << "error: HSINDT_THREADS must be a positive integer\n";
        return kExitConfig;
      }
    }
  }
  set_thread_count(g.threads == 0 ? 1 : g.threads);
  const ReportFormat format = parse_report_format(g.format);

  try {
    if (*convert) {
      const Hypercube cube = read_envi(conv_in);
      EnviWriteOptions opt{parse_interleave(conv_interleave), data_type_option(conv_type),
                           conv_order == 0 ? ByteOrder::kLittle : ByteOrder::kBig};
      print_files(write_envi(cube, conv_out, opt));
    } else if (*calib) {
      const auto refs = make_calibration_refs(read_envi(cal_dark), read_envi(cal_white));
      const auto res = calibrate(read_envi(cal_in), refs);
      std::cout << "calibrate: " << dims(res.cube) << ", " << res.dead.size() << " dead positions\n";
      print_files(write_envi(res.cube, cal_out, {Interleave::kBsq, EnviDataType::kFloat64}));
    } else if (*prep) {
      Hypercube cube = read_envi(prep_in);
      if (bin_spatial > 1 || bin_spectral > 1) cube = bin(cube, bin_spatial, bin_spectral);
      if (snv != "none") cube = snv_correct(cube, snv == "per-band" ? SnvMode::kPerBand : SnvMode::kPerSpectrum).cube;
      if (jbf) {
        const Image guide = first_principal_component(cube);
        JbfParams params = JbfParams::for_guide(guide, sigma_d, range_fraction);
        if (sigma_r) params.sigma_r = *sigma_r;
        cube = joint_bilateral_filter(cube, guide, params);
      }
      std::cout << "preprocess: " << dims(cube) << " " << cube.provenance_string() << "\n";
      print_files(write_envi(cube, prep_out, {Interleave::kBsq, EnviDataType::kFloat64}));
    } else if (*det) {
      DetectConfig cfg;
      cfg.denoise = !det_no_denoise;
      cfg.sigma_d = sigma_d;
      cfg.range_fraction = range_fraction;
      cfg.threshold = det_otsu ? ThresholdPolicy::otsu() : ThresholdPolicy::fixed(det_threshold);
      cfg.min_area = det_min_area;
      const auto res = detect_damage(read_envi(det_in), cfg);
      ensure_dir(det_out);
      write_pgm(res.saliency.values, det_out / "saliency.pgm");
      write_pgm(res.mask, det_out / "mask.pgm");
      write_pgm(suppress_background(res.feature), det_out / "pc1_suppressed.pgm");
      const std::string ext = format == ReportFormat::kJson ? ".json" : ".csv";
      write_text_file(det_out / ("regions" + ext), format_regions(res.features, format));
      std::cout << "detect: threshold " << res.mask.threshold_used() << ", " << res.features.size() << " regions, "
                << res.mask.count() << " pixels\n";
    } else if (*eval) {
      if (ev_detected.size() != ev_truth.size()) throw ConfigError("--detected and --truth counts differ");
      std::vector<SampleEvaluation> rows;
      for (std::size_t k = 0; k < ev_detected.size(); ++k) {
        SampleEvaluation s;
        s.sample_id = k < ev_sample.size() ? ev_sample[k] : "sample" + std::to_string(k + 1);
        s.impactor = k < ev_impactor.size() ? ev_impactor[k] : "";
        s.weight = k < ev_weight.size() ? ev_weight[k] : 1.0;
        s.result = precision_recall(read_pgm_mask(ev_detected[k]), read_pgm_mask(ev_truth[k]));
        rows.push_back(s);
      }
      const std::string text = format_evaluation(rows, format);
      if (ev_out.empty()) std::cout << text;
      else write_text_file(ev_out, text);
    } else if (*st) {
      const Hypercube out = stitch(read_envi(st_left), read_envi(st_right),
                                   {st_overlap, st_blend == "average" ? Blend::kAverage : Blend::kTakeFirst});
      std::cout << "stitch: " << out.samples() << " samples x " << out.lines() << " lines\n";
      print_files(write_envi(out, st_out, {Interleave::kBsq, EnviDataType::kFloat64}));
    } else if (*tl) {
      const Hypercube out = tilt_correct(read_envi(tl_in), {tl_theta});
      std::cout << "tilt: " << dims(out) << "\n";
      print_files(write_envi(out, tl_out, {Interleave::kBsq, EnviDataType::kFloat64}));
    } else if (*prof) {
      std::vector<Roi> rois;
      try {
        for (const auto& r : pr_rois) rois.push_back(parse_roi(r));
      } catch (const Error& e) {
        throw ConfigError(e.what());
      }
      const Hypercube cube = read_envi(pr_in);
      std::vector<SpectralProfile> profiles;
      for (const auto& r : rois) profiles.push_back(roi_profile(cube, r));
      const std::string text = format_profiles(profiles, format);
      if (pr_out.empty()) std::cout << text;
      else write_text_file(pr_out, text);
      if (!pr_png.empty()) write_png(render_profile_chart(profiles), pr_png);
    } else if (*syn) {
      SceneSpec spec;
      try {
        if (!sy_config.empty()) spec = load_scene_spec(sy_config);
        if (sy_seed) spec.seed = *sy_seed;
        spec.validate();
        if (sy_pushbroom) kin.validate();
      } catch (const Error& e) {
        throw ConfigError(e.what());
      }
      const Scene scene = sy_pushbroom ? pushbroom_scan(spec, kin) : generate_scene(spec);
      ensure_dir(sy_out);
      const EnviWriteOptions f64{Interleave::kBsq, EnviDataType::kFloat64};
      write_envi(scene.raw, sy_out / "raw.hdr", f64);
      write_envi(scene.dark_recording, sy_out / "dark.hdr", f64);
      write_envi(scene.white_recording, sy_out / "white.hdr", f64);
      write_envi(scene.reflectance, sy_out / "reflectance.hdr", f64);
      write_pgm(scene.truth, sy_out / "truth.pgm");
      for (std::size_t k = 0; k < scene.damage_truth.size(); ++k) {
        write_pgm(scene.damage_truth[k], sy_out / ("damage_" + std::to_string(k + 1) + ".pgm"));
      }
      std::cout << "synth: raw " << dims(scene.raw) << ", " << scene.damage_truth.size() << " damages, seed "
                << spec.seed << "\n";
    } else if (*run) {
      PipelineConfig cfg = PipelineConfig::load(run_config);
      if (!run_out.empty()) cfg.output = run_out;
      run_pipeline(cfg, std::cout);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (*run) std::cerr << "usage: hsindt run --config <file>\n";
    return kExitConfig;
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStage;
  }
  return 0;
}
