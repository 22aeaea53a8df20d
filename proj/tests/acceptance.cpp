// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hsindt/detect.hpp"
#include "hsindt/envi.hpp"
#include "hsindt/evaluate.hpp"
#include "hsindt/geometry.hpp"
#include "hsindt/pnm.hpp"
#include "hsindt/preprocess.hpp"
#include "hsindt/profile.hpp"
#include "hsindt/synth.hpp"
#include "oracles.hpp"

using namespace hsindt;

namespace {

// Pinned tolerances.
constexpr double kCalibTol = 1e-12;
constexpr double kSnvTol = 1e-9;
constexpr double kJbfTol = 1e-10;
constexpr double kJbfWeightTol = 1e-12;
constexpr double kPcaTol = 1e-8;
constexpr double kPcaOrthoTol = 1e-9;
constexpr double kDiskRdLo = 0.92, kDiskRdHi = 1.02;
constexpr double kDiskRmmLo = 0.99, kDiskRmmHi = 1.01;
constexpr double kRectRmm = 4.0, kRectRmmTol = 0.05;
constexpr double kRoundRmmMax = 1.15;
constexpr double kRoundRdLo = 0.65, kRoundRdHi = 1.0;
constexpr double kBarRmmLo = 3.8, kBarRmmHi = 8.8;
constexpr double kBarRdLo = 0.13, kBarRdHi = 0.35;
constexpr double kE2eMin = 0.90;
constexpr double kRmmSplit = 2.0;
constexpr double kTiltRmmTol = 0.05;
constexpr double kCrossingNm = 1147.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = dt < limit_s;
  const bool ok = o.pass && in_time;
  failures += ok ? 0 : 1;
  std::printf("%s %2d %s: %s [%.3f s, limit %.0f s%s]\n", ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), dt, limit_s,
              in_time ? "" : ", too slow");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt2(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Index of the detected region overlapping `truth` the most, or -1.
int matching_region(const DetectionResult& res, const BinaryMask& truth) {
  int best = -1;
  std::size_t best_hits = 0;
  for (std::size_t k = 0; k < res.regions.size(); ++k) {
    std::size_t hits = 0;
    for (const auto& p : res.regions[k]) hits += truth(p.row, p.col);
    if (hits > best_hits) {
      best_hits = hits;
      best = static_cast<int>(k);
    }
  }
  return best;
}

Outcome stitch_arithmetic() {
  const Hypercube a(620, 320, 2, CubeKind::kReflectance), b(620, 320, 2, CubeKind::kReflectance);
  const auto out = stitch(a, b, {110});
  const bool ok = out.samples() == 530 && out.lines() == 620;
  return {ok, std::to_string(out.samples()) + "x" + std::to_string(out.lines()) + " (expected 530x620)"};
}

Outcome binning_arithmetic() {
  const Hypercube line(4, 1344, 8, CubeKind::kReflectance);
  const auto out = bin(line, 4, 1);
  return {out.samples() == 336, std::to_string(out.samples()) + " samples per line (expected 336)"};
}

Outcome calibration_identities() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> dark_d(0.0, 200.0), span_d(500.0, 4000.0);
  const std::size_t I = 64, J = 64, B = 32;
  CalibrationRefs refs{ReferenceFrame(J, B), ReferenceFrame(J, B)};
  for (std::size_t j = 0; j < J; ++j)
    for (std::size_t b = 0; b < B; ++b) {
      refs.dark(j, b) = dark_d(rng);
      refs.white(j, b) = refs.dark(j, b) + span_d(rng);
    }
  double worst = 0.0;
  for (const double target : {0.0, 1.0, 0.5}) {
    Hypercube raw(I, J, B);
    for (std::size_t i = 0; i < I; ++i)
      for (std::size_t j = 0; j < J; ++j)
        for (std::size_t b = 0; b < B; ++b) {
          const double d = refs.dark(j, b), w = refs.white(j, b);
          raw.at(i, j, b) = target == 0.0 ? d : target == 1.0 ? w : (d + w) / 2.0;
        }
    const auto r = calibrate(raw, refs).cube;
    for (double v : r.values()) worst = std::max(worst, std::fabs(v - target));
  }
  return {worst <= kCalibTol, fmt("max |r - {0, 1, 0.5}| = %.3g", worst)};
}

Outcome snv_per_band() {
  std::mt19937_64 rng(1002);
  double worst_mu = 0.0, worst_sd = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto cube = oracle::random_cube(rng, 12, 10, 6, 0.05, 0.95, CubeKind::kReflectance);
    const auto out = snv_correct(cube, SnvMode::kPerBand).cube;
    const std::size_t n = out.plane_size();
    for (std::size_t b = 0; b < out.bands(); ++b) {
      double s = 0.0;
      for (std::size_t p = 0; p < n; ++p) s += out.values()[b * n + p];
      const double mu = s / static_cast<double>(n);
      double ss = 0.0;
      for (std::size_t p = 0; p < n; ++p) ss += (out.values()[b * n + p] - mu) * (out.values()[b * n + p] - mu);
      worst_mu = std::max(worst_mu, std::fabs(mu));
      worst_sd = std::max(worst_sd, std::fabs(std::sqrt(ss / static_cast<double>(n)) - 1.0));
    }
  }
  return {worst_mu <= kSnvTol && worst_sd <= kSnvTol, fmt2("max |mean| = %.3g, max |std - 1| = %.3g", worst_mu, worst_sd)};
}

Outcome jbf_oracle() {
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> sd_d(0.5, 3.0), sr_d(0.05, 1.0);
  double worst = 0.0, worst_w = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto cube = oracle::random_cube(rng, 7, 7, 3, 0.0, 1.0, CubeKind::kReflectance);
    const auto guide = oracle::random_image(rng, 7, 7);
    const JbfParams p{sd_d(rng), sr_d(rng)};
    const auto out = joint_bilateral_filter(cube, guide, p);
    const int h = static_cast<int>(std::ceil(2.0 * p.sigma_d));
    const std::vector<double> flat(cube.values().begin(), cube.values().end());
    const auto ref = oracle::jbf_naive(flat, 7, 7, 3, guide.data(), p.sigma_d, p.sigma_r, h, h);
    for (std::size_t k = 0; k < ref.size(); ++k) worst = std::max(worst, std::fabs(out.values()[k] - ref[k]));
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 7; ++c) {
        double s = 0.0;
        for (const auto& t : jbf_weights(guide, p, r, c)) s += t.weight;
        worst_w = std::max(worst_w, std::fabs(s - 1.0));
      }
  }
  return {worst <= kJbfTol && worst_w <= kJbfWeightTol,
          fmt2("max |jbf - naive| = %.3g, max |sum w - 1| = %.3g", worst, worst_w)};
}

Outcome jbf_edge() {
  const std::size_t n = 32;
  const double lo = 0.2, hi = 0.8;
  Hypercube step(n, n, 1, CubeKind::kReflectance);
  Image guide(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) step.at(i, j, 0) = guide(i, j) = j < n / 2 ? lo : hi;
  const double sigma_d = 2.0;
  const auto jbf = joint_bilateral_filter(step, guide, {sigma_d, 0.1 * (hi - lo)});
  // Pure Gaussian of the same spatial support and sigma, written out directly.
  const int h = static_cast<int>(std::ceil(2.0 * sigma_d));
  double dj = 0.0, dg = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double num = 0.0, den = 0.0;
      for (int dr = -h; dr <= h; ++dr)
        for (int dc = -h; dc <= h; ++dc) {
          const long p = static_cast<long>(i) + dr, q = static_cast<long>(j) + dc;
          if (p < 0 || q < 0 || p >= static_cast<long>(n) || q >= static_cast<long>(n)) continue;
          const double w = std::exp(-(dr * dr + dc * dc) / (2.0 * sigma_d * sigma_d));
          num += w * step.at(static_cast<std::size_t>(p), static_cast<std::size_t>(q), 0);
          den += w;
        }
      dg = std::max(dg, std::fabs(num / den - step.at(i, j, 0)));
      dj = std::max(dj, std::fabs(jbf.at(i, j, 0) - step.at(i, j, 0)));
    }
  return {dj < dg, fmt2("max deviation JBF %.3g vs Gaussian %.3g", dj, dg)};
}

Outcome pca_oracle() {
  std::mt19937_64 rng(1004);
  double worst_v = 0.0, worst_l = 0.0, worst_o = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto cube = oracle::random_cube(rng, 8, 8, 5, 0.0, 1.0, CubeKind::kReflectance);
    const auto res = pca(cube, 5);
    const std::vector<double> flat(cube.values().begin(), cube.values().end());
    const auto eig = oracle::jacobi_eigen(oracle::covariance(flat, 64, 5));
    for (std::size_t k = 0; k < 5; ++k) {
      worst_v = std::max(worst_v, std::fabs(res.model.explained_variance[k] - eig.values[k]));
      for (std::size_t b = 0; b < 5; ++b)
        worst_l = std::max(worst_l, std::fabs(res.model.components[k][b] - eig.vectors[k][b]));
      for (std::size_t m = 0; m < 5; ++m) {
        double dot = 0.0;
        for (std::size_t b = 0; b < 5; ++b) dot += res.model.components[k][b] * res.model.components[m][b];
        worst_o = std::max(worst_o, std::fabs(dot - (k == m ? 1.0 : 0.0)));
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max |eigenvalue diff| = %.3g, max |loading diff| = %.3g, orthonormality %.3g", worst_v,
                worst_l, worst_o);
  return {worst_v <= kPcaTol && worst_l <= kPcaTol && worst_o <= kPcaOrthoTol, buf};
}

Region region_of(const BinaryMask& m) {
  Region r;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) r.push_back({i, j});
  return r;
}

Outcome shape_features() {
  bool ok = true;
  std::string detail;
  const auto disk = region_features(region_of(oracle::disk(121, 60, 60, 50)));
  ok = ok && disk.roundness >= kDiskRdLo && disk.roundness <= kDiskRdHi && disk.rmm >= kDiskRmmLo && disk.rmm <= kDiskRmmHi;
  detail += fmt2("disk R_d %.4f rmm %.4f", disk.roundness, disk.rmm);
  const auto rect = region_features(region_of(oracle::rectangle(30, 90, 5, 5, 20, 80)));
  ok = ok && std::fabs(rect.rmm - kRectRmm) <= kRectRmmTol;
  detail += fmt("; rect rmm %.4f", rect.rmm);

  // Round blobs and wedge bars from noisy synthetic scenes through the full detector.
  const std::vector<DamageSpec> rounds{{DamageShape::kEllipse, 40, 40, 13, 13, 0, 0.6},
                                       {DamageShape::kEllipse, 40, 40, 14, 13, 30, 0.6}};
  const std::vector<DamageSpec> bars{{DamageShape::kBar, 90, 100, 84, 10, 15, 0.6},
                                     {DamageShape::kBar, 90, 100, 88, 11, -20, 0.6}};
  for (std::size_t k = 0; k < rounds.size(); ++k) {
    SceneSpec s;
    s.lines = 140;
    s.samples = 170;
    s.noise_sigma = 0.01;
    s.seed = 500 + k;
    s.damages = {rounds[k], bars[k]};
    const auto scene = generate_scene(s);
    const auto res = detect_damage(calibrate(scene.raw, scene.refs).cube);
    const int ri = matching_region(res, scene.damage_truth[0]);
    const int bi = matching_region(res, scene.damage_truth[1]);
    if (ri < 0 || bi < 0 || ri == bi) {
      ok = false;
      detail += "; scene " + std::to_string(k) + ": damage not isolated";
      continue;
    }
    const auto& r = res.features[static_cast<std::size_t>(ri)];
    const auto& b = res.features[static_cast<std::size_t>(bi)];
    ok = ok && r.rmm <= kRoundRmmMax && r.roundness >= kRoundRdLo && r.roundness <= kRoundRdHi;
    ok = ok && b.rmm >= kBarRmmLo && b.rmm <= kBarRmmHi && b.roundness >= kBarRdLo && b.roundness <= kBarRdHi;
    char buf[160];
    std::snprintf(buf, sizeof buf, "; round rmm %.3f R_d %.3f, bar rmm %.3f R_d %.3f", r.rmm, r.roundness, b.rmm,
                  b.roundness);
    detail += buf;
  }
  return {ok, detail};
}

Outcome pr_oracle() {
  std::mt19937_64 rng(1005);
  bool ok = true;
  std::vector<BinaryMask> dets, truths;
  std::vector<std::pair<EvalResult, double>> parts;
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = oracle::random_mask(rng, 16, 16, 0.3);
    const auto t = oracle::random_mask(rng, 16, 16, 0.3);
    const auto r = precision_recall(d, t);
    const auto c = oracle::brute_counts(d, t);
    ok = ok && r.tp == c.tp && r.fp == c.fp && r.fn == c.fn;
    const double p = c.tp + c.fp == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    const double rc = c.tp + c.fn == 0 ? 1.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    ok = ok && r.precision == p && r.recall == rc;
    dets.push_back(d);
    truths.push_back(t);
    parts.push_back({r, 1.0});
  }
  BinaryMask dall(1600, 16), tall(1600, 16);
  for (std::size_t k = 0; k < 100; ++k)
    for (std::size_t p = 0; p < 256; ++p) {
      dall.data()[k * 256 + p] = dets[k].data()[p];
      tall.data()[k * 256 + p] = truths[k].data()[p];
    }
  const auto pooled = weighted_overall(parts);
  const auto whole = precision_recall(dall, tall);
  const bool pool_ok = pooled.tp == whole.tp && pooled.fp == whole.fp && pooled.fn == whole.fn &&
                       pooled.precision == whole.precision && pooled.recall == whole.recall;
  return {ok && pool_ok, std::string("100 pairs ") + (ok ? "match" : "MISMATCH") + " brute-force counts; pooling " +
                             (pool_ok ? "equals" : "DIFFERS FROM") + " concatenation"};
}

Outcome end_to_end() {
  std::mt19937_64 geometry(1006);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool ok = true;
  int confusions = 0;
  double min_p = 1.0, min_r = 1.0;
  for (int scene_id = 0; scene_id < 10; ++scene_id) {
    SceneSpec s;
    s.lines = 128;
    s.samples = 160;
    s.noise_sigma = 0.01;
    s.seed = 7000 + static_cast<std::uint64_t>(scene_id);
    const double a = 11.0 + 5.0 * u(geometry);
    s.damages.push_back({DamageShape::kEllipse, 34 + 6 * u(geometry), 38 + 8 * u(geometry), a,
                         a * (0.8 + 0.2 * u(geometry)), 180 * u(geometry), 0.6});
    s.damages.push_back({DamageShape::kBar, 92 + 4 * u(geometry), 100 + 8 * u(geometry), 70 + 16 * u(geometry),
                         9 + 3 * u(geometry), -25 + 50 * u(geometry), 0.6});
    const auto scene = generate_scene(s);
    const auto res = detect_damage(calibrate(scene.raw, scene.refs).cube);

    // Detections not belonging to the bar are scored against the ellipse.
    const int bi = matching_region(res, scene.damage_truth[1]);
    BinaryMask det = res.mask;
    if (bi >= 0)
      for (const auto& p : res.regions[static_cast<std::size_t>(bi)]) det.set(p.row, p.col, false);
    const auto pr = precision_recall(det, scene.damage_truth[0]);
    min_p = std::min(min_p, pr.precision);
    min_r = std::min(min_r, pr.recall);
    ok = ok && pr.precision >= kE2eMin && pr.recall >= kE2eMin;

    const int ei = matching_region(res, scene.damage_truth[0]);
    for (std::size_t k = 0; k < res.features.size(); ++k) {
      const bool called_bar = res.features[k].rmm >= kRmmSplit;
      if (static_cast<int>(k) == ei && called_bar) ++confusions;
      if (static_cast<int>(k) == bi && !called_bar) ++confusions;
    }
    if (ei < 0 || bi < 0 || ei == bi) ++confusions;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "ellipse min precision %.4f, min recall %.4f; rmm-%.1f confusions %d", min_p, min_r,
                kRmmSplit, confusions);
  return {ok && confusions == 0, buf};
}

Outcome tilt_round_trip() {
  std::mt19937_64 rng(1007);
  const auto c = oracle::random_cube(rng, 9, 7, 3, 0.0, 1.0, CubeKind::kReflectance);
  const auto same = tilt_correct(c, {0.0});
  const bool identity = same.lines() == c.lines() &&
                        std::memcmp(same.values().data(), c.values().data(), c.size() * sizeof(double)) == 0;

  SceneSpec s;
  s.lines = 160;
  s.samples = 96;
  s.noise_sigma = 0.01;
  s.damages.push_back({DamageShape::kEllipse, 60, 48, 16, 10, 30, 0.6});
  ScanKinematics k;
  k.path_length_mm = 160.0 * k.speed_mm_s / k.line_rate_hz;
  const auto flat = pushbroom_scan(s, k);
  k.tilt_deg = 30.0;
  const auto tilted = pushbroom_scan(s, k);

  const auto rmm_of = [](const Hypercube& cube, const BinaryMask& truth) {
    const auto res = detect_damage(cube);
    const int r = matching_region(res, truth);
    return r < 0 ? 0.0 : res.features[static_cast<std::size_t>(r)].rmm;
  };
  const double ref = rmm_of(calibrate(flat.raw, flat.refs).cube, flat.truth);
  const auto restored = tilt_correct(calibrate(tilted.raw, tilted.refs).cube, {30.0});
  const auto restored_truth = tilt_correct(mask_to_cube(tilted.truth), {30.0});
  BinaryMask truth(restored_truth.lines(), restored_truth.samples());
  for (std::size_t i = 0; i < truth.rows(); ++i)
    for (std::size_t j = 0; j < truth.cols(); ++j) truth.set(i, j, restored_truth.at(i, j, 0) >= 0.5);
  const double got = rmm_of(restored, truth);
  const double rel = ref > 0.0 ? std::fabs(got - ref) / ref : 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "untilted rmm %.4f, restored rmm %.4f (%.2f%%); theta=0 %s", ref, got, 100.0 * rel,
                identity ? "bit-exact" : "NOT bit-exact");
  return {identity && rel <= kTiltRmmTol, buf};
}

Outcome envi_round_trip() {
  std::mt19937_64 rng(1008);
  const auto dir = oracle::temp_dir("acceptance_envi");
  const Interleave interleaves[] = {Interleave::kBsq, Interleave::kBil, Interleave::kBip};
  const int codes[] = {1, 2, 4, 5, 12};
  int bad = 0, bad_bytes = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Interleave il = interleaves[trial % 3];
    const int code = codes[(trial / 3) % 5];
    const bool big = (trial / 15) % 2 == 1;
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    const std::size_t I = dim(rng), J = dim(rng), B = dim(rng);
    Hypercube cube(I, J, B, CubeKind::kReflectance);
    std::uniform_real_distribution<double> real(-1e3, 1e3);
    std::uniform_int_distribution<int> u8(0, 255), i16(-32768, 32767), u16(0, 65535);
    for (auto& v : cube.values()) {
      switch (code) {
        case 1: v = u8(rng); break;
        case 2: v = i16(rng); break;
        case 4: v = static_cast<float>(real(rng)); break;
        case 5: v = real(rng); break;
        default: v = u16(rng); break;
      }
    }
    const auto path = dir / ("c" + std::to_string(trial) + ".hdr");
    const auto files = write_envi(cube, path,
                                  {il, envi_data_type_from_code(code), big ? ByteOrder::kBig : ByteOrder::kLittle});
    const auto back = read_envi(path);
    if (back.lines() != I || back.samples() != J || back.bands() != B ||
        std::memcmp(back.values().data(), cube.values().data(), cube.size() * sizeof(double)) != 0) {
      ++bad;
    }
    std::ifstream in(files.data, std::ios::binary);
    const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto expected = oracle::envi_payload(std::string(to_string(il)), code, big, I, J, B,
                                               [&](std::size_t i, std::size_t j, std::size_t b) { return cube.at(i, j, b); });
    if (bytes != expected) ++bad_bytes;
  }
  return {bad == 0 && bad_bytes == 0, "50 cubes: " + std::to_string(bad) + " value mismatches, " +
                                          std::to_string(bad_bytes) + " payload layout mismatches"};
}

Outcome profile_crossing() {
  const auto [normal, adhesive] = crossing_pair(kCrossingNm);
  SceneSpec s;
  s.lines = 40;
  s.samples = 60;
  s.noise_sigma = 0.0;
  s.materials = {normal, adhesive};
  s.background = normal.name;
  s.patches.push_back({adhesive.name, 10, 30, 20, 20});
  const auto scene = generate_scene(s);
  const auto cube = calibrate(scene.raw, scene.refs).cube;
  const auto p1 = roi_profile(cube, Roi::rectangle("normal", 10, 5, 20, 20));
  const auto p2 = roi_profile(cube, Roi::rectangle("adhesive", 10, 30, 20, 20));
  const auto c = profile_crossings(p1, p2);
  std::vector<double> all = c.crossings;
  all.insert(all.end(), c.tangencies.begin(), c.tangencies.end());
  const double step = s.grid.step_nm;
  const bool ok = all.size() == 1 && std::fabs(all[0] - kCrossingNm) <= step;
  return {ok, all.size() == 1 ? fmt2("crossing at %.2f nm (band spacing %.0f nm)", all[0], step)
                              : "found " + std::to_string(all.size()) + " crossings"};
}

}  // namespace

int main() {
  run(1, "stitch arithmetic", 1, stitch_arithmetic);
  run(2, "binning arithmetic", 1, binning_arithmetic);
  run(3, "calibration identities", 1, calibration_identities);
  run(4, "SNV per-band statistics", 5, snv_per_band);
  run(5, "JBF oracle equivalence", 10, jbf_oracle);
  run(6, "JBF edge preservation", 1, jbf_edge);
  run(7, "PCA oracle", 5, pca_oracle);
  run(8, "shape features", 5, shape_features);
  run(9, "precision/recall oracle", 2, pr_oracle);
  run(10, "end-to-end synthetic detection", 60, end_to_end);
  run(11, "tilt round trip", 5, tilt_round_trip);
  run(12, "ENVI round trip", 10, envi_round_trip);
  run(13, "profile crossings", 1, profile_crossing);
  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
