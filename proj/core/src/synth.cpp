#include "hsindt/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "hsindt/error.hpp"
#include "hsindt/keyvalue.hpp"
#include "hsindt/parallel.hpp"
#include "numfmt.hpp"

namespace hsindt {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic value in [-1, 1) for a (seed, stream, j, b) tuple.
double hashed_unit(std::uint64_t seed, std::uint64_t stream, std::uint64_t j, std::uint64_t b) {
  const std::uint64_t h = splitmix64(splitmix64(splitmix64(seed ^ (stream * 0x632be59bd9b4e019ULL)) + j) + b);
  return static_cast<double>(h >> 11) * 0x1.0p-52 - 1.0;
}

// Portable standard normal draws (Box-Muller on mt19937_64 output); the
// std:: distributions differ between standard libraries.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}
  double next() {
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t line_seed(std::uint64_t seed, std::size_t line) {
  return splitmix64(seed ^ splitmix64(0x5eedULL + static_cast<std::uint64_t>(line)));
}

const MaterialPatch* patch_at(const SceneSpec& spec, double row, double col) {
  const MaterialPatch* hit = nullptr;
  for (const auto& p : spec.patches) {
    if (row >= static_cast<double>(p.row0) && row < static_cast<double>(p.row0 + p.rows) &&
        col >= static_cast<double>(p.col0) && col < static_cast<double>(p.col0 + p.cols)) {
      hit = &p;
    }
  }
  return hit;
}

Scene render(const SceneSpec& spec, const std::vector<double>& scene_rows) {
  spec.validate();
  const auto wl = spec.grid.values();
  const std::size_t lines = scene_rows.size(), samples = spec.samples, bands = wl.size();

  std::map<std::string, std::vector<double>> tables;
  auto table_for = [&](const std::string& name) {
    auto it = tables.find(name);
    if (it != tables.end()) return;
    const auto sig = spec.material(name);
    std::vector<double> t(bands);
    for (std::size_t b = 0; b < bands; ++b) t[b] = sig.reflectance(wl[b]);
    tables.emplace(name, std::move(t));
  };
  table_for(spec.background);
  for (const auto& p : spec.patches) table_for(p.material);

  ReferenceFrame gain(samples, bands), dark(samples, bands);
  std::vector<double> illum(samples, 1.0);
  for (std::size_t j = 0; j < samples; ++j) {
    if (samples > 1) {
      illum[j] = 1.0 + spec.illumination_ramp * (static_cast<double>(j) / static_cast<double>(samples - 1) - 0.5);
    }
    for (std::size_t b = 0; b < bands; ++b) {
      gain(j, b) = 1.0 + spec.gain_variation * hashed_unit(spec.seed, 1, j, b);
      dark(j, b) = spec.dark_level * (1.0 + 0.1 * hashed_unit(spec.seed, 2, j, b));
    }
  }

  Scene scene;
  scene.raw = Hypercube(lines, samples, bands, CubeKind::kRawRadiance);
  scene.raw.set_wavelengths(wl);
  scene.reflectance = Hypercube(lines, samples, bands, CubeKind::kReflectance);
  scene.reflectance.set_wavelengths(wl);
  scene.damage_truth.assign(spec.damages.size(), BinaryMask(lines, samples));
  scene.truth = BinaryMask(lines, samples);

  parallel_for(lines, [&](std::size_t i) {
    NormalStream noise(line_seed(spec.seed, i));
    const double y = scene_rows[i];
    for (std::size_t j = 0; j < samples; ++j) {
      const double x = static_cast<double>(j);
      const auto* patch = patch_at(spec, y, x);
      const auto& table = tables.at(patch ? patch->material : spec.background);
      double modulation = 1.0;
      bool damaged = false;
      for (std::size_t d = 0; d < spec.damages.size(); ++d) {
        if (!spec.damages[d].contains(y, x)) continue;
        scene.damage_truth[d].set(i, j, true);
        if (!damaged) modulation = spec.damages[d].effect;
        damaged = true;
      }
      scene.truth.set(i, j, damaged);
      for (std::size_t b = 0; b < bands; ++b) {
        const double refl = table[b] * modulation;
        const double span = illum[j] * gain(j, b) * spec.white_level;
        const double signal = span * refl;
        double value = signal + dark(j, b);
        if (spec.noise_sigma > 0.0) value += spec.noise_sigma * span * noise.next();
        if (spec.shot_noise) value += std::sqrt(std::max(signal, 0.0)) * noise.next();
        scene.raw.at(i, j, b) = value;
        scene.reflectance.at(i, j, b) = refl;
      }
    }
  });

  const std::size_t ref_lines = std::max<std::size_t>(1, spec.reference_lines);
  scene.dark_recording = Hypercube(ref_lines, samples, bands, CubeKind::kRawRadiance);
  scene.white_recording = Hypercube(ref_lines, samples, bands, CubeKind::kRawRadiance);
  scene.dark_recording.set_wavelengths(wl);
  scene.white_recording.set_wavelengths(wl);
  for (std::size_t i = 0; i < ref_lines; ++i) {
    for (std::size_t j = 0; j < samples; ++j) {
      for (std::size_t b = 0; b < bands; ++b) {
        scene.dark_recording.at(i, j, b) = dark(j, b);
        scene.white_recording.at(i, j, b) = illum[j] * gain(j, b) * spec.white_level + dark(j, b);
      }
    }
  }
  scene.refs = make_calibration_refs(scene.dark_recording, scene.white_recording);
  scene.dark_recording.append_provenance("synth_dark", "seed=" + std::to_string(spec.seed));
  scene.white_recording.append_provenance("synth_white", "seed=" + std::to_string(spec.seed));
  return scene;
}

DamageSpec parse_damage(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw FormatError("damage '" + text + "': expected 'ellipse: ...' or 'bar: ...'");
  const auto kind = trim_copy(std::string_view(text).substr(0, colon));
  const auto v = parse_number_list(std::string_view(text).substr(colon + 1));
  if (v.size() < 4 || v.size() > 6) {
    throw FormatError("damage '" + text + "': expected row, col, a, b[, orientation_deg[, effect]]");
  }
  DamageSpec d;
  if (kind == "ellipse") {
    d.shape = DamageShape::kEllipse;
  } else if (kind == "bar") {
    d.shape = DamageShape::kBar;
  } else {
    throw FormatError("damage '" + text + "': unknown shape '" + kind + "'");
  }
  d.center_row = v[0];
  d.center_col = v[1];
  d.size_a = v[2];
  d.size_b = v[3];
  if (v.size() > 4) d.orientation_deg = v[4];
  if (v.size() > 5) d.effect = v[5];
  return d;
}

MaterialPatch parse_patch(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw FormatError("patch '" + text + "': expected 'material: row0, col0, rows, cols'");
  const auto v = parse_number_list(std::string_view(text).substr(colon + 1));
  if (v.size() != 4 || std::any_of(v.begin(), v.end(), [](double x) { return x < 0 || std::floor(x) != x; })) {
    throw FormatError("patch '" + text + "': expected four non-negative integers");
  }
  return {trim_copy(std::string_view(text).substr(0, colon)), static_cast<std::size_t>(v[0]),
          static_cast<std::size_t>(v[1]), static_cast<std::size_t>(v[2]), static_cast<std::size_t>(v[3])};
}

// "name: baseline, slope, pivot | center, width, amplitude | ..."
MaterialSignature parse_material(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw FormatError("material '" + text + "': expected 'name: baseline, slope, pivot'");
  MaterialSignature sig;
  sig.name = trim_copy(std::string_view(text).substr(0, colon));
  std::string rest = text.substr(colon + 1);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto bar = rest.find('|', start);
    parts.push_back(rest.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  const auto head = parse_number_list(parts[0]);
  if (head.size() != 3) throw FormatError("material '" + sig.name + "': expected baseline, slope, pivot");
  sig.baseline = head[0];
  sig.slope_per_nm = head[1];
  sig.pivot_nm = head[2];
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const auto bump = parse_number_list(parts[k]);
    if (bump.size() != 3 || !(bump[1] > 0.0)) {
      throw FormatError("material '" + sig.name + "': bumps need center, width > 0, amplitude");
    }
    sig.bumps.push_back({bump[0], bump[1], bump[2]});
  }
  return sig;
}

}  // namespace

std::vector<double> WavelengthGrid::values() const {
  if (!(step_nm > 0.0) || !(max_nm >= min_nm)) throw InvalidArgument("wavelength grid: need step > 0 and max >= min");
  const auto n = static_cast<std::size_t>(std::floor((max_nm - min_nm) / step_nm + 1e-9)) + 1;
  std::vector<double> wl(n);
  for (std::size_t k = 0; k < n; ++k) wl[k] = min_nm + static_cast<double>(k) * step_nm;
  return wl;
}

bool DamageSpec::contains(double row, double col) const {
  const double t = orientation_deg * kDegToRad;
  const double dx = col - center_col, dy = row - center_row;
  const double u = dx * std::cos(t) + dy * std::sin(t);
  const double v = -dx * std::sin(t) + dy * std::cos(t);
  if (shape == DamageShape::kEllipse) return (u / size_a) * (u / size_a) + (v / size_b) * (v / size_b) <= 1.0;
  return std::fabs(u) <= 0.5 * size_a && std::fabs(v) <= 0.5 * size_b;
}

std::pair<double, double> DamageSpec::half_extent() const {
  const double t = orientation_deg * kDegToRad;
  const double c = std::fabs(std::cos(t)), s = std::fabs(std::sin(t));
  if (shape == DamageShape::kEllipse) {
    return {std::hypot(size_a * s, size_b * c), std::hypot(size_a * c, size_b * s)};
  }
  return {0.5 * size_a * s + 0.5 * size_b * c, 0.5 * size_a * c + 0.5 * size_b * s};
}

MaterialSignature SceneSpec::material(std::string_view name) const {
  for (const auto& m : materials) {
    if (m.name == name) return m;
  }
  return material_preset(name);
}

void SceneSpec::validate() const {
  if (lines == 0 || samples == 0) throw InvalidArgument("scene: lines and samples must be >= 1");
  const auto wl = grid.values();
  material(background).validate(wl);
  for (const auto& p : patches) {
    material(p.material).validate(wl);
    if (p.rows == 0 || p.cols == 0 || p.row0 + p.rows > lines || p.col0 + p.cols > samples) {
      throw InvalidArgument("scene: patch of '" + p.material + "' leaves the scene or is empty");
    }
  }
  for (const auto& d : damages) {
    if (!(d.effect > 0.0)) throw InvalidArgument("scene: damage effect must be > 0");
    if (!(d.size_a > 0.0 && d.size_b > 0.0)) throw InvalidArgument("scene: damage sizes must be > 0");
    const auto [hr, hc] = d.half_extent();
    if (d.center_row - hr < 0.0 || d.center_row + hr > static_cast<double>(lines - 1) || d.center_col - hc < 0.0 ||
        d.center_col + hc > static_cast<double>(samples - 1)) {
      throw InvalidArgument("scene: damage at (" + detail::num6(d.center_row) + ", " + detail::num6(d.center_col) +
                            ") does not fit inside the scene");
    }
  }
  for (std::size_t a = 0; a < damages.size(); ++a) {
    for (std::size_t b = a + 1; b < damages.size(); ++b) {
      if (damages[a].effect == damages[b].effect) continue;
      for (std::size_t i = 0; i < lines; ++i) {
        for (std::size_t j = 0; j < samples; ++j) {
          const auto y = static_cast<double>(i), x = static_cast<double>(j);
          if (damages[a].contains(y, x) && damages[b].contains(y, x)) {
            throw InvalidArgument("scene: damages " + std::to_string(a) + " and " + std::to_string(b) +
                                  " overlap with different effects");
          }
        }
      }
    }
  }
  if (noise_sigma < 0.0) throw InvalidArgument("scene: noise sigma must be >= 0");
  if (!(white_level > 0.0)) throw InvalidArgument("scene: white level must be > 0");
  if (std::fabs(illumination_ramp) >= 2.0) throw InvalidArgument("scene: illumination ramp must lie in (-2, 2)");
  if (!(gain_variation >= 0.0 && gain_variation < 1.0)) throw InvalidArgument("scene: gain variation must lie in [0, 1)");
}

SceneSpec parse_scene_spec(std::string_view text) {
  const auto kv = KeyValueFile::parse(text);
  kv.require_known({"lines", "samples", "wavelength.min", "wavelength.max", "wavelength.step", "background", "patch",
                    "damage", "material", "illumination.ramp", "noise.sigma", "noise.shot", "gain.variation",
                    "dark.level", "white.level", "reference.lines", "seed"});
  SceneSpec spec;
  spec.lines = kv.get_size("lines", spec.lines);
  spec.samples = kv.get_size("samples", spec.samples);
  spec.grid.min_nm = kv.get_double("wavelength.min", spec.grid.min_nm);
  spec.grid.max_nm = kv.get_double("wavelength.max", spec.grid.max_nm);
  spec.grid.step_nm = kv.get_double("wavelength.step", spec.grid.step_nm);
  spec.background = kv.get_string("background", spec.background);
  for (const auto& m : kv.get_all("material")) spec.materials.push_back(parse_material(m));
  for (const auto& p : kv.get_all("patch")) spec.patches.push_back(parse_patch(p));
  for (const auto& d : kv.get_all("damage")) spec.damages.push_back(parse_damage(d));
  spec.illumination_ramp = kv.get_double("illumination.ramp", spec.illumination_ramp);
  spec.noise_sigma = kv.get_double("noise.sigma", spec.noise_sigma);
  spec.shot_noise = kv.get_bool("noise.shot", spec.shot_noise);
  spec.gain_variation = kv.get_double("gain.variation", spec.gain_variation);
  spec.dark_level = kv.get_double("dark.level", spec.dark_level);
  spec.white_level = kv.get_double("white.level", spec.white_level);
  spec.reference_lines = kv.get_size("reference.lines", spec.reference_lines);
  spec.seed = kv.get_size("seed", static_cast<std::size_t>(spec.seed));
  return spec;
}

SceneSpec load_scene_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scene_spec(text.str());
}

Scene generate_scene(const SceneSpec& spec) {
  std::vector<double> rows(spec.lines);
  for (std::size_t i = 0; i < spec.lines; ++i) rows[i] = static_cast<double>(i);
  Scene scene = render(spec, rows);
  scene.raw.append_provenance("synth", "seed=" + std::to_string(spec.seed));
  return scene;
}

void ScanKinematics::validate() const {
  if (!(speed_mm_s > 0.0) || !(line_rate_hz > 0.0) || !(path_length_mm > 0.0)) {
    throw InvalidArgument("pushbroom_scan: speed, line rate and path length must be > 0");
  }
  if (!(tilt_deg >= 0.0 && tilt_deg < 90.0)) throw InvalidArgument("pushbroom_scan: tilt must lie in [0, 90)");
}

std::size_t ScanKinematics::line_count() const {
  validate();
  // Relative slack so that e.g. 200 * 49.6 / 16 lands on 620, not 619.
  return static_cast<std::size_t>(std::floor(path_length_mm * line_rate_hz / speed_mm_s * (1.0 + 1e-12)));
}

Scene pushbroom_scan(const SceneSpec& spec, const ScanKinematics& kinematics) {
  const std::size_t n = kinematics.line_count();
  if (n == 0) throw InvalidArgument("pushbroom_scan: scan path yields no lines");
  const double c = kinematics.tilt_deg == 0.0 ? 1.0 : std::cos(kinematics.tilt_deg * kDegToRad);
  std::vector<double> rows(n);
  for (std::size_t k = 0; k < n; ++k) rows[k] = kinematics.tilt_deg == 0.0 ? static_cast<double>(k) : static_cast<double>(k) / c;
  Scene scene = render(spec, rows);
  scene.raw.append_provenance("pushbroom_scan", "seed=" + std::to_string(spec.seed) + ", lines=" + std::to_string(n) +
                                                    ", tilt=" + detail::num6(kinematics.tilt_deg));
  return scene;
}

}  // namespace hsindt
