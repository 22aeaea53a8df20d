#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hsindt/hypercube.hpp"
#include "hsindt/image.hpp"
#include "hsindt/preprocess.hpp"

namespace hsindt {

// ---------------------------------------------------------------------------
// Material signatures
// ---------------------------------------------------------------------------

struct GaussianBump {
  double center_nm;
  double width_nm;  // standard deviation
  double amplitude;
};

// reflectance(l) = baseline + slope * (l - pivot) + sum of Gaussian bumps.
struct MaterialSignature {
  std::string name;
  double baseline = 0.3;
  double slope_per_nm = 0.0;
  double pivot_nm = 1147.0;
  std::vector<GaussianBump> bumps;

  double reflectance(double wavelength_nm) const;
  // Throws InvalidArgument unless reflectance stays inside (0, 1.2) on the grid.
  void validate(const std::vector<double>& wavelengths) const;
};

// Presets: cfrp-normal, cfrp-adhesive, al-normal, al-adhesive, grinding,
// grinding-defect. The normal/adhesive pairs cross at 1147 nm (Al-normal
// below Al-adhesive before it, above after; CFRP the other way round);
// grinding > grinding-defect > cfrp-normal over 1333-1600 nm.
std::vector<std::string> material_preset_names();
MaterialSignature material_preset(std::string_view name);

// A normal/adhesive pair whose mean spectra cross exactly at `crossing_nm`.
std::pair<MaterialSignature, MaterialSignature> crossing_pair(double crossing_nm);

// ---------------------------------------------------------------------------
// Scene description
// ---------------------------------------------------------------------------

struct WavelengthGrid {
  double min_nm = 950.0;
  double max_nm = 1700.0;
  double step_nm = 10.0;

  std::vector<double> values() const;
};

struct MaterialPatch {
  std::string material;
  std::size_t row0 = 0;
  std::size_t col0 = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

enum class DamageShape { kEllipse, kBar };

// Ellipse: size_a / size_b are the semi-axes. Bar: size_a is the length and
// size_b the width. Orientation is measured from the column axis toward
// increasing row. Inside the damage reflectance is multiplied by `effect`.
struct DamageSpec {
  DamageShape shape = DamageShape::kEllipse;
  double center_row = 0.0;
  double center_col = 0.0;
  double size_a = 1.0;
  double size_b = 1.0;
  double orientation_deg = 0.0;
  double effect = 0.6;

  bool contains(double row, double col) const;
  // Half extents of the axis-aligned bounding box (rows, cols).
  std::pair<double, double> half_extent() const;
};

struct SceneSpec {
  std::size_t lines = 128;
  std::size_t samples = 160;
  WavelengthGrid grid{};
  std::string background = "cfrp-normal";
  std::vector<MaterialPatch> patches;
  std::vector<DamageSpec> damages;
  std::vector<MaterialSignature> materials;  // user signatures, looked up before presets

  // illumination(j) = 1 + ramp * (j / (J - 1) - 0.5)
  double illumination_ramp = 0.0;
  // Gaussian noise, standard deviation in reflectance units.
  double noise_sigma = 0.0;
  // Adds Gaussian noise with variance equal to the signal counts.
  bool shot_noise = false;
  double gain_variation = 0.05;  // fixed-pattern sensor gain spread
  double dark_level = 100.0;     // counts
  double white_level = 4000.0;   // counts for reflectance 1 at unit gain
  std::size_t reference_lines = 1;
  std::uint64_t seed = 42;

  MaterialSignature material(std::string_view name) const;
  // Throws InvalidArgument on out-of-range geometry, unknown materials,
  // invalid signatures or overlapping damages with different effects.
  void validate() const;
};

// Key/value text form; see README for the schema.
SceneSpec parse_scene_spec(std::string_view text);
SceneSpec load_scene_spec(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

struct Scene {
  Hypercube raw;          // raw-radiance counts
  Hypercube reflectance;  // noise-free reflectance field
  Hypercube dark_recording;
  Hypercube white_recording;
  CalibrationRefs refs;
  std::vector<BinaryMask> damage_truth;  // one per damage
  BinaryMask truth;                      // union
};

// raw(i,j,b) = illum(j) gain(j,b) W refl(material(i,j), l_b) effect(i,j) + dark(j,b) + noise.
// Deterministic for a fixed seed; noise streams are split per line.
Scene generate_scene(const SceneSpec& spec);

struct ScanKinematics {
  double speed_mm_s = 16.0;
  double line_rate_hz = 49.6;
  double path_length_mm = 200.0;
  double tilt_deg = 0.0;

  // floor(path_length * line_rate / speed).
  std::size_t line_count() const;
  double duration_s() const { return path_length_mm / speed_mm_s; }
  void validate() const;
};

// Push-broom acquisition of the continuous scene: one line per exposure,
// line_count() lines. Scene rows are at the nominal pitch speed / line_rate;
// with the sample tilted by theta, line k samples scene row k / cos(theta).
Scene pushbroom_scan(const SceneSpec& spec, const ScanKinematics& kinematics);

}  // namespace hsindt
