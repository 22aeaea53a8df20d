#include <cmath>

#include "hsindt/error.hpp"
#include "hsindt/synth.hpp"

namespace hsindt {
namespace {

constexpr double kTurningPointNm = 1147.0;

MaterialSignature adhesive_base(std::string name, double crossing_nm) {
  return {std::move(name), 0.30, 0.0001, crossing_nm, {{1200.0, 50.0, 0.03}}};
}

MaterialSignature with_extra_slope(MaterialSignature s, std::string name, double extra_slope, double offset) {
  s.name = std::move(name);
  s.slope_per_nm += extra_slope;
  s.baseline += offset;
  return s;
}

}  // namespace

double MaterialSignature::reflectance(double wavelength_nm) const {
  double r = baseline + slope_per_nm * (wavelength_nm - pivot_nm);
  for (const auto& bump : bumps) {
    const double z = (wavelength_nm - bump.center_nm) / bump.width_nm;
    r += bump.amplitude * std::exp(-0.5 * z * z);
  }
  return r;
}

void MaterialSignature::validate(const std::vector<double>& wavelengths) const {
  for (double wl : wavelengths) {
    const double r = reflectance(wl);
    if (!(r > 0.0 && r < 1.2)) {
      throw InvalidArgument("material '" + name + "': reflectance " + std::to_string(r) + " at " +
                            std::to_string(wl) + " nm outside (0, 1.2)");
    }
  }
}

std::pair<MaterialSignature, MaterialSignature> crossing_pair(double crossing_nm) {
  auto adhesive = adhesive_base("adhesive", crossing_nm);
  auto normal = with_extra_slope(adhesive, "normal", 0.0003, 0.0);
  return {normal, adhesive};
}

std::vector<std::string> material_preset_names() {
  return {"cfrp-normal", "cfrp-adhesive", "al-normal", "al-adhesive", "grinding", "grinding-defect"};
}

MaterialSignature material_preset(std::string_view name) {
  const auto adhesive = adhesive_base("al-adhesive", kTurningPointNm);
  if (name == "al-adhesive") return adhesive;
  if (name == "al-normal") return with_extra_slope(adhesive, "al-normal", 0.0003, 0.0);
  if (name == "cfrp-adhesive") return with_extra_slope(adhesive, "cfrp-adhesive", 0.0, 0.01);
  if (name == "cfrp-normal") return with_extra_slope(adhesive, "cfrp-normal", -0.0003, 0.01);
  if (name == "grinding") return {"grinding", 0.25, 0.0, kTurningPointNm, {{1466.0, 80.0, 0.35}}};
  if (name == "grinding-defect") return {"grinding-defect", 0.25, 0.0, kTurningPointNm, {{1466.0, 80.0, 0.20}}};
  throw InvalidArgument("unknown material '" + std::string(name) + "'");
}

}  // namespace hsindt
