#include "hsindt/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hsindt/error.hpp"
#include "numfmt.hpp"

namespace hsindt {

Hypercube stitch(const Hypercube& left, const Hypercube& right, const StitchSpec& spec) {
  if (left.lines() != right.lines() || left.samples() != right.samples() || left.bands() != right.bands()) {
    throw InvalidArgument("stitch: scans differ in lines, samples or bands");
  }
  if (left.wavelengths() != right.wavelengths()) throw InvalidArgument("stitch: wavelength axes differ");
  if (left.kind() != right.kind()) throw InvalidArgument("stitch: scans are of different kinds");
  const std::size_t x = left.samples();
  if (spec.overlap > x) {
    throw InvalidArgument("stitch: overlap " + std::to_string(spec.overlap) + " exceeds scan width " +
                          std::to_string(x));
  }
  const std::size_t width = 2 * x - spec.overlap;
  const std::size_t seam = x - spec.overlap;  // first overlap column in output coordinates

  Hypercube out(left.lines(), width, left.bands(), left.kind());
  out.inherit_attributes(left);
  out.set_wavelengths(left.wavelengths());
  for (std::size_t b = 0; b < left.bands(); ++b) {
    for (std::size_t i = 0; i < left.lines(); ++i) {
      for (std::size_t j = 0; j < width; ++j) {
        double v;
        if (j < seam) {
          v = left.at(i, j, b);
        } else if (j < x) {
          const double a = left.at(i, j, b);
          v = spec.blend == Blend::kAverage ? 0.5 * (a + right.at(i, j - seam, b)) : a;
        } else {
          v = right.at(i, j - seam, b);
        }
        out.at(i, j, b) = v;
      }
    }
  }
  if (left.has_validity_mask() || right.has_validity_mask()) {
    for (std::size_t i = 0; i < left.lines(); ++i) {
      for (std::size_t j = 0; j < width; ++j) {
        bool ok = true;
        if (j < x) ok = left.valid(i, j);
        if (j >= seam) ok = ok && right.valid(i, j - seam);
        out.set_valid(i, j, ok);
      }
    }
  }
  out.append_provenance("stitch", "overlap=" + std::to_string(spec.overlap) +
                                      (spec.blend == Blend::kAverage ? ", blend=average" : ", blend=take-first"));
  return out;
}

Hypercube resample_lines(const Hypercube& cube, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw InvalidArgument("resample_lines: factor must be > 0");
  const auto lines = static_cast<std::size_t>(std::llround(static_cast<double>(cube.lines()) * factor));
  if (lines == 0) throw InvalidArgument("resample_lines: output would have no lines");
  Hypercube out(lines, cube.samples(), cube.bands(), cube.kind());
  out.inherit_attributes(cube);
  out.set_wavelengths(cube.wavelengths());
  const std::size_t last = cube.lines() - 1;

  std::vector<std::size_t> lo(lines), hi(lines);
  std::vector<double> frac(lines);
  for (std::size_t k = 0; k < lines; ++k) {
    const double u = static_cast<double>(k) / factor;
    if (u >= static_cast<double>(last)) {
      lo[k] = hi[k] = last;
      frac[k] = 0.0;
    } else {
      lo[k] = static_cast<std::size_t>(std::floor(u));
      hi[k] = lo[k] + 1;
      frac[k] = u - static_cast<double>(lo[k]);
    }
  }
  for (std::size_t b = 0; b < cube.bands(); ++b) {
    for (std::size_t k = 0; k < lines; ++k) {
      for (std::size_t j = 0; j < cube.samples(); ++j) {
        const double a = cube.at(lo[k], j, b);
        out.at(k, j, b) = frac[k] == 0.0 ? a : a + frac[k] * (cube.at(hi[k], j, b) - a);
      }
    }
  }
  if (cube.has_validity_mask()) {
    for (std::size_t k = 0; k < lines; ++k)
      for (std::size_t j = 0; j < cube.samples(); ++j)
        out.set_valid(k, j, cube.valid(lo[k], j) && (frac[k] == 0.0 || cube.valid(hi[k], j)));
  }
  out.append_provenance("resample_lines", "factor=" + detail::num6(factor));
  return out;
}

Hypercube tilt_correct(const Hypercube& cube, const TiltSpec& spec) {
  if (!(spec.theta_deg >= 0.0 && spec.theta_deg < 90.0)) throw InvalidArgument("tilt_correct: theta must lie in [0, 90)");
  if (spec.theta_deg == 0.0) {
    Hypercube out = cube;
    out.append_provenance("tilt_correct", "theta=0");
    return out;
  }
  const double c = std::cos(spec.theta_deg * std::numbers::pi / 180.0);
  Hypercube out = resample_lines(cube, 1.0 / c);
  auto prov = out.provenance();
  prov.back() = {"tilt_correct", "theta=" + detail::num6(spec.theta_deg)};
  out.set_provenance(std::move(prov));
  return out;
}

}  // namespace hsindt
