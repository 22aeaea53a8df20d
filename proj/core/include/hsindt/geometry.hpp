#pragma once

#include <cstddef>

#include "hsindt/hypercube.hpp"

namespace hsindt {

enum class Blend { kAverage, kTakeFirst };

struct StitchSpec {
  std::size_t overlap = 0;  // columns shared by the two scans
  Blend blend = Blend::kAverage;
};

// Places `right` after `left` along the sample axis, sharing `overlap`
// columns: output width 2x - overlap. Both scans need the same lines, samples,
// bands, wavelengths and kind.
Hypercube stitch(const Hypercube& left, const Hypercube& right, const StitchSpec& spec);

struct TiltSpec {
  double theta_deg = 0.0;  // sample placing angle, [0, 90)
};

// Linear resampling along the scan (line) axis. Output line k reads input
// position k / factor; the output has round(lines * factor) lines and
// positions past the last input line repeat it.
Hypercube resample_lines(const Hypercube& cube, double factor);

// Undoes the along-scan foreshortening of a tilted acquisition. With the
// sample tilted by theta, consecutive lines are step / cos(theta) apart on
// the surface, so restoring the nominal pitch stretches the line axis by
// 1 / cos(theta): output lines = round(I / cos(theta)).
Hypercube tilt_correct(const Hypercube& cube, const TiltSpec& spec);

}  // namespace hsindt
