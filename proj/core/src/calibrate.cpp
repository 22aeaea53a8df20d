#include <string>

#include "hsindt/error.hpp"
#include "hsindt/preprocess.hpp"

namespace hsindt {

ReferenceFrame average_lines(const Hypercube& recording) {
  ReferenceFrame frame(recording.samples(), recording.bands());
  const double n = static_cast<double>(recording.lines());
  for (std::size_t j = 0; j < recording.samples(); ++j) {
    for (std::size_t b = 0; b < recording.bands(); ++b) {
      double sum = 0.0;
      for (std::size_t i = 0; i < recording.lines(); ++i) sum += recording.at(i, j, b);
      frame(j, b) = sum / n;
    }
  }
  return frame;
}

CalibrationRefs make_calibration_refs(const Hypercube& dark_recording, const Hypercube& white_recording) {
  if (dark_recording.samples() != white_recording.samples() || dark_recording.bands() != white_recording.bands()) {
    throw InvalidArgument("calibration references: dark and white recordings differ in samples/bands");
  }
  return {average_lines(dark_recording), average_lines(white_recording)};
}

CalibrationResult calibrate(const Hypercube& raw, const CalibrationRefs& refs) {
  if (raw.kind() != CubeKind::kRawRadiance) {
    throw InvalidArgument("calibrate: expected a raw-radiance cube, got " + std::string(to_string(raw.kind())));
  }
  const auto& d = refs.dark;
  const auto& w = refs.white;
  if (d.samples() != raw.samples() || w.samples() != raw.samples() || d.bands() != raw.bands() ||
      w.bands() != raw.bands()) {
    throw InvalidArgument("calibrate: reference frames must be " + std::to_string(raw.samples()) + " samples x " +
                          std::to_string(raw.bands()) + " bands");
  }

  CalibrationResult result{raw, {}};
  Hypercube& out = result.cube;
  std::vector<bool> dead_column(raw.samples(), false);
  for (std::size_t j = 0; j < raw.samples(); ++j) {
    for (std::size_t b = 0; b < raw.bands(); ++b) {
      if (!(w(j, b) - d(j, b) > 0.0)) {
        result.dead.push_back({j, b});
        dead_column[j] = true;
      }
    }
  }
  if (result.dead.size() == raw.samples() * raw.bands()) {
    throw DegenerateInput("calibrate: every sensor position is dead (white <= dark)");
  }

  for (std::size_t b = 0; b < raw.bands(); ++b) {
    for (std::size_t i = 0; i < raw.lines(); ++i) {
      for (std::size_t j = 0; j < raw.samples(); ++j) {
        const double span = w(j, b) - d(j, b);
        out.at(i, j, b) = span > 0.0 ? (raw.at(i, j, b) - d(j, b)) / span : kMaskedValue;
      }
    }
  }
  for (std::size_t j = 0; j < raw.samples(); ++j) {
    if (!dead_column[j]) continue;
    for (std::size_t i = 0; i < raw.lines(); ++i) out.set_valid(i, j, false);
  }
  out.set_kind(CubeKind::kReflectance);
  out.append_provenance("calibrate", "dead=" + std::to_string(result.dead.size()));
  return result;
}

}  // namespace hsindt
