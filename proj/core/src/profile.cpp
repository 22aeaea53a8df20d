#include "hsindt/profile.hpp"

#include <cmath>
#include <sstream>

#include "hsindt/error.hpp"

namespace hsindt {
namespace {

void check_axes(const SpectralProfile& p1, const SpectralProfile& p2, const char* what) {
  if (p1.mean.size() != p2.mean.size() || p1.wavelengths != p2.wavelengths) {
    throw InvalidArgument(std::string(what) + ": profiles have different wavelength axes");
  }
}

}  // namespace

Roi Roi::rectangle(std::string name, std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) {
  Roi roi;
  roi.name = std::move(name);
  roi.row0 = row0;
  roi.col0 = col0;
  roi.rows = rows;
  roi.cols = cols;
  return roi;
}

Roi Roi::pixel_set(std::string name, std::vector<Pixel> pixels) {
  Roi roi;
  roi.name = std::move(name);
  roi.pixels = std::move(pixels);
  return roi;
}

Roi parse_roi(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) throw FormatError("ROI '" + text + "': expected name:row0,col0,rows,cols");
  std::vector<std::size_t> v;
  std::istringstream in(text.substr(colon + 1));
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t pos = 0;
      const long long n = std::stoll(item, &pos);
      if (n < 0) throw std::invalid_argument(item);
      v.push_back(static_cast<std::size_t>(n));
    } catch (const std::exception&) {
      throw FormatError("ROI '" + text + "': bad number '" + item + "'");
    }
  }
  if (v.size() != 4) throw FormatError("ROI '" + text + "': expected four numbers");
  return Roi::rectangle(text.substr(0, colon), v[0], v[1], v[2], v[3]);
}

SpectralProfile roi_profile(const Hypercube& cube, const Roi& roi) {
  std::vector<Pixel> pixels = roi.pixels;
  if (pixels.empty()) {
    if (roi.rows == 0 || roi.cols == 0) throw InvalidArgument("roi_profile: ROI '" + roi.name + "' is empty");
    for (std::size_t r = roi.row0; r < roi.row0 + roi.rows; ++r)
      for (std::size_t c = roi.col0; c < roi.col0 + roi.cols; ++c) pixels.push_back({r, c});
  }
  for (const auto& p : pixels) {
    if (p.row >= cube.lines() || p.col >= cube.samples()) {
      throw InvalidArgument("roi_profile: ROI '" + roi.name + "' leaves the cube bounds");
    }
  }
  SpectralProfile prof;
  prof.name = roi.name;
  prof.n = pixels.size();
  prof.wavelengths = cube.wavelengths();
  prof.mean.resize(cube.bands());
  prof.std.resize(cube.bands());
  const double n = static_cast<double>(pixels.size());
  for (std::size_t b = 0; b < cube.bands(); ++b) {
    double sum = 0.0;
    for (const auto& p : pixels) sum += cube.at(p.row, p.col, b);
    const double mu = sum / n;
    double ss = 0.0;
    for (const auto& p : pixels) ss += (cube.at(p.row, p.col, b) - mu) * (cube.at(p.row, p.col, b) - mu);
    prof.mean[b] = mu;
    prof.std[b] = std::sqrt(ss / n);
  }
  return prof;
}

ProfileCrossings profile_crossings(const SpectralProfile& p1, const SpectralProfile& p2) {
  check_axes(p1, p2, "profile_crossings");
  const auto& wl = p1.wavelengths;
  auto axis = [&](std::size_t b) { return wl.empty() ? static_cast<double>(b) : wl[b]; };
  ProfileCrossings out;
  const std::size_t bands = p1.mean.size();
  std::vector<double> diff(bands);
  for (std::size_t b = 0; b < bands; ++b) diff[b] = p1.mean[b] - p2.mean[b];
  for (std::size_t b = 0; b < bands; ++b) {
    if (diff[b] == 0.0) out.tangencies.push_back(axis(b));
    if (b + 1 < bands && ((diff[b] < 0.0 && diff[b + 1] > 0.0) || (diff[b] > 0.0 && diff[b + 1] < 0.0))) {
      const double t = diff[b] / (diff[b] - diff[b + 1]);
      out.crossings.push_back(axis(b) + t * (axis(b + 1) - axis(b)));
    }
  }
  return out;
}

ProfileSeparation profile_separation(const SpectralProfile& p1, const SpectralProfile& p2) {
  check_axes(p1, p2, "profile_separation");
  ProfileSeparation out;
  out.score.resize(p1.mean.size());
  for (std::size_t b = 0; b < p1.mean.size(); ++b) {
    const double pooled = (p1.std[b] * p1.std[b] + p2.std[b] * p2.std[b]) / 2.0;
    out.score[b] = std::fabs(p1.mean[b] - p2.mean[b]) / std::sqrt(pooled + 1e-12);
    if (out.score[b] > out.score[out.best_band]) out.best_band = b;
  }
  return out;
}

}  // namespace hsindt
