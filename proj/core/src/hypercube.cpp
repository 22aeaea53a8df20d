#include "hsindt/hypercube.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hsindt/error.hpp"

namespace hsindt {

Image::Image(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw InvalidArgument("Image: data length does not match rows*cols");
  }
}

BinaryMask::BinaryMask(std::size_t rows, std::size_t cols, bool fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill ? 1 : 0) {}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](std::uint8_t v) { return v != 0; }));
}

std::string_view to_string(CubeKind kind) {
  switch (kind) {
    case CubeKind::kRawRadiance:
      return "raw-radiance";
    case CubeKind::kReflectance:
      return "reflectance";
    case CubeKind::kSnvCorrected:
      return "snv-corrected";
    case CubeKind::kFeature:
      return "feature";
  }
  return "unknown";
}

CubeKind parse_cube_kind(std::string_view text) {
  for (auto k : {CubeKind::kRawRadiance, CubeKind::kReflectance, CubeKind::kSnvCorrected, CubeKind::kFeature}) {
    if (to_string(k) == text) return k;
  }
  throw FormatError("unknown cube kind '" + std::string(text) + "'");
}

bool kind_transition_allowed(CubeKind from, CubeKind to) {
  if (from == to || to == CubeKind::kFeature) return true;
  if (from == CubeKind::kFeature) return false;
  return static_cast<int>(to) > static_cast<int>(from);
}

Hypercube::Hypercube(std::size_t lines, std::size_t samples, std::size_t bands, CubeKind kind)
    : Hypercube(lines, samples, bands, std::vector<double>(lines * samples * bands, 0.0), {}, kind) {}

Hypercube::Hypercube(std::size_t lines, std::size_t samples, std::size_t bands, std::vector<double> values,
                     std::vector<double> wavelengths, CubeKind kind)
    : lines_(lines), samples_(samples), bands_(bands), values_(std::move(values)), kind_(kind) {
  if (lines_ == 0 || samples_ == 0 || bands_ == 0) {
    throw InvalidArgument("Hypercube: lines, samples and bands must all be >= 1");
  }
  if (values_.size() != lines_ * samples_ * bands_) {
    throw InvalidArgument("Hypercube: value count does not match lines*samples*bands");
  }
  set_wavelengths(std::move(wavelengths));
}

void Hypercube::set_wavelengths(std::vector<double> wavelengths) {
  if (!wavelengths.empty()) {
    if (wavelengths.size() != bands_) {
      throw InvalidArgument("Hypercube: wavelength count " + std::to_string(wavelengths.size()) +
                            " does not match band count " + std::to_string(bands_));
    }
    for (std::size_t b = 1; b < wavelengths.size(); ++b) {
      if (!(wavelengths[b] > wavelengths[b - 1])) {
        throw InvalidArgument("Hypercube: wavelengths must be strictly increasing");
      }
    }
  }
  wavelengths_ = std::move(wavelengths);
}

void Hypercube::set_kind(CubeKind kind) {
  if (!kind_transition_allowed(kind_, kind)) {
    throw InvalidArgument("Hypercube: kind transition " + std::string(to_string(kind_)) + " -> " +
                          std::string(to_string(kind)) + " is not allowed");
  }
  kind_ = kind;
}

void Hypercube::append_provenance(std::string operation, std::string parameters) {
  provenance_.push_back({std::move(operation), std::move(parameters)});
}

std::string Hypercube::provenance_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < provenance_.size(); ++k) {
    if (k) out << "; ";
    out << provenance_[k].operation << '(' << provenance_[k].parameters << ')';
  }
  return out.str();
}

void Hypercube::set_valid(std::size_t i, std::size_t j, bool valid) {
  if (validity_.empty()) {
    if (valid) return;
    validity_.assign(plane_size(), 1);
  }
  validity_[i * samples_ + j] = valid ? 1 : 0;
}

std::size_t Hypercube::valid_count() const {
  if (validity_.empty()) return plane_size();
  return static_cast<std::size_t>(std::count(validity_.begin(), validity_.end(), std::uint8_t{1}));
}

void Hypercube::set_validity(std::vector<std::uint8_t> validity) {
  if (!validity.empty() && validity.size() != plane_size()) {
    throw InvalidArgument("Hypercube: validity mask must have lines*samples entries");
  }
  validity_ = std::move(validity);
}

void Hypercube::inherit_attributes(const Hypercube& source) {
  kind_ = source.kind_;
  provenance_ = source.provenance_;
  metadata_ = source.metadata_;
}

Image slice_band(const Hypercube& cube, std::size_t band) {
  if (band >= cube.bands()) {
    throw InvalidArgument("slice_band: band " + std::to_string(band) + " out of range [0, " +
                          std::to_string(cube.bands()) + ")");
  }
  auto plane = cube.band(band);
  return Image(cube.lines(), cube.samples(), std::vector<double>(plane.begin(), plane.end()));
}

std::size_t band_for_wavelength(const Hypercube& cube, double wavelength_nm) {
  const auto& wl = cube.wavelengths();
  if (wl.empty()) throw InvalidArgument("band_for_wavelength: cube has no wavelength axis");
  if (!(wavelength_nm >= wl.front() && wavelength_nm <= wl.back())) {
    throw InvalidArgument("band_for_wavelength: " + std::to_string(wavelength_nm) + " nm outside [" +
                          std::to_string(wl.front()) + ", " + std::to_string(wl.back()) + "]");
  }
  auto upper = std::lower_bound(wl.begin(), wl.end(), wavelength_nm);
  auto hi = static_cast<std::size_t>(upper - wl.begin());
  if (hi == 0) return 0;
  if (wl[hi] == wavelength_nm) return hi;
  std::size_t lo = hi - 1;
  // Ties go to the lower band.
  return (wavelength_nm - wl[lo] <= wl[hi] - wavelength_nm) ? lo : hi;
}

Image slice_wavelength(const Hypercube& cube, double wavelength_nm) {
  return slice_band(cube, band_for_wavelength(cube, wavelength_nm));
}

std::vector<double> spectrum_at(const Hypercube& cube, std::size_t line, std::size_t sample) {
  if (line >= cube.lines() || sample >= cube.samples()) {
    throw InvalidArgument("spectrum_at: pixel (" + std::to_string(line) + ", " + std::to_string(sample) +
                          ") out of range");
  }
  std::vector<double> spectrum(cube.bands());
  for (std::size_t b = 0; b < cube.bands(); ++b) spectrum[b] = cube.at(line, sample, b);
  return spectrum;
}

Hypercube cube_from_image(const Image& image, CubeKind kind) {
  return Hypercube(image.rows(), image.cols(), 1, image.data(), {}, kind);
}

}  // namespace hsindt
