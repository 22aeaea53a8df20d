#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsindt/image.hpp"

namespace hsindt {

// Processing stage a cube belongs to. Transitions are monotone:
// raw radiance -> reflectance -> SNV corrected; any kind may become a feature cube.
enum class CubeKind { kRawRadiance, kReflectance, kSnvCorrected, kFeature };

std::string_view to_string(CubeKind kind);
CubeKind parse_cube_kind(std::string_view text);
bool kind_transition_allowed(CubeKind from, CubeKind to);

struct ProvenanceEntry {
  std::string operation;
  std::string parameters;

  bool operator==(const ProvenanceEntry&) const = default;
};

// I x J x B volume (lines x samples x bands), stored band-sequential:
// values[(b * lines + i) * samples + j]. Every algorithm in the library reads
// this layout only; file interleave is handled at the ENVI boundary.
//
// An optional per-pixel validity mask marks pixels that carry no usable data
// (dead sensor positions after calibration). Invalid pixels are excluded from
// global statistics and receive zero weight in spatial filters.
class Hypercube {
 public:
  Hypercube() = default;
  Hypercube(std::size_t lines, std::size_t samples, std::size_t bands,
            CubeKind kind = CubeKind::kRawRadiance);
  Hypercube(std::size_t lines, std::size_t samples, std::size_t bands, std::vector<double> values,
            std::vector<double> wavelengths = {}, CubeKind kind = CubeKind::kRawRadiance);

  std::size_t lines() const { return lines_; }
  std::size_t samples() const { return samples_; }
  std::size_t bands() const { return bands_; }
  std::size_t plane_size() const { return lines_ * samples_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  std::size_t index(std::size_t i, std::size_t j, std::size_t b) const {
    return (b * lines_ + i) * samples_ + j;
  }
  double at(std::size_t i, std::size_t j, std::size_t b) const { return values_[index(i, j, b)]; }
  double& at(std::size_t i, std::size_t j, std::size_t b) { return values_[index(i, j, b)]; }

  std::span<const double> band(std::size_t b) const {
    return {values_.data() + b * plane_size(), plane_size()};
  }
  std::span<double> band(std::size_t b) { return {values_.data() + b * plane_size(), plane_size()}; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  const std::vector<double>& wavelengths() const { return wavelengths_; }
  bool has_wavelengths() const { return !wavelengths_.empty(); }
  // Throws InvalidArgument unless empty or length B and strictly increasing.
  void set_wavelengths(std::vector<double> wavelengths);

  CubeKind kind() const { return kind_; }
  // Throws InvalidArgument on a non-monotone transition.
  void set_kind(CubeKind kind);

  const std::vector<ProvenanceEntry>& provenance() const { return provenance_; }
  void append_provenance(std::string operation, std::string parameters = {});
  void set_provenance(std::vector<ProvenanceEntry> provenance) { provenance_ = std::move(provenance); }
  std::string provenance_string() const;

  bool has_validity_mask() const { return !validity_.empty(); }
  bool valid(std::size_t i, std::size_t j) const {
    return validity_.empty() || validity_[i * samples_ + j] != 0;
  }
  void set_valid(std::size_t i, std::size_t j, bool valid);
  std::size_t valid_count() const;
  const std::vector<std::uint8_t>& validity() const { return validity_; }
  void set_validity(std::vector<std::uint8_t> validity);

  // Unknown ENVI header keys, preserved verbatim in header order.
  using Metadata = std::vector<std::pair<std::string, std::string>>;
  const Metadata& metadata() const { return metadata_; }
  Metadata& metadata() { return metadata_; }

  // Copies shape-independent attributes (wavelengths excluded) from another cube.
  void inherit_attributes(const Hypercube& source);

 private:
  std::size_t lines_ = 0;
  std::size_t samples_ = 0;
  std::size_t bands_ = 0;
  std::vector<double> values_;
  std::vector<double> wavelengths_;
  CubeKind kind_ = CubeKind::kRawRadiance;
  std::vector<ProvenanceEntry> provenance_;
  std::vector<std::uint8_t> validity_;
  Metadata metadata_;
};

// I x J plane at band b.
Image slice_band(const Hypercube& cube, std::size_t band);
// Nearest band to a wavelength in nm; an exact midpoint goes to the lower band.
std::size_t band_for_wavelength(const Hypercube& cube, double wavelength_nm);
Image slice_wavelength(const Hypercube& cube, double wavelength_nm);
std::vector<double> spectrum_at(const Hypercube& cube, std::size_t line, std::size_t sample);

// Builds a B = 1 cube from a plane.
Hypercube cube_from_image(const Image& image, CubeKind kind = CubeKind::kFeature);

}  // namespace hsindt
