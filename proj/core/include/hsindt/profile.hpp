#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hsindt/detect.hpp"
#include "hsindt/hypercube.hpp"

namespace hsindt {

// Region of interest: a rectangle, or an explicit pixel list when `pixels`
// is non-empty.
struct Roi {
  std::string name;
  std::size_t row0 = 0;
  std::size_t col0 = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Pixel> pixels;

  static Roi rectangle(std::string name, std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols);
  static Roi pixel_set(std::string name, std::vector<Pixel> pixels);
};

// Parses "name:row0,col0,rows,cols". Throws FormatError.
Roi parse_roi(const std::string& text);

struct SpectralProfile {
  std::string name;
  std::vector<double> mean;
  std::vector<double> std;  // population
  std::size_t n = 0;
  std::vector<double> wavelengths;
};

// Per-band mean and population std over the ROI. Throws InvalidArgument for
// an empty or out-of-bounds ROI.
SpectralProfile roi_profile(const Hypercube& cube, const Roi& roi);

struct ProfileCrossings {
  // Wavelengths where mean1 - mean2 changes sign strictly between adjacent
  // bands, linearly interpolated.
  std::vector<double> crossings;
  // Wavelengths of bands where the difference is exactly zero.
  std::vector<double> tangencies;
};

ProfileCrossings profile_crossings(const SpectralProfile& p1, const SpectralProfile& p2);

struct ProfileSeparation {
  std::vector<double> score;  // |m1 - m2| / sqrt((s1^2 + s2^2) / 2 + 1e-12)
  std::size_t best_band = 0;
};

ProfileSeparation profile_separation(const SpectralProfile& p1, const SpectralProfile& p2);

}  // namespace hsindt
