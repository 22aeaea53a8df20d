#include <string>

#include "hsindt/error.hpp"
#include "hsindt/preprocess.hpp"

namespace hsindt {

Hypercube bin(const Hypercube& cube, std::size_t spatial_factor, std::size_t spectral_factor) {
  if (spatial_factor < 1 || spectral_factor < 1) throw InvalidArgument("bin: factors must be >= 1");
  if (spatial_factor > cube.samples()) {
    throw InvalidArgument("bin: spatial factor " + std::to_string(spatial_factor) + " exceeds " +
                          std::to_string(cube.samples()) + " samples");
  }
  if (spectral_factor > cube.bands()) {
    throw InvalidArgument("bin: spectral factor " + std::to_string(spectral_factor) + " exceeds " +
                          std::to_string(cube.bands()) + " bands");
  }
  const std::size_t samples = cube.samples() / spatial_factor;
  const std::size_t bands = cube.bands() / spectral_factor;
  const double block = static_cast<double>(spatial_factor * spectral_factor);

  Hypercube out(cube.lines(), samples, bands, cube.kind());
  out.inherit_attributes(cube);
  for (std::size_t b = 0; b < bands; ++b) {
    for (std::size_t i = 0; i < cube.lines(); ++i) {
      for (std::size_t j = 0; j < samples; ++j) {
        double sum = 0.0;
        for (std::size_t bb = b * spectral_factor; bb < (b + 1) * spectral_factor; ++bb) {
          for (std::size_t jj = j * spatial_factor; jj < (j + 1) * spatial_factor; ++jj) sum += cube.at(i, jj, bb);
        }
        out.at(i, j, b) = sum / block;
      }
    }
  }
  if (cube.has_wavelengths()) {
    std::vector<double> wl(bands);
    for (std::size_t b = 0; b < bands; ++b) {
      double sum = 0.0;
      for (std::size_t bb = b * spectral_factor; bb < (b + 1) * spectral_factor; ++bb) sum += cube.wavelengths()[bb];
      wl[b] = sum / static_cast<double>(spectral_factor);
    }
    out.set_wavelengths(std::move(wl));
  }
  if (cube.has_validity_mask()) {
    for (std::size_t i = 0; i < cube.lines(); ++i) {
      for (std::size_t j = 0; j < samples; ++j) {
        bool ok = true;
        for (std::size_t jj = j * spatial_factor; jj < (j + 1) * spatial_factor; ++jj) ok = ok && cube.valid(i, jj);
        out.set_valid(i, j, ok);
      }
    }
  }
  out.append_provenance("bin", "spatial=" + std::to_string(spatial_factor) +
                                   ", spectral=" + std::to_string(spectral_factor));
  return out;
}

}  // namespace hsindt
