#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "hsindt/profile.hpp"

namespace hsindt {

// 8-bit RGB raster, row-major.
struct RgbImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // 3 * width * height
};

// Line chart of mean spectra with a translucent +-std band per profile,
// drawn on a shared wavelength/value frame. No text is rendered.
RgbImage render_profile_chart(const std::vector<SpectralProfile>& profiles, std::size_t width = 800,
                              std::size_t height = 480);

void write_png(const RgbImage& image, const std::filesystem::path& path);

}  // namespace hsindt
