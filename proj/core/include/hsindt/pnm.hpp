#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "hsindt/hypercube.hpp"
#include "hsindt/image.hpp"

namespace hsindt {

// Binary PGM (P5, maxval 255). Masks are written as 0 / 255.
std::string encode_pgm(const BinaryMask& mask);
// Values are mapped linearly from [lo, hi] to 0..255 and clamped.
std::string encode_pgm(const Image& image, double lo = 0.0, double hi = 1.0);
void write_pgm(const BinaryMask& mask, const std::filesystem::path& path);
void write_pgm(const Image& image, const std::filesystem::path& path, double lo = 0.0, double hi = 1.0);

// Reads P5 or P2 with maxval up to 65535; values scaled to [0, 1].
Image decode_pgm(const std::string& bytes);
Image read_pgm(const std::filesystem::path& path);
// Any non-zero pixel is true.
BinaryMask read_pgm_mask(const std::filesystem::path& path);

// B = 1 cube holding 0 / 1, for writing masks as ENVI.
Hypercube mask_to_cube(const BinaryMask& mask);

}  // namespace hsindt
