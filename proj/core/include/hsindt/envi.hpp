#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsindt/hypercube.hpp"

namespace hsindt {

enum class Interleave { kBsq, kBil, kBip };
enum class ByteOrder { kLittle = 0, kBig = 1 };

// ENVI "data type" codes understood by the reader and writer. Everything is
// promoted to double on read.
enum class EnviDataType : int { kUInt8 = 1, kInt16 = 2, kFloat32 = 4, kFloat64 = 5, kUInt16 = 12 };

std::string_view to_string(Interleave interleave);
Interleave parse_interleave(std::string_view text);
EnviDataType envi_data_type_from_code(int code);
std::size_t bytes_per_element(EnviDataType type);

struct EnviHeader {
  std::size_t samples = 0;
  std::size_t lines = 0;
  std::size_t bands = 0;
  EnviDataType data_type = EnviDataType::kFloat32;
  Interleave interleave = Interleave::kBsq;
  ByteOrder byte_order = ByteOrder::kLittle;
  std::size_t header_offset = 0;
  std::vector<double> wavelength;
  // Keys the library does not interpret, verbatim and in file order.
  std::vector<std::pair<std::string, std::string>> extra;

  std::size_t data_bytes() const { return samples * lines * bands * bytes_per_element(data_type); }
};

// Parses "ENVI" header text. Throws FormatError on a missing mandatory key
// (samples, lines, bands, data type, interleave) or an unsupported type code.
EnviHeader parse_envi_header(std::string_view text);
std::string format_envi_header(const EnviHeader& header);

// Binary payload <-> canonical cube. The payload excludes the header offset.
Hypercube decode_envi_data(const EnviHeader& header, std::span<const std::byte> payload);

struct EnviWriteOptions {
  Interleave interleave = Interleave::kBsq;
  EnviDataType data_type = EnviDataType::kFloat32;
  ByteOrder byte_order = ByteOrder::kLittle;
};

// Throws InvalidArgument when a value is not representable in the requested
// type: integer codes need integral values inside the type range; float32
// accepts any value whose magnitude fits (rounding to nearest).
std::vector<std::byte> encode_envi_data(const Hypercube& cube, const EnviWriteOptions& options);
EnviHeader make_envi_header(const Hypercube& cube, const EnviWriteOptions& options);

struct EnviFiles {
  std::filesystem::path header;
  std::filesystem::path data;
};

// "cube" or "cube.hdr" -> cube.hdr + cube.img; "cube.raw" -> cube.hdr + cube.raw.
EnviFiles envi_file_pair(const std::filesystem::path& path);

Hypercube read_envi(const std::filesystem::path& header_path, const std::filesystem::path& data_path);
// Locates the data file next to the header (same stem, common extensions).
Hypercube read_envi(const std::filesystem::path& header_path);

EnviFiles write_envi(const Hypercube& cube, const std::filesystem::path& path,
                     const EnviWriteOptions& options = {});

}  // namespace hsindt
