#include "hsindt/pnm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hsindt/error.hpp"

namespace hsindt {
namespace {

std::string header(std::size_t rows, std::size_t cols) {
  return "P5\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
}

void write_bytes(const std::string& bytes, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

// Next whitespace-delimited token, skipping '#' comments.
std::string next_token(const std::string& bytes, std::size_t& pos) {
  for (;;) {
    while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    if (pos < bytes.size() && bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      continue;
    }
    break;
  }
  const std::size_t start = pos;
  while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
  if (start == pos) throw FormatError("PGM: truncated header");
  return bytes.substr(start, pos - start);
}

std::size_t to_size(const std::string& token) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used == token.size() && v >= 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw FormatError("PGM: bad number '" + token + "'");
}

}  // namespace

std::string encode_pgm(const BinaryMask& mask) {
  std::string out = header(mask.rows(), mask.cols());
  for (auto v : mask.data()) out.push_back(static_cast<char>(v ? 255 : 0));
  return out;
}

std::string encode_pgm(const Image& image, double lo, double hi) {
  std::string out = header(image.rows(), image.cols());
  const double span = hi > lo ? hi - lo : 1.0;
  for (double v : image.data()) {
    const double t = std::clamp((v - lo) / span, 0.0, 1.0);
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(t * 255.0))));
  }
  return out;
}

void write_pgm(const BinaryMask& mask, const std::filesystem::path& path) { write_bytes(encode_pgm(mask), path); }

void write_pgm(const Image& image, const std::filesystem::path& path, double lo, double hi) {
  write_bytes(encode_pgm(image, lo, hi), path);
}

Image decode_pgm(const std::string& bytes) {
  std::size_t pos = 0;
  const auto magic = next_token(bytes, pos);
  if (magic != "P5" && magic != "P2") throw FormatError("PGM: expected P5 or P2, got '" + magic + "'");
  const auto cols = to_size(next_token(bytes, pos));
  const auto rows = to_size(next_token(bytes, pos));
  const auto maxval = to_size(next_token(bytes, pos));
  if (rows == 0 || cols == 0 || maxval == 0 || maxval > 65535) throw FormatError("PGM: bad dimensions or maxval");
  Image image(rows, cols);
  if (magic == "P2") {
    for (auto& v : image.data()) v = static_cast<double>(to_size(next_token(bytes, pos))) / static_cast<double>(maxval);
    return image;
  }
  ++pos;  // single whitespace after maxval
  const std::size_t width = maxval > 255 ? 2 : 1;
  if (bytes.size() < pos + rows * cols * width) throw FormatError("PGM: truncated pixel data");
  for (std::size_t k = 0; k < rows * cols; ++k) {
    unsigned value = static_cast<unsigned char>(bytes[pos + k * width]);
    if (width == 2) value = (value << 8) | static_cast<unsigned char>(bytes[pos + k * width + 1]);
    image.data()[k] = static_cast<double>(value) / static_cast<double>(maxval);
  }
  return image;
}

Image read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream bytes;
  bytes << in.rdbuf();
  return decode_pgm(bytes.str());
}

BinaryMask read_pgm_mask(const std::filesystem::path& path) {
  const Image image = read_pgm(path);
  BinaryMask mask(image.rows(), image.cols());
  for (std::size_t k = 0; k < image.size(); ++k) mask.data()[k] = image.data()[k] > 0.0 ? 1 : 0;
  return mask;
}

Hypercube mask_to_cube(const BinaryMask& mask) {
  std::vector<double> values(mask.size());
  for (std::size_t k = 0; k < mask.size(); ++k) values[k] = mask.data()[k] ? 1.0 : 0.0;
  return Hypercube(mask.rows(), mask.cols(), 1, std::move(values), {}, CubeKind::kFeature);
}

}  // namespace hsindt
