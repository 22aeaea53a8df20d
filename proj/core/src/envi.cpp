#include "hsindt/envi.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "hsindt/error.hpp"

namespace hsindt {
namespace {

constexpr std::string_view kKindKey = "hsindt kind";

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(value, &pos);
    if (pos != value.size() || v < 0) throw std::invalid_argument(value);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw FormatError("ENVI header: key '" + key + "' has non-integer value '" + value + "'");
  }
}

std::vector<double> parse_list(const std::string& value) {
  std::string body = value;
  if (!body.empty() && body.front() == '{') body.erase(0, 1);
  if (!body.empty() && body.back() == '}') body.pop_back();
  std::vector<double> out;
  std::string item;
  std::istringstream in(body);
  while (std::getline(in, item, ',')) {
    auto t = trim(item);
    if (t.empty()) continue;
    try {
      out.push_back(std::stod(t));
    } catch (const std::exception&) {
      throw FormatError("ENVI header: bad number '" + t + "' in list");
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
T byteswap_value(T v) {
  std::array<std::byte, sizeof(T)> raw;
  std::memcpy(raw.data(), &v, sizeof(T));
  std::reverse(raw.begin(), raw.end());
  std::memcpy(&v, raw.data(), sizeof(T));
  return v;
}

bool needs_swap(ByteOrder order) {
  return (order == ByteOrder::kLittle) != (std::endian::native == std::endian::little);
}

template <typename T>
double load(const std::byte* p, bool swap) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  if (swap) v = byteswap_value(v);
  return static_cast<double>(v);
}

template <typename T>
void store(std::byte* p, T v, bool swap) {
  if (swap) v = byteswap_value(v);
  std::memcpy(p, &v, sizeof(T));
}

double load_element(EnviDataType type, const std::byte* p, bool swap) {
  switch (type) {
    case EnviDataType::kUInt8:
      return load<std::uint8_t>(p, false);
    case EnviDataType::kInt16:
      return load<std::int16_t>(p, swap);
    case EnviDataType::kFloat32:
      return load<float>(p, swap);
    case EnviDataType::kFloat64:
      return load<double>(p, swap);
    case EnviDataType::kUInt16:
      return load<std::uint16_t>(p, swap);
  }
  return 0.0;
}

template <typename T>
void store_integer(std::byte* p, double v, bool swap) {
  if (!(v >= static_cast<double>(std::numeric_limits<T>::min()) &&
        v <= static_cast<double>(std::numeric_limits<T>::max()) && std::floor(v) == v)) {
    throw InvalidArgument("write_envi: value " + format_double(v) + " is not representable in the requested data type");
  }
  store<T>(p, static_cast<T>(v), swap);
}

void store_element(EnviDataType type, std::byte* p, double v, bool swap) {
  switch (type) {
    case EnviDataType::kUInt8:
      store_integer<std::uint8_t>(p, v, false);
      return;
    case EnviDataType::kInt16:
      store_integer<std::int16_t>(p, v, swap);
      return;
    case EnviDataType::kUInt16:
      store_integer<std::uint16_t>(p, v, swap);
      return;
    case EnviDataType::kFloat32:
      if (std::isfinite(v) && std::fabs(v) > static_cast<double>(std::numeric_limits<float>::max())) {
        throw InvalidArgument("write_envi: value " + format_double(v) + " overflows float32");
      }
      store<float>(p, static_cast<float>(v), swap);
      return;
    case EnviDataType::kFloat64:
      store<double>(p, v, swap);
      return;
  }
}

// Element offset (in elements) of (i, j, b) inside a payload of the given interleave.
std::size_t file_offset(Interleave il, std::size_t lines, std::size_t samples, std::size_t bands, std::size_t i,
                        std::size_t j, std::size_t b) {
  switch (il) {
    case Interleave::kBsq:
      return (b * lines + i) * samples + j;
    case Interleave::kBil:
      return (i * bands + b) * samples + j;
    case Interleave::kBip:
      return (i * samples + j) * bands + b;
  }
  return 0;
}

std::vector<std::byte> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  in.seekg(0, std::ios::end);
  auto size = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  std::vector<std::byte> bytes(size);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(size));
  if (!in) throw IoError("failed reading '" + path.string() + "'");
  return bytes;
}

}  // namespace

std::string_view to_string(Interleave interleave) {
  switch (interleave) {
    case Interleave::kBsq:
      return "bsq";
    case Interleave::kBil:
      return "bil";
    case Interleave::kBip:
      return "bip";
  }
  return "bsq";
}

Interleave parse_interleave(std::string_view text) {
  auto t = lower(trim(text));
  if (t == "bsq") return Interleave::kBsq;
  if (t == "bil") return Interleave::kBil;
  if (t == "bip") return Interleave::kBip;
  throw FormatError("unknown interleave '" + std::string(text) + "'");
}

EnviDataType envi_data_type_from_code(int code) {
  switch (code) {
    case 1:
    case 2:
    case 4:
    case 5:
    case 12:
      return static_cast<EnviDataType>(code);
    default:
      throw FormatError("unsupported ENVI data type code " + std::to_string(code));
  }
}

std::size_t bytes_per_element(EnviDataType type) {
  switch (type) {
    case EnviDataType::kUInt8:
      return 1;
    case EnviDataType::kInt16:
    case EnviDataType::kUInt16:
      return 2;
    case EnviDataType::kFloat32:
      return 4;
    case EnviDataType::kFloat64:
      return 8;
  }
  return 0;
}

EnviHeader parse_envi_header(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool saw_magic = false;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    if (trim(line) != "ENVI") throw FormatError("ENVI header: first line must be 'ENVI'");
    saw_magic = true;
    break;
  }
  if (!saw_magic) throw FormatError("ENVI header: empty header");

  // Collect key = value pairs; brace values may span lines.
  std::vector<std::pair<std::string, std::string>> entries;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line).front() == ';') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("ENVI header: expected 'key = value', got '" + trim(line) + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!value.empty() && value.front() == '{') {
      while (value.find('}') == std::string::npos) {
        std::string more;
        if (!std::getline(in, more)) throw FormatError("ENVI header: unterminated '{' for key '" + key + "'");
        value += "\n" + more;
      }
      value = trim(value);
    }
    entries.emplace_back(std::move(key), std::move(value));
  }

  EnviHeader h;
  std::optional<std::size_t> samples, lines, bands;
  std::optional<int> type_code;
  std::optional<Interleave> interleave;
  for (auto& [key, value] : entries) {
    auto k = lower(key);
    if (k == "samples") {
      samples = parse_count(k, value);
    } else if (k == "lines") {
      lines = parse_count(k, value);
    } else if (k == "bands") {
      bands = parse_count(k, value);
    } else if (k == "data type") {
      type_code = static_cast<int>(parse_count(k, value));
    } else if (k == "interleave") {
      interleave = parse_interleave(value);
    } else if (k == "byte order") {
      auto v = parse_count(k, value);
      if (v > 1) throw FormatError("ENVI header: byte order must be 0 or 1");
      h.byte_order = v == 0 ? ByteOrder::kLittle : ByteOrder::kBig;
    } else if (k == "header offset") {
      h.header_offset = parse_count(k, value);
    } else if (k == "wavelength") {
      h.wavelength = parse_list(value);
    } else {
      h.extra.emplace_back(key, value);
    }
  }
  auto require = [](bool present, const char* key) {
    if (!present) throw FormatError(std::string("ENVI header: missing mandatory key '") + key + "'");
  };
  require(samples.has_value(), "samples");
  require(lines.has_value(), "lines");
  require(bands.has_value(), "bands");
  require(type_code.has_value(), "data type");
  require(interleave.has_value(), "interleave");
  h.samples = *samples;
  h.lines = *lines;
  h.bands = *bands;
  h.data_type = envi_data_type_from_code(*type_code);
  h.interleave = *interleave;
  if (!h.wavelength.empty() && h.wavelength.size() != h.bands) {
    throw FormatError("ENVI header: wavelength list has " + std::to_string(h.wavelength.size()) + " entries for " +
                      std::to_string(h.bands) + " bands");
  }
  return h;
}

std::string format_envi_header(const EnviHeader& h) {
  std::ostringstream out;
  out << "ENVI\n";
  out << "samples = " << h.samples << '\n';
  out << "lines = " << h.lines << '\n';
  out << "bands = " << h.bands << '\n';
  out << "header offset = " << h.header_offset << '\n';
  out << "data type = " << static_cast<int>(h.data_type) << '\n';
  out << "interleave = " << to_string(h.interleave) << '\n';
  out << "byte order = " << static_cast<int>(h.byte_order) << '\n';
  if (!h.wavelength.empty()) {
    out << "wavelength = {";
    for (std::size_t b = 0; b < h.wavelength.size(); ++b) {
      out << (b ? ", " : "") << format_double(h.wavelength[b]);
    }
    out << "}\n";
  }
  for (const auto& [key, value] : h.extra) out << key << " = " << value << '\n';
  return out.str();
}

Hypercube decode_envi_data(const EnviHeader& h, std::span<const std::byte> payload) {
  if (h.samples == 0 || h.lines == 0 || h.bands == 0) throw FormatError("ENVI: empty cube dimensions");
  const std::size_t bpe = bytes_per_element(h.data_type);
  if (payload.size() != h.data_bytes()) {
    throw FormatError("ENVI: data size " + std::to_string(payload.size()) + " bytes, header declares " +
                      std::to_string(h.data_bytes()));
  }
  const bool swap = needs_swap(h.byte_order);
  std::vector<double> values(h.lines * h.samples * h.bands);
  for (std::size_t b = 0; b < h.bands; ++b) {
    for (std::size_t i = 0; i < h.lines; ++i) {
      for (std::size_t j = 0; j < h.samples; ++j) {
        auto off = file_offset(h.interleave, h.lines, h.samples, h.bands, i, j, b) * bpe;
        values[(b * h.lines + i) * h.samples + j] = load_element(h.data_type, payload.data() + off, swap);
      }
    }
  }
  CubeKind kind = CubeKind::kRawRadiance;
  Hypercube::Metadata metadata;
  for (const auto& kv : h.extra) {
    if (lower(kv.first) == kKindKey) {
      kind = parse_cube_kind(trim(kv.second));
    } else {
      metadata.push_back(kv);
    }
  }
  Hypercube cube(h.lines, h.samples, h.bands, std::move(values), h.wavelength, kind);
  cube.metadata() = std::move(metadata);
  return cube;
}

EnviHeader make_envi_header(const Hypercube& cube, const EnviWriteOptions& options) {
  EnviHeader h;
  h.samples = cube.samples();
  h.lines = cube.lines();
  h.bands = cube.bands();
  h.data_type = options.data_type;
  h.interleave = options.interleave;
  h.byte_order = options.byte_order;
  h.wavelength = cube.wavelengths();
  h.extra = cube.metadata();
  if (cube.has_wavelengths() &&
      std::none_of(h.extra.begin(), h.extra.end(), [](const auto& kv) { return lower(kv.first) == "wavelength units"; })) {
    h.extra.emplace_back("wavelength units", "Nanometers");
  }
  h.extra.emplace_back(std::string(kKindKey), std::string(to_string(cube.kind())));
  return h;
}

std::vector<std::byte> encode_envi_data(const Hypercube& cube, const EnviWriteOptions& options) {
  if (cube.empty()) throw InvalidArgument("write_envi: cube is empty");
  const std::size_t bpe = bytes_per_element(options.data_type);
  const bool swap = needs_swap(options.byte_order);
  const std::size_t lines = cube.lines(), samples = cube.samples(), bands = cube.bands();
  std::vector<std::byte> payload(cube.size() * bpe);
  for (std::size_t b = 0; b < bands; ++b) {
    for (std::size_t i = 0; i < lines; ++i) {
      for (std::size_t j = 0; j < samples; ++j) {
        auto off = file_offset(options.interleave, lines, samples, bands, i, j, b) * bpe;
        store_element(options.data_type, payload.data() + off, cube.at(i, j, b), swap);
      }
    }
  }
  return payload;
}

EnviFiles envi_file_pair(const std::filesystem::path& path) {
  auto ext = lower(path.extension().string());
  if (ext.empty()) return {std::filesystem::path(path.string() + ".hdr"), std::filesystem::path(path.string() + ".img")};
  if (ext == ".hdr") {
    auto data = path;
    data.replace_extension(".img");
    return {path, data};
  }
  auto header = path;
  header.replace_extension(".hdr");
  return {header, path};
}

Hypercube read_envi(const std::filesystem::path& header_path, const std::filesystem::path& data_path) {
  auto header_bytes = read_file(header_path);
  std::string text(reinterpret_cast<const char*>(header_bytes.data()), header_bytes.size());
  EnviHeader h = parse_envi_header(text);

  auto data = read_file(data_path);
  if (data.size() != h.header_offset + h.data_bytes()) {
    throw FormatError("ENVI: '" + data_path.string() + "' is " + std::to_string(data.size()) +
                      " bytes, header declares " + std::to_string(h.header_offset + h.data_bytes()));
  }
  Hypercube cube = decode_envi_data(h, std::span<const std::byte>(data).subspan(h.header_offset));
  std::ostringstream params;
  params << "file=" << header_path.filename().string() << ", interleave=" << to_string(h.interleave)
         << ", data type=" << static_cast<int>(h.data_type) << ", byte order=" << static_cast<int>(h.byte_order)
         << ", header offset=" << h.header_offset;
  cube.append_provenance("read_envi", params.str());
  return cube;
}

Hypercube read_envi(const std::filesystem::path& header_path) {
  auto stem = header_path;
  stem.replace_extension();
  for (const char* ext : {".img", ".raw", ".dat", ".bsq", ".bil", ".bip", ""}) {
    auto candidate = stem;
    candidate += ext;
    if (candidate != header_path && std::filesystem::is_regular_file(candidate)) return read_envi(header_path, candidate);
  }
  throw IoError("no ENVI data file found next to '" + header_path.string() + "'");
}

EnviFiles write_envi(const Hypercube& cube, const std::filesystem::path& path, const EnviWriteOptions& options) {
  auto files = envi_file_pair(path);
  auto payload = encode_envi_data(cube, options);
  auto header = format_envi_header(make_envi_header(cube, options));

  std::ofstream hdr(files.header, std::ios::binary | std::ios::trunc);
  if (!hdr) throw IoError("cannot write '" + files.header.string() + "'");
  hdr << header;
  std::ofstream bin(files.data, std::ios::binary | std::ios::trunc);
  if (!bin) throw IoError("cannot write '" + files.data.string() + "'");
  bin.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
  if (!hdr || !bin) throw IoError("failed writing ENVI pair '" + files.header.string() + "'");
  return files;
}

}  // namespace hsindt
