#include <doctest.h>

#include <fstream>
#include <random>

#include "hsindt/envi.hpp"
#include "hsindt/error.hpp"
#include "hsindt/hypercube.hpp"
#include "oracles.hpp"

using namespace hsindt;

namespace {

std::vector<unsigned char> read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::filesystem::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  out << s;
}

bool same_values(const Hypercube& a, const Hypercube& b) {
  if (a.lines() != b.lines() || a.samples() != b.samples() || a.bands() != b.bands()) return false;
  return std::equal(a.values().begin(), a.values().end(), b.values().begin());
}

// Values exactly representable in every supported type.
Hypercube integral_cube(std::mt19937_64& rng, std::size_t I, std::size_t J, std::size_t B, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  std::vector<double> v(I * J * B);
  for (auto& x : v) x = u(rng);
  return Hypercube(I, J, B, std::move(v));
}

}  // namespace

TEST_SUITE("hypercube") {
  TEST_CASE("construction validates shape and wavelengths") {
    CHECK_THROWS_AS(Hypercube(0, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(Hypercube(2, 2, 2, std::vector<double>(7)), InvalidArgument);
    Hypercube c(2, 3, 3);
    CHECK_THROWS_AS(c.set_wavelengths({1.0, 2.0}), InvalidArgument);
    CHECK_THROWS_AS(c.set_wavelengths({1.0, 3.0, 2.0}), InvalidArgument);
    CHECK_THROWS_AS(c.set_wavelengths({1.0, 1.0, 2.0}), InvalidArgument);
    c.set_wavelengths({950.0, 960.0, 970.0});
    CHECK(c.wavelengths().size() == 3);
  }

  TEST_CASE("kind transitions are monotone") {
    Hypercube c(1, 1, 1);
    CHECK(c.kind() == CubeKind::kRawRadiance);
    c.set_kind(CubeKind::kReflectance);
    CHECK_THROWS_AS(c.set_kind(CubeKind::kRawRadiance), InvalidArgument);
    c.set_kind(CubeKind::kSnvCorrected);
    CHECK_THROWS_AS(c.set_kind(CubeKind::kReflectance), InvalidArgument);
    c.set_kind(CubeKind::kFeature);
    CHECK_THROWS_AS(c.set_kind(CubeKind::kSnvCorrected), InvalidArgument);
    CHECK(kind_transition_allowed(CubeKind::kRawRadiance, CubeKind::kFeature));
    CHECK(kind_transition_allowed(CubeKind::kRawRadiance, CubeKind::kSnvCorrected));
    for (auto k : {CubeKind::kRawRadiance, CubeKind::kReflectance, CubeKind::kSnvCorrected, CubeKind::kFeature}) {
      CHECK(parse_cube_kind(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_cube_kind("radiance"), FormatError);
  }

  TEST_CASE("provenance is append-only and deterministic") {
    Hypercube a(1, 1, 1), b(1, 1, 1);
    for (auto* c : {&a, &b}) {
      c->append_provenance("bin", "spatial=4, spectral=4");
      c->append_provenance("snv", "mode=per-band");
    }
    CHECK(a.provenance_string() == b.provenance_string());
    CHECK(a.provenance_string() == "bin(spatial=4, spectral=4); snv(mode=per-band)");
  }

  TEST_CASE("spectrum_at on constant and index cubes") {
    Hypercube c(2, 3, 4);
    for (auto& v : c.values()) v = 1.5;
    CHECK(spectrum_at(c, 1, 2) == std::vector<double>(4, 1.5));
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) c.at(i, j, b) = static_cast<double>(b);
    CHECK(spectrum_at(c, 0, 0) == std::vector<double>{0, 1, 2, 3});
    CHECK_THROWS_AS(spectrum_at(c, 2, 0), InvalidArgument);
    CHECK_THROWS_AS(spectrum_at(c, 0, 3), InvalidArgument);
  }

  TEST_CASE("spectrum_at and slice_band agree with a triple-loop oracle") {
    std::mt19937_64 rng(3);
    std::vector<double> v(3 * 3 * 4);
    for (auto& x : v) x = std::uniform_real_distribution<double>(-1, 1)(rng);
    Hypercube c(3, 3, 4, v);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const auto s = spectrum_at(c, i, j);
        for (std::size_t b = 0; b < 4; ++b) {
          CHECK(s[b] == v[(b * 3 + i) * 3 + j]);
          CHECK(slice_band(c, b)(i, j) == s[b]);
        }
      }
    CHECK_THROWS_AS(slice_band(c, 4), InvalidArgument);
  }

  TEST_CASE("single-band slice is the whole volume") {
    Hypercube c(2, 2, 1, {1, 2, 3, 4});
    CHECK(slice_band(c, 0).data() == std::vector<double>{1, 2, 3, 4});
  }

  TEST_CASE("wavelength lookup: nearest band, midpoint to the lower band") {
    Hypercube c(1, 1, 76);
    std::vector<double> wl;
    for (int k = 0; k < 76; ++k) wl.push_back(950.0 + 10.0 * k);
    c.set_wavelengths(wl);
    CHECK(wl[band_for_wavelength(c, 1267.0)] == 1270.0);
    CHECK(wl[band_for_wavelength(c, 1146.0)] == 1150.0);
    CHECK(wl[band_for_wavelength(c, 1145.0)] == 1140.0);
    CHECK(wl[band_for_wavelength(c, 950.0)] == 950.0);
    CHECK_THROWS_AS(band_for_wavelength(c, 949.0), InvalidArgument);
    CHECK_THROWS_AS(band_for_wavelength(c, 1701.0), InvalidArgument);

    Hypercube g(1, 1, 2);
    g.set_wavelengths({1140.0, 1150.0});
    CHECK(band_for_wavelength(g, 1145.0) == 0);
    CHECK(band_for_wavelength(g, 1146.0) == 1);
    CHECK_THROWS_AS(band_for_wavelength(Hypercube(1, 1, 2), 1000.0), InvalidArgument);
  }

  TEST_CASE("validity mask bookkeeping") {
    Hypercube c(2, 2, 1);
    CHECK_FALSE(c.has_validity_mask());
    CHECK(c.valid_count() == 4);
    c.set_valid(1, 0, false);
    CHECK(c.has_validity_mask());
    CHECK_FALSE(c.valid(1, 0));
    CHECK(c.valid_count() == 3);
    CHECK_THROWS_AS(c.set_validity({1, 1}), InvalidArgument);
  }
}

TEST_SUITE("envi") {
  TEST_CASE("header parsing: mandatory keys, lists and extras") {
    const std::string text =
        "ENVI\ndescription = {test\n cube}\nsamples = 320\nlines   = 620\nbands = 3\nheader offset = 0\n"
        "file type = ENVI Standard\ndata type = 4\ninterleave = bsq\nbyte order = 1\n"
        "wavelength = { 950.0, 960.0,\n 970.0 }\nsensor type = Unknown\n";
    const auto h = parse_envi_header(text);
    CHECK(h.samples == 320);
    CHECK(h.lines == 620);
    CHECK(h.bands == 3);
    CHECK(h.data_type == EnviDataType::kFloat32);
    CHECK(h.interleave == Interleave::kBsq);
    CHECK(h.byte_order == ByteOrder::kBig);
    CHECK(h.wavelength == std::vector<double>{950, 960, 970});
    REQUIRE(h.extra.size() == 3);
    CHECK(h.extra[0].first == "description");
    CHECK(h.extra[2].second == "Unknown");

    for (const char* missing : {"samples", "lines", "bands", "data type", "interleave"}) {
      std::string t = "ENVI\nsamples = 1\nlines = 1\nbands = 1\ndata type = 4\ninterleave = bil\n";
      const auto pos = t.find(std::string(missing) + " =");
      t.erase(pos, t.find('\n', pos) - pos + 1);
      CHECK_THROWS_AS(parse_envi_header(t), FormatError);
    }
    CHECK_THROWS_AS(parse_envi_header("samples = 1\n"), FormatError);
    CHECK_THROWS_AS(parse_envi_header("ENVI\nsamples = 1\nlines = 1\nbands = 1\ndata type = 3\ninterleave = bsq\n"),
                    FormatError);
    CHECK_THROWS_AS(parse_envi_header("ENVI\nsamples = 1\nlines = 1\nbands = 1\ndata type = 4\ninterleave = xyz\n"),
                    FormatError);
  }

  TEST_CASE("320 x 620 x 256 float32 BSQ reads with J=320, I=620, B=256") {
    const auto dir = oracle::temp_dir("envi_large");
    Hypercube c(620, 320, 256);
    for (std::size_t k = 0; k < c.size(); ++k) c.values()[k] = static_cast<double>(k % 977);
    write_envi(c, dir / "scan.hdr", {Interleave::kBsq, EnviDataType::kFloat32});
    const auto r = read_envi(dir / "scan.hdr");
    CHECK(r.samples() == 320);
    CHECK(r.lines() == 620);
    CHECK(r.bands() == 256);
    CHECK(same_values(r, c));
  }

  TEST_CASE("single element in every interleave") {
    const auto dir = oracle::temp_dir("envi_single");
    for (auto il : {Interleave::kBsq, Interleave::kBil, Interleave::kBip}) {
      Hypercube c(1, 1, 1, {0.5});
      write_envi(c, dir / "one.hdr", {il, EnviDataType::kFloat64});
      CHECK(spectrum_at(read_envi(dir / "one.hdr"), 0, 0) == std::vector<double>{0.5});
    }
  }

  TEST_CASE("byte stream matches the layout oracle for every interleave, type and byte order") {
    std::mt19937_64 rng(11);
    const auto dir = oracle::temp_dir("envi_bytes");
    const std::size_t I = 3, J = 4, B = 5;
    const Hypercube c = integral_cube(rng, I, J, B, 0, 255);
    for (const std::string il : {"bsq", "bil", "bip"}) {
      for (int code : {1, 2, 4, 5, 12}) {
        for (bool big : {false, true}) {
          const EnviWriteOptions opt{parse_interleave(il), envi_data_type_from_code(code),
                                     big ? ByteOrder::kBig : ByteOrder::kLittle};
          const auto files = write_envi(c, dir / "c.hdr", opt);
          const auto expected = oracle::envi_payload(il, code, big, I, J, B, [&](auto i, auto j, auto b) {
            return c.at(i, j, b);
          });
          CHECK(read_bytes(files.data) == expected);
        }
      }
    }
  }

  TEST_CASE("2x2x2 BIP stream by hand") {
    // values(i, j, b) = 10 i + 4 j + b, a single byte each.
    Hypercube c(2, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t b = 0; b < 2; ++b) c.at(i, j, b) = 10.0 * i + 4.0 * j + b;
    const auto bytes = encode_envi_data(c, {Interleave::kBip, EnviDataType::kUInt8});
    const std::vector<int> expected{0, 1, 4, 5, 10, 11, 14, 15};
    REQUIRE(bytes.size() == 8);
    for (std::size_t k = 0; k < 8; ++k) CHECK(std::to_integer<int>(bytes[k]) == expected[k]);
  }

  TEST_CASE("round trips are bit-identical") {
    std::mt19937_64 rng(5);
    const auto dir = oracle::temp_dir("envi_roundtrip");
    SUBCASE("4x5x6 float32 through bsq and bil") {
      Hypercube c = oracle::random_cube(rng, 4, 5, 6);
      for (auto& v : c.values()) v = static_cast<float>(v);
      for (auto il : {Interleave::kBsq, Interleave::kBil}) {
        write_envi(c, dir / "rt.hdr", {il, EnviDataType::kFloat32});
        CHECK(same_values(read_envi(dir / "rt.hdr"), c));
      }
    }
    SUBCASE("float64 keeps full precision") {
      const Hypercube c = oracle::random_cube(rng, 3, 7, 2, -1e6, 1e6);
      write_envi(c, dir / "rt64.hdr", {Interleave::kBip, EnviDataType::kFloat64, ByteOrder::kBig});
      CHECK(same_values(read_envi(dir / "rt64.hdr"), c));
    }
    SUBCASE("signed int16 range") {
      const Hypercube c = integral_cube(rng, 3, 3, 3, -32768, 32767);
      write_envi(c, dir / "i16.hdr", {Interleave::kBil, EnviDataType::kInt16, ByteOrder::kBig});
      CHECK(same_values(read_envi(dir / "i16.hdr"), c));
    }
  }

  TEST_CASE("interleave closure") {
    std::mt19937_64 rng(8);
    const auto dir = oracle::temp_dir("envi_closure");
    const Hypercube c = integral_cube(rng, 5, 3, 4, 0, 65535);
    std::vector<Hypercube> back;
    for (auto il : {Interleave::kBsq, Interleave::kBil, Interleave::kBip}) {
      write_envi(c, dir / ("c_" + std::string(to_string(il)) + ".hdr"), {il, EnviDataType::kUInt16});
      back.push_back(read_envi(dir / ("c_" + std::string(to_string(il)) + ".hdr")));
    }
    CHECK(same_values(back[0], back[1]));
    CHECK(same_values(back[1], back[2]));
    CHECK(same_values(back[0], c));
  }

  TEST_CASE("wavelengths, kind and unknown keys survive a round trip") {
    const auto dir = oracle::temp_dir("envi_meta");
    Hypercube c(2, 2, 3, std::vector<double>(12, 0.25), {950.0, 960.5, 971.25}, CubeKind::kReflectance);
    c.metadata().emplace_back("sensor type", "Unknown");
    c.metadata().emplace_back("description", "{calibrated scan}");
    write_envi(c, dir / "m.hdr");
    const auto r = read_envi(dir / "m.hdr");
    CHECK(r.wavelengths() == c.wavelengths());
    CHECK(r.kind() == CubeKind::kReflectance);
    REQUIRE(r.metadata().size() >= 2);
    CHECK(r.metadata()[0] == std::pair<std::string, std::string>{"sensor type", "Unknown"});
    CHECK(r.metadata()[1] == std::pair<std::string, std::string>{"description", "{calibrated scan}"});
    REQUIRE_FALSE(r.provenance().empty());
    CHECK(r.provenance().back().operation == "read_envi");
    CHECK(r.provenance().back().parameters.find("interleave=bsq") != std::string::npos);
  }

  TEST_CASE("header offset is skipped") {
    const auto dir = oracle::temp_dir("envi_offset");
    write_text(dir / "o.hdr", "ENVI\nsamples = 2\nlines = 1\nbands = 1\nheader offset = 3\ndata type = 1\ninterleave = bsq\n");
    write_text(dir / "o.img", std::string("xyz") + '\x07' + '\x09');
    const auto c = read_envi(dir / "o.hdr", dir / "o.img");
    CHECK(c.at(0, 0, 0) == 7.0);
    CHECK(c.at(0, 1, 0) == 9.0);
  }

  TEST_CASE("size mismatch and unreadable files") {
    const auto dir = oracle::temp_dir("envi_errors");
    write_text(dir / "s.hdr", "ENVI\nsamples = 2\nlines = 2\nbands = 1\ndata type = 1\ninterleave = bsq\n");
    write_text(dir / "s.img", "abc");
    CHECK_THROWS_AS(read_envi(dir / "s.hdr", dir / "s.img"), FormatError);
    CHECK_THROWS_AS(read_envi(dir / "missing.hdr", dir / "missing.img"), IoError);
    CHECK_THROWS_AS(read_envi(dir / "nodata.hdr"), IoError);
    CHECK_THROWS_AS(write_envi(Hypercube(1, 1, 1), dir / "no_such_dir" / "x.hdr"), IoError);
  }

  TEST_CASE("values not representable in the requested type are rejected") {
    const Hypercube frac(1, 1, 1, {0.5});
    CHECK_THROWS_AS(encode_envi_data(frac, {Interleave::kBsq, EnviDataType::kUInt8}), InvalidArgument);
    CHECK_THROWS_AS(encode_envi_data(Hypercube(1, 1, 1, {256.0}), {Interleave::kBsq, EnviDataType::kUInt8}),
                    InvalidArgument);
    CHECK_THROWS_AS(encode_envi_data(Hypercube(1, 1, 1, {-1.0}), {Interleave::kBsq, EnviDataType::kUInt16}),
                    InvalidArgument);
    CHECK_THROWS_AS(encode_envi_data(Hypercube(1, 1, 1, {40000.0}), {Interleave::kBsq, EnviDataType::kInt16}),
                    InvalidArgument);
    CHECK_THROWS_AS(encode_envi_data(Hypercube(1, 1, 1, {1e300}), {Interleave::kBsq, EnviDataType::kFloat32}),
                    InvalidArgument);
    CHECK_NOTHROW(encode_envi_data(frac, {Interleave::kBsq, EnviDataType::kFloat32}));
  }

  TEST_CASE("file pair naming") {
    CHECK(envi_file_pair("a/cube").header == std::filesystem::path("a/cube.hdr"));
    CHECK(envi_file_pair("a/cube").data == std::filesystem::path("a/cube.img"));
    CHECK(envi_file_pair("cube.hdr").data == std::filesystem::path("cube.img"));
    CHECK(envi_file_pair("cube.raw").header == std::filesystem::path("cube.hdr"));
    CHECK(envi_file_pair("cube.raw").data == std::filesystem::path("cube.raw"));
  }
}
