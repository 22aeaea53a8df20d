#include "hsindt/chart.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>

#include "hsindt/error.hpp"

namespace hsindt {
namespace {

using Rgb = std::array<std::uint8_t, 3>;

constexpr std::array<Rgb, 6> kPalette = {{
    {31, 119, 180},
    {214, 39, 40},
    {44, 160, 44},
    {148, 103, 189},
    {255, 127, 14},
    {140, 86, 75},
}};

struct Canvas {
  RgbImage& img;

  void blend(std::ptrdiff_t x, std::ptrdiff_t y, const Rgb& c, double alpha) {
    if (x < 0 || y < 0 || x >= static_cast<std::ptrdiff_t>(img.width) || y >= static_cast<std::ptrdiff_t>(img.height))
      return;
    auto* p = &img.pixels[3 * (static_cast<std::size_t>(y) * img.width + static_cast<std::size_t>(x))];
    for (int k = 0; k < 3; ++k) p[k] = static_cast<std::uint8_t>(std::lround(p[k] * (1.0 - alpha) + c[k] * alpha));
  }

  void line(double x0, double y0, double x1, double y1, const Rgb& c) {
    const int steps = static_cast<int>(std::ceil(std::max(std::fabs(x1 - x0), std::fabs(y1 - y0)))) + 1;
    for (int s = 0; s <= steps; ++s) {
      const double t = static_cast<double>(s) / steps;
      const auto x = static_cast<std::ptrdiff_t>(std::lround(x0 + t * (x1 - x0)));
      const auto y = static_cast<std::ptrdiff_t>(std::lround(y0 + t * (y1 - y0)));
      blend(x, y, c, 1.0);
      blend(x, y + 1, c, 1.0);
    }
  }
};

}  // namespace

RgbImage render_profile_chart(const std::vector<SpectralProfile>& profiles, std::size_t width, std::size_t height) {
  if (width < 64 || height < 64) throw InvalidArgument("render_profile_chart: canvas too small");
  RgbImage img{width, height, std::vector<std::uint8_t>(3 * width * height, 255)};
  Canvas canvas{img};

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& p : profiles) {
    for (std::size_t b = 0; b < p.mean.size(); ++b) {
      const double x = p.wavelengths.empty() ? static_cast<double>(b) : p.wavelengths[b];
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, p.mean[b] - p.std[b]);
      ymax = std::max(ymax, p.mean[b] + p.std[b]);
    }
  }
  const double margin = 40.0;
  const double plot_w = static_cast<double>(width) - 2 * margin;
  const double plot_h = static_cast<double>(height) - 2 * margin;
  const Rgb axis{0, 0, 0};
  canvas.line(margin, margin, margin, margin + plot_h, axis);
  canvas.line(margin, margin + plot_h, margin + plot_w, margin + plot_h, axis);
  if (!std::isfinite(xmin)) return img;
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) {
    ymax += 0.5;
    ymin -= 0.5;
  }
  auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double y) { return margin + plot_h - (y - ymin) / (ymax - ymin) * plot_h; };

  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const auto& p = profiles[k];
    const Rgb& colour = kPalette[k % kPalette.size()];
    auto wl = [&](std::size_t b) { return p.wavelengths.empty() ? static_cast<double>(b) : p.wavelengths[b]; };
    // Shaded std band, interpolated column by column.
    for (std::size_t b = 0; b + 1 < p.mean.size(); ++b) {
      const auto c0 = static_cast<std::ptrdiff_t>(std::lround(px(wl(b))));
      const auto c1 = static_cast<std::ptrdiff_t>(std::lround(px(wl(b + 1))));
      for (std::ptrdiff_t c = c0; c <= c1; ++c) {
        const double t = c1 == c0 ? 0.0 : static_cast<double>(c - c0) / static_cast<double>(c1 - c0);
        const double m = p.mean[b] + t * (p.mean[b + 1] - p.mean[b]);
        const double s = p.std[b] + t * (p.std[b + 1] - p.std[b]);
        const auto top = static_cast<std::ptrdiff_t>(std::lround(py(m + s)));
        const auto bottom = static_cast<std::ptrdiff_t>(std::lround(py(m - s)));
        for (std::ptrdiff_t r = top; r <= bottom; ++r) canvas.blend(c, r, colour, 0.25);
      }
    }
    for (std::size_t b = 0; b + 1 < p.mean.size(); ++b) {
      canvas.line(px(wl(b)), py(p.mean[b]), px(wl(b + 1)), py(p.mean[b + 1]), colour);
    }
  }
  return img;
}

void write_png(const RgbImage& image, const std::filesystem::path& path) {
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> file(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!file) throw IoError("cannot write '" + path.string() + "'");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw Error("write_png: libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("failed writing PNG '" + path.string() + "'");
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t r = 0; r < image.height; ++r) {
    png_write_row(png, const_cast<png_bytep>(&image.pixels[3 * r * image.width]));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace hsindt
