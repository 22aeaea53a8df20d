#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hsindt/detect.hpp"
#include "hsindt/error.hpp"

namespace hsindt {
namespace {

// Chain directions, counter-clockwise from east; rows grow downwards.
constexpr std::array<int, 8> kDr = {0, -1, -1, -1, 0, 1, 1, 1};
constexpr std::array<int, 8> kDc = {1, 1, 0, -1, -1, -1, 0, 1};

// Moore-neighbour trace of the outer boundary, returned as chain codes.
std::vector<int> boundary_chain(const Region& region) {
  std::size_t r0 = region.front().row, r1 = r0, c0 = region.front().col, c1 = c0;
  for (const auto& p : region) {
    r0 = std::min(r0, p.row);
    r1 = std::max(r1, p.row);
    c0 = std::min(c0, p.col);
    c1 = std::max(c1, p.col);
  }
  // One pixel of padding on every side.
  const std::ptrdiff_t h = static_cast<std::ptrdiff_t>(r1 - r0) + 3;
  const std::ptrdiff_t w = static_cast<std::ptrdiff_t>(c1 - c0) + 3;
  std::vector<std::uint8_t> grid(static_cast<std::size_t>(h * w), 0);
  for (const auto& p : region) {
    grid[static_cast<std::size_t>((static_cast<std::ptrdiff_t>(p.row - r0) + 1) * w +
                                  static_cast<std::ptrdiff_t>(p.col - c0) + 1)] = 1;
  }
  auto inside = [&](std::ptrdiff_t r, std::ptrdiff_t c) { return grid[static_cast<std::size_t>(r * w + c)] != 0; };

  // Start at the first pixel in row-major order (the region is sorted).
  const std::ptrdiff_t sr = static_cast<std::ptrdiff_t>(region.front().row - r0) + 1;
  const std::ptrdiff_t sc = static_cast<std::ptrdiff_t>(region.front().col - c0) + 1;
  std::vector<int> chain;
  std::ptrdiff_t r = sr, c = sc;
  int dir = 7;
  bool started = false;
  int first_dir = -1;
  for (;;) {
    const int search = (dir % 2 == 0) ? (dir + 7) % 8 : (dir + 6) % 8;
    int next = -1;
    for (int k = 0; k < 8; ++k) {
      const int d = (search + k) % 8;
      if (inside(r + kDr[d], c + kDc[d])) {
        next = d;
        break;
      }
    }
    if (next < 0) return chain;  // isolated pixel
    if (started && r == sr && c == sc && next == first_dir) break;
    if (!started) {
      started = true;
      first_dir = next;
    }
    chain.push_back(next);
    r += kDr[next];
    c += kDc[next];
    dir = next;
  }
  return chain;
}

}  // namespace

double region_perimeter(const Region& region) {
  if (region.empty()) throw InvalidArgument("region_perimeter: empty region");
  std::vector<int> chain;
  if (std::is_sorted(region.begin(), region.end())) {
    chain = boundary_chain(region);
  } else {
    Region sorted = region;
    std::sort(sorted.begin(), sorted.end());
    chain = boundary_chain(sorted);
  }
  double even = 0.0, odd = 0.0, corners = 0.0;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    (chain[k] % 2 == 0 ? even : odd) += 1.0;
    if (chain[k] != chain[(k + chain.size() - 1) % chain.size()]) corners += 1.0;
  }
  const double chain_length = 0.980 * even + 1.406 * odd - 0.091 * corners;
  const double area = static_cast<double>(region.size());
  return std::max(chain_length + std::numbers::pi, 2.0 * std::sqrt(std::numbers::pi * area));
}

RegionFeatures region_features(const Region& region, std::size_t label) {
  if (region.empty()) throw InvalidArgument("region_features: empty region");
  RegionFeatures f;
  f.label = label;
  const double a = static_cast<double>(region.size());
  f.area = a;

  double sr = 0.0, sc = 0.0;
  for (const auto& p : region) {
    sr += static_cast<double>(p.row);
    sc += static_cast<double>(p.col);
  }
  f.centroid_row = sr / a;
  f.centroid_col = sc / a;

  double mrr = 0.0, mcc = 0.0, mrc = 0.0;
  for (const auto& p : region) {
    const double dr = static_cast<double>(p.row) - f.centroid_row;
    const double dc = static_cast<double>(p.col) - f.centroid_col;
    mrr += dr * dr;
    mcc += dc * dc;
    mrc += dr * dc;
  }
  mrr = mrr / a + 1.0 / 12.0;
  mcc = mcc / a + 1.0 / 12.0;
  mrc = mrc / a;

  const double half_trace = 0.5 * (mrr + mcc);
  const double spread = std::sqrt(0.25 * (mcc - mrr) * (mcc - mrr) + mrc * mrc);
  const double l1 = half_trace + spread;
  const double l2 = std::max(half_trace - spread, 0.0);
  f.major_axis = 4.0 * std::sqrt(l1);
  f.minor_axis = 4.0 * std::sqrt(l2);
  f.orientation = 0.5 * std::atan2(2.0 * mrc, mcc - mrr);
  f.rmm = f.major_axis / f.minor_axis;

  f.perimeter = region_perimeter(region);
  f.roundness = std::min(1.0, 4.0 * std::numbers::pi * a / (f.perimeter * f.perimeter));
  return f;
}

}  // namespace hsindt
