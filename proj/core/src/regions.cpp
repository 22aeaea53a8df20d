#include <algorithm>
#include <deque>

#include "hsindt/detect.hpp"

namespace hsindt {

std::vector<Region> extract_regions(const BinaryMask& mask, std::size_t min_area) {
  const std::size_t rows = mask.rows(), cols = mask.cols();
  std::vector<std::uint8_t> seen(rows * cols, 0);
  std::vector<Region> regions;
  std::deque<Pixel> queue;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!mask(r, c) || seen[r * cols + c]) continue;
      Region region;
      seen[r * cols + c] = 1;
      queue.push_back({r, c});
      while (!queue.empty()) {
        const Pixel p = queue.front();
        queue.pop_front();
        region.push_back(p);
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            const auto nr = static_cast<std::ptrdiff_t>(p.row) + dr;
            const auto nc = static_cast<std::ptrdiff_t>(p.col) + dc;
            if (nr < 0 || nc < 0 || nr >= static_cast<std::ptrdiff_t>(rows) ||
                nc >= static_cast<std::ptrdiff_t>(cols))
              continue;
            const auto idx = static_cast<std::size_t>(nr) * cols + static_cast<std::size_t>(nc);
            if (!mask.data()[idx] || seen[idx]) continue;
            seen[idx] = 1;
            queue.push_back({static_cast<std::size_t>(nr), static_cast<std::size_t>(nc)});
          }
        }
      }
      if (region.size() < min_area) continue;
      std::sort(region.begin(), region.end());
      regions.push_back(std::move(region));
    }
  }
  return regions;
}

BinaryMask regions_to_mask(const std::vector<Region>& regions, std::size_t rows, std::size_t cols) {
  BinaryMask mask(rows, cols);
  for (const auto& region : regions)
    for (const auto& p : region) mask.set(p.row, p.col, true);
  return mask;
}

}  // namespace hsindt
