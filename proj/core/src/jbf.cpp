#include <algorithm>
#include <cmath>
#include <string>

#include "hsindt/error.hpp"
#include "hsindt/parallel.hpp"
#include "hsindt/preprocess.hpp"
#include "numfmt.hpp"

namespace hsindt {
namespace {

bool is_integral(double v) { return std::floor(v) == v; }

struct RawTap {
  std::size_t row;
  std::size_t col;
  double weight;
};

// Unnormalized weights; returns their sum.
double collect_taps(const Image& guide, const JbfParams& params, const std::vector<double>& spatial, std::size_t row,
                    std::size_t col, const std::vector<std::uint8_t>* validity, std::vector<RawTap>& taps) {
  taps.clear();
  const auto hr = static_cast<std::ptrdiff_t>(params.half_rows());
  const auto hc = static_cast<std::ptrdiff_t>(params.half_cols());
  const auto rows = static_cast<std::ptrdiff_t>(guide.rows());
  const auto cols = static_cast<std::ptrdiff_t>(guide.cols());
  const double center = guide(row, col);
  const double range_denom = 2.0 * params.sigma_r * params.sigma_r;
  double sum = 0.0;
  for (std::ptrdiff_t dr = -hr; dr <= hr; ++dr) {
    const std::ptrdiff_t p = static_cast<std::ptrdiff_t>(row) + dr;
    if (p < 0 || p >= rows) continue;
    for (std::ptrdiff_t dc = -hc; dc <= hc; ++dc) {
      const std::ptrdiff_t q = static_cast<std::ptrdiff_t>(col) + dc;
      if (q < 0 || q >= cols) continue;
      const auto pu = static_cast<std::size_t>(p);
      const auto qu = static_cast<std::size_t>(q);
      if (validity && !validity->empty() && (*validity)[pu * guide.cols() + qu] == 0) continue;
      const double diff = center - guide(pu, qu);
      const double w = spatial[static_cast<std::size_t>((dr + hr) * (2 * hc + 1) + (dc + hc))] *
                       std::exp(-(diff * diff) / range_denom);
      taps.push_back({pu, qu, w});
      sum += w;
    }
  }
  return sum;
}

std::vector<double> spatial_kernel(const JbfParams& params) {
  const auto hr = static_cast<std::ptrdiff_t>(params.half_rows());
  const auto hc = static_cast<std::ptrdiff_t>(params.half_cols());
  std::vector<double> k;
  k.reserve(static_cast<std::size_t>((2 * hr + 1) * (2 * hc + 1)));
  for (std::ptrdiff_t dr = -hr; dr <= hr; ++dr)
    for (std::ptrdiff_t dc = -hc; dc <= hc; ++dc)
      k.push_back(std::exp(-static_cast<double>(dr * dr + dc * dc) / (2.0 * params.sigma_d * params.sigma_d)));
  return k;
}

}  // namespace

void JbfParams::validate() const {
  if (!(sigma_d > 0.0) || !std::isfinite(sigma_d)) throw InvalidArgument("JbfParams: sigma_d must be > 0");
  if (!(sigma_r > 0.0) || std::isnan(sigma_r)) throw InvalidArgument("JbfParams: sigma_r must be > 0");
  if (window_rule == JbfWindowRule::kLiteral && (!is_integral(sigma_d) || !is_integral(sigma_r))) {
    throw InvalidArgument("JbfParams: the literal window rule needs integer sigma_d and sigma_r");
  }
}

std::size_t JbfParams::half_rows() const {
  if (window_rule == JbfWindowRule::kLiteral) return static_cast<std::size_t>(sigma_d);
  return static_cast<std::size_t>(std::ceil(2.0 * sigma_d));
}

std::size_t JbfParams::half_cols() const {
  if (window_rule == JbfWindowRule::kLiteral) return static_cast<std::size_t>(sigma_r);
  return half_rows();
}

JbfParams JbfParams::for_guide(const Image& guide, double sigma_d, double range_fraction) {
  JbfParams p;
  p.sigma_d = sigma_d;
  if (guide.empty()) return p;
  const auto [lo, hi] = std::minmax_element(guide.data().begin(), guide.data().end());
  const double range = *hi - *lo;
  p.sigma_r = range > 0.0 ? range_fraction * range : 1.0;
  return p;
}

std::vector<JbfTap> jbf_weights(const Image& guide, const JbfParams& params, std::size_t row, std::size_t col,
                                const std::vector<std::uint8_t>* validity) {
  params.validate();
  if (row >= guide.rows() || col >= guide.cols()) throw InvalidArgument("jbf_weights: pixel out of range");
  std::vector<RawTap> raw;
  const double k = collect_taps(guide, params, spatial_kernel(params), row, col, validity, raw);
  std::vector<JbfTap> taps;
  taps.reserve(raw.size());
  for (const auto& t : raw) taps.push_back({t.row, t.col, t.weight / k});
  return taps;
}

Hypercube joint_bilateral_filter(const Hypercube& cube, const Image& guide, const JbfParams& params) {
  params.validate();
  if (guide.rows() != cube.lines() || guide.cols() != cube.samples()) {
    throw InvalidArgument("joint_bilateral_filter: guide is " + std::to_string(guide.rows()) + "x" +
                          std::to_string(guide.cols()) + ", cube plane is " + std::to_string(cube.lines()) + "x" +
                          std::to_string(cube.samples()));
  }
  const auto spatial = spatial_kernel(params);
  const auto* validity = cube.has_validity_mask() ? &cube.validity() : nullptr;
  Hypercube out = cube;

  parallel_for(cube.lines(), [&](std::size_t i) {
    std::vector<RawTap> taps;
    for (std::size_t j = 0; j < cube.samples(); ++j) {
      if (!cube.valid(i, j)) continue;
      const double k = collect_taps(guide, params, spatial, i, j, validity, taps);
      for (std::size_t b = 0; b < cube.bands(); ++b) {
        const double ref = cube.at(i, j, b);
        double acc = 0.0;
        for (const auto& t : taps) acc += t.weight * (cube.at(t.row, t.col, b) - ref);
        out.at(i, j, b) = ref + acc / k;
      }
    }
  });
  out.append_provenance("jbf", "sigma_d=" + detail::num6(params.sigma_d) + ", sigma_r=" +
                                   detail::num6(params.sigma_r) + ", window=" + std::to_string(params.window_rows()) +
                                   "x" + std::to_string(params.window_cols()));
  return out;
}

Hypercube joint_bilateral_filter(const Hypercube& cube, const JbfParams& params) {
  return joint_bilateral_filter(cube, first_principal_component(cube), params);
}

}  // namespace hsindt
