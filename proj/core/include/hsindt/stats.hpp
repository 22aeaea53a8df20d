#pragma once

#include <span>
#include <vector>

#include "hsindt/image.hpp"

namespace hsindt {

// Summary statistics shared by the modules. All use population (1/n)
// normalization and plain left-to-right summation.

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd mean_std(std::span<const double> values);

// q-th percentile, q in [0, 100], linear interpolation between order
// statistics at rank q/100 * (n - 1). Throws InvalidArgument on empty input.
double percentile(std::span<const double> values, double q);
double median(std::span<const double> values);

// Separable Gaussian blur with radius ceil(3 sigma); at borders the kernel is
// truncated and renormalized over in-image taps.
Image gaussian_blur(const Image& image, double sigma);

}  // namespace hsindt
