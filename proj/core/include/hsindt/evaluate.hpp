#pragma once

#include <utility>
#include <vector>

#include "hsindt/image.hpp"

namespace hsindt {

// Pixel-level detection score. Counts are doubles so that weighted pools
// share the type; for a single mask pair they are exact integers.
struct EvalResult {
  double tp = 0.0;
  double fp = 0.0;
  double fn = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  // tp + fp == 0: precision reported as 0.
  bool no_detections = false;
  // tp + fn == 0: recall reported as 1.
  bool empty_truth = false;
};

// Recomputes precision/recall and the flags from the counts.
EvalResult score_counts(double tp, double fp, double fn);

// Throws InvalidArgument on a shape mismatch.
EvalResult precision_recall(const BinaryMask& detected, const BinaryMask& truth);

// Pools weight * counts over all samples and rescores. Throws InvalidArgument
// for an empty list or a non-positive weight.
EvalResult weighted_overall(const std::vector<std::pair<EvalResult, double>>& results);

}  // namespace hsindt
