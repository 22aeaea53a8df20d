#include "hsindt/evaluate.hpp"

#include "hsindt/error.hpp"

namespace hsindt {

EvalResult score_counts(double tp, double fp, double fn) {
  EvalResult r{tp, fp, fn};
  if (tp + fp > 0.0) {
    r.precision = tp / (tp + fp);
  } else {
    r.precision = 0.0;
    r.no_detections = true;
  }
  if (tp + fn > 0.0) {
    r.recall = tp / (tp + fn);
  } else {
    r.recall = 1.0;
    r.empty_truth = true;
  }
  return r;
}

EvalResult precision_recall(const BinaryMask& detected, const BinaryMask& truth) {
  if (detected.rows() != truth.rows() || detected.cols() != truth.cols()) {
    throw InvalidArgument("precision_recall: detected and truth masks differ in shape");
  }
  std::size_t tp = 0, fp = 0, fn = 0;
  const auto& d = detected.data();
  const auto& t = truth.data();
  for (std::size_t k = 0; k < d.size(); ++k) {
    const bool dk = d[k] != 0, tk = t[k] != 0;
    tp += dk && tk;
    fp += dk && !tk;
    fn += !dk && tk;
  }
  return score_counts(static_cast<double>(tp), static_cast<double>(fp), static_cast<double>(fn));
}

EvalResult weighted_overall(const std::vector<std::pair<EvalResult, double>>& results) {
  if (results.empty()) throw InvalidArgument("weighted_overall: no results to pool");
  double tp = 0.0, fp = 0.0, fn = 0.0;
  for (const auto& [r, w] : results) {
    if (!(w > 0.0)) throw InvalidArgument("weighted_overall: weights must be > 0");
    tp += w * r.tp;
    fp += w * r.fp;
    fn += w * r.fn;
  }
  return score_counts(tp, fp, fn);
}

}  // namespace hsindt
