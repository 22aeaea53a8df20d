#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hsindt/detect.hpp"
#include "hsindt/evaluate.hpp"
#include "hsindt/profile.hpp"

namespace hsindt {

enum class ReportFormat { kCsv, kJson };

ReportFormat parse_report_format(const std::string& text);

// CSV floats use six significant digits so reruns give byte-identical files.
std::string format_regions(const std::vector<RegionFeatures>& features, ReportFormat format = ReportFormat::kCsv);

struct SampleEvaluation {
  std::string sample_id;
  std::string impactor;
  EvalResult result;
  double weight = 1.0;
};

// One row per sample, then an "overall" row pooled by weighted_overall.
std::string format_evaluation(const std::vector<SampleEvaluation>& samples, ReportFormat format = ReportFormat::kCsv);

// Single profile: wavelength_nm, mean, std.
std::string format_profile(const SpectralProfile& profile);
// Long format over several ROIs: roi, wavelength_nm, mean, std.
std::string format_profiles(const std::vector<SpectralProfile>& profiles, ReportFormat format = ReportFormat::kCsv);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hsindt
