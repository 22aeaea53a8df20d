#include "hsindt/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hsindt/error.hpp"
#include "numfmt.hpp"

namespace hsindt {

using detail::num6;

ReportFormat parse_report_format(const std::string& text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  throw InvalidArgument("unknown report format '" + text + "' (expected csv or json)");
}

std::string format_regions(const std::vector<RegionFeatures>& features, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    auto arr = nlohmann::json::array();
    for (const auto& f : features) {
      arr.push_back({{"label", f.label},
                     {"area", f.area},
                     {"perimeter", f.perimeter},
                     {"centroid_row", f.centroid_row},
                     {"centroid_col", f.centroid_col},
                     {"major", f.major_axis},
                     {"minor", f.minor_axis},
                     {"orientation", f.orientation},
                     {"roundness", f.roundness},
                     {"rmm", f.rmm}});
    }
    return nlohmann::json{{"regions", arr}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "label,area,perimeter,centroid_row,centroid_col,major,minor,orientation,roundness,rmm\n";
  for (const auto& f : features) {
    out << f.label << ',' << num6(f.area) << ',' << num6(f.perimeter) << ',' << num6(f.centroid_row) << ','
        << num6(f.centroid_col) << ',' << num6(f.major_axis) << ',' << num6(f.minor_axis) << ','
        << num6(f.orientation) << ',' << num6(f.roundness) << ',' << num6(f.rmm) << '\n';
  }
  return out.str();
}

std::string format_evaluation(const std::vector<SampleEvaluation>& samples, ReportFormat format) {
  std::vector<std::pair<EvalResult, double>> pooled;
  for (const auto& s : samples) pooled.emplace_back(s.result, s.weight);
  const EvalResult overall = weighted_overall(pooled);

  if (format == ReportFormat::kJson) {
    auto row = [](const std::string& id, const std::string& impactor, const EvalResult& r) {
      return nlohmann::json{{"sample", id},          {"impactor", impactor},     {"precision", r.precision},
                            {"recall", r.recall},    {"tp", r.tp},               {"fp", r.fp},
                            {"fn", r.fn},            {"no_detections", r.no_detections},
                            {"empty_truth", r.empty_truth}};
    };
    auto arr = nlohmann::json::array();
    for (const auto& s : samples) arr.push_back(row(s.sample_id, s.impactor, s.result));
    return nlohmann::json{{"samples", arr}, {"overall", row("overall", "", overall)}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "sample,impactor,precision,recall\n";
  for (const auto& s : samples) {
    out << s.sample_id << ',' << s.impactor << ',' << num6(s.result.precision) << ',' << num6(s.result.recall) << '\n';
  }
  out << "overall,," << num6(overall.precision) << ',' << num6(overall.recall) << '\n';
  return out.str();
}

std::string format_profile(const SpectralProfile& profile) {
  std::ostringstream out;
  out << "wavelength_nm,mean,std\n";
  for (std::size_t b = 0; b < profile.mean.size(); ++b) {
    const double wl = profile.wavelengths.empty() ? static_cast<double>(b) : profile.wavelengths[b];
    out << num6(wl) << ',' << num6(profile.mean[b]) << ',' << num6(profile.std[b]) << '\n';
  }
  return out.str();
}

std::string format_profiles(const std::vector<SpectralProfile>& profiles, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    auto arr = nlohmann::json::array();
    for (const auto& p : profiles) {
      arr.push_back({{"roi", p.name}, {"n", p.n}, {"wavelength_nm", p.wavelengths}, {"mean", p.mean}, {"std", p.std}});
    }
    return nlohmann::json{{"profiles", arr}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "roi,wavelength_nm,mean,std\n";
  for (const auto& p : profiles) {
    for (std::size_t b = 0; b < p.mean.size(); ++b) {
      const double wl = p.wavelengths.empty() ? static_cast<double>(b) : p.wavelengths[b];
      out << p.name << ',' << num6(wl) << ',' << num6(p.mean[b]) << ',' << num6(p.std[b]) << '\n';
    }
  }
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace hsindt
