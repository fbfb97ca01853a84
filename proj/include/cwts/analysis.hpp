#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cwts/significance.hpp"

namespace cwts {

// One end-to-end run: ingest -> returns -> transform -> significance ->
// export + render. All knobs that influence the artifacts live here and are
// recorded in the manifest; identical config + input produce byte-identical
// artifact directories.
struct AnalysisConfig {
  std::string input;  // file path or http(s) URL
  CsvSchema schema;
  std::optional<Date> date_from;
  std::optional<Date> date_to;
  std::string symbol = "series";

  double omega0 = 6.0;
  double s0 = 2.0;
  double dj = 1.0 / 12.0;
  double level = 0.95;
  NullMethod null_method = NullMethod::kAnalytic;
  std::size_t mc_runs = 1000;
  std::uint64_t seed = 0;

  double fetch_timeout = 30.0;
  int fetch_retries = 2;

  std::string out_dir;
};

struct AnalysisSummary {
  std::size_t n_returns = 0;
  std::size_t n_scales = 0;
  std::size_t dropped_rows = 0;
  std::size_t significant_cells = 0;
  std::string out_dir;
};

// Artifact filenames inside out_dir.
inline constexpr const char* kReturnsFile = "returns.csv";
inline constexpr const char* kPowerFile = "power.csv";
inline constexpr const char* kThresholdsFile = "thresholds.csv";
inline constexpr const char* kMaskFile = "mask.csv";
inline constexpr const char* kCoiFile = "coi.csv";
inline constexpr const char* kManifestFile = "manifest.json";
inline constexpr const char* kHeatmapFile = "heatmap.png";

AnalysisSummary run_analysis(const AnalysisConfig& config);

}  // namespace cwts
