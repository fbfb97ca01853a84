#include "cwts/analysis.hpp"

#include <filesystem>

#include <json.hpp>

#include "cwts/artifacts.hpp"
#include "cwts/errors.hpp"
#include "cwts/render.hpp"
#include "cwts/synthetic.hpp"
#include "cwts/transform.hpp"

namespace cwts {

namespace {

bool is_url(const std::string& input) {
  return input.rfind("http://", 0) == 0 || input.rfind("https://", 0) == 0;
}

nlohmann::json manifest_json(const AnalysisConfig& config, const std::string& input_sha256,
                             std::size_t n_returns, std::size_t n_scales,
                             std::size_t dropped_rows) {
  nlohmann::json m;
  m["tool"] = "cwt-spectra";
  m["version"] = kVersion;
  m["input"]["source"] = config.input;
  m["input"]["sha256"] = input_sha256;
  m["input"]["symbol"] = config.symbol;
  m["input"]["rows_dropped"] = dropped_rows;
  m["input"]["n_returns"] = n_returns;
  m["config"]["date_from"] = config.date_from ? to_string(*config.date_from) : "";
  m["config"]["date_to"] = config.date_to ? to_string(*config.date_to) : "";
  m["config"]["omega0"] = config.omega0;
  m["config"]["s0"] = config.s0;
  m["config"]["dj"] = config.dj;
  m["config"]["level"] = config.level;
  m["config"]["null"] = config.null_method == NullMethod::kAnalytic ? "analytic" : "mc";
  m["config"]["mc_runs"] = config.null_method == NullMethod::kMonteCarlo ? config.mc_runs : 0;
  m["config"]["seed"] = config.seed;
  m["config"]["schema"] = {{"date", config.schema.date}, {"open", config.schema.open},
                           {"high", config.schema.high}, {"low", config.schema.low},
                           {"close", config.schema.close}};
  m["grid"]["n_scales"] = n_scales;
  for (const auto& stop : default_gradient()) {
    m["render"]["gradient"].push_back({{"t", stop.t}, {"r", stop.r}, {"g", stop.g}, {"b", stop.b}});
  }
  m["render"]["coi_shade"] = "pale(c) = round(0.4*c + 0.6*224) per channel";
  m["outputs"] = {kReturnsFile, kPowerFile, kThresholdsFile, kMaskFile, kCoiFile, kHeatmapFile};
  return m;
}

}  // namespace

AnalysisSummary run_analysis(const AnalysisConfig& config) {
  if (config.out_dir.empty()) throw InputError("cli-render", "output directory not set");

  std::string raw = is_url(config.input)
                        ? fetch_csv(config.input, config.fetch_timeout, config.fetch_retries)
                        : read_file(config.input);
  const std::string input_hash = sha256_hex(raw);

  auto parsed = parse_ohlc_csv(raw, config.schema);
  std::vector<OhlcRecord> selected;
  for (const auto& rec : parsed.records) {
    if (config.date_from && rec.date < *config.date_from) continue;
    if (config.date_to && rec.date > *config.date_to) continue;
    selected.push_back(rec);
  }
  if (selected.empty()) throw InputError("cli-render", "empty series after date selection");

  auto returns = log_returns(selected, config.symbol);

  MorletParams params{config.omega0};
  auto grid = build_scale_grid(returns.size(), 1.0, config.s0, config.dj);
  auto transform = cwt(returns, grid, params);
  auto spectrum = power(transform);

  auto model = fit_ar1(returns);
  std::vector<double> thresholds;
  if (config.null_method == NullMethod::kAnalytic) {
    thresholds = significance_thresholds(model, grid, params, config.level);
  } else {
    thresholds = monte_carlo_thresholds(model, grid, params, config.level, config.mc_runs,
                                        config.seed, returns.size());
  }
  auto result = significance_mask(spectrum, thresholds, config.level, config.null_method,
                                  config.mc_runs);

  std::filesystem::create_directories(config.out_dir);
  auto path = [&](const char* name) {
    return (std::filesystem::path(config.out_dir) / name).string();
  };

  write_file(path(kReturnsFile), serialize_returns_csv(returns));

  MatrixFile power_file{"power", grid, config.omega0, spectrum.timestamps, spectrum.power};
  write_file(path(kPowerFile), serialize_matrix(power_file));

  RealMatrix mask_values(result.mask.rows(), result.mask.cols());
  for (std::size_t t = 0; t < result.mask.rows(); ++t) {
    for (std::size_t j = 0; j < result.mask.cols(); ++j) {
      mask_values(t, j) = result.mask(t, j);
    }
  }
  MatrixFile mask_file{"mask", grid, config.omega0, spectrum.timestamps, mask_values};
  write_file(path(kMaskFile), serialize_matrix(mask_file));

  write_file(path(kThresholdsFile), serialize_thresholds(grid.scales, thresholds));
  write_file(path(kCoiFile), serialize_coi(spectrum.timestamps, spectrum.coi));

  auto image = render_heatmap(spectrum, result);
  write_file(path(kHeatmapFile), encode_png(image));

  auto manifest =
      manifest_json(config, input_hash, returns.size(), grid.count(), parsed.dropped_rows);
  write_file(path(kManifestFile), manifest.dump(2) + "\n");

  AnalysisSummary summary;
  summary.n_returns = returns.size();
  summary.n_scales = grid.count();
  summary.dropped_rows = parsed.dropped_rows;
  for (auto v : result.mask.data()) summary.significant_cells += v;
  summary.out_dir = config.out_dir;
  return summary;
}

}  // namespace cwts
