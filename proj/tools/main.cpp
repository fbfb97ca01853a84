#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "cwts/analysis.hpp"
#include "cwts/artifacts.hpp"
#include "cwts/errors.hpp"
#include "cwts/render.hpp"
#include "cwts/synthetic.hpp"
#include "cwts/transform.hpp"

namespace {

void apply_thread_cap() {
#ifdef _OPENMP
  if (const char* env = std::getenv("CWT_SPECTRA_THREADS")) {
    int threads = std::atoi(env);
    if (threads > 0) omp_set_num_threads(threads);
  }
#endif
}

cwts::Date parse_date_flag(const std::string& s) { return cwts::parse_date(s); }

int run_simulate(const std::string& kind, std::size_t n, double phi, double sigma,
                 std::size_t burst_start, std::size_t burst_end, double band_min,
                 double band_max, double ratio, std::uint64_t seed, double s0, double dj,
                 const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto path = [&](const char* name) {
    return (std::filesystem::path(out_dir) / name).string();
  };
  if (kind == "ar1") {
    auto series = cwts::gen_ar1(n, phi, sigma, seed);
    cwts::write_file(path("returns.csv"), cwts::serialize_returns_csv(series));
    std::cout << "wrote " << path("returns.csv") << " (" << n << " samples)\n";
    return 0;
  }
  if (kind == "burst") {
    cwts::Ar1Model base;
    base.phi = phi;
    base.sigma2 = sigma * sigma;
    base.series_variance = base.sigma2 / (1.0 - phi * phi);
    cwts::BurstSpec spec{burst_start, burst_end, band_min, band_max, ratio};
    auto burst = cwts::gen_burst_series(n, base, spec, seed);
    cwts::write_file(path("returns.csv"), cwts::serialize_returns_csv(burst.series));

    auto grid = cwts::build_scale_grid(n, 1.0, s0, dj);
    auto truth = cwts::burst_truth_mask(spec, grid, n);
    cwts::RealMatrix values(truth.rows(), truth.cols());
    for (std::size_t t = 0; t < truth.rows(); ++t)
      for (std::size_t j = 0; j < truth.cols(); ++j) values(t, j) = truth(t, j);
    cwts::MatrixFile file{"truth-mask", grid, 6.0, burst.series.timestamps, values};
    cwts::write_file(path("truth_mask.csv"), cwts::serialize_matrix(file));
    std::cout << "wrote " << path("returns.csv") << " and " << path("truth_mask.csv") << "\n";
    return 0;
  }
  throw cwts::InputError("cli-render", "unknown --kind '" + kind + "' (ar1|burst)");
}

int run_render(const std::string& dir, const std::string& out_png, int cell_size) {
  namespace fs = std::filesystem;
  auto power_file = cwts::parse_matrix(cwts::read_file((fs::path(dir) / "power.csv").string()));
  auto mask_file = cwts::parse_matrix(cwts::read_file((fs::path(dir) / "mask.csv").string()));
  std::vector<cwts::Date> coi_dates;
  std::vector<double> coi;
  cwts::parse_coi(cwts::read_file((fs::path(dir) / "coi.csv").string()), coi_dates, coi);

  cwts::PowerSpectrum spectrum;
  spectrum.power = power_file.values;
  spectrum.grid = power_file.grid;
  spectrum.timestamps = power_file.dates;
  spectrum.coi = coi;

  cwts::SignificanceResult result;
  result.mask = cwts::MaskMatrix(mask_file.values.rows(), mask_file.values.cols());
  for (std::size_t t = 0; t < result.mask.rows(); ++t)
    for (std::size_t j = 0; j < result.mask.cols(); ++j)
      result.mask(t, j) = mask_file.values(t, j) != 0.0 ? 1 : 0;
  result.thresholds.assign(spectrum.grid.count(), 0.0);

  cwts::RenderOptions options;
  options.cell_size = cell_size;
  auto image = cwts::render_heatmap(spectrum, result, options);
  cwts::write_file(out_png, cwts::encode_png(image));
  std::cout << "wrote " << out_png << " (" << image.width << "x" << image.height << ")\n";
  return 0;
}

int run_selftest();

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();

  CLI::App app{"cwt-spectra: wavelet power spectra of return series with red-noise significance"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "run the full pipeline on an OHLC CSV");
  cwts::AnalysisConfig config;
  std::string date_from, date_to, null_method = "analytic";
  analyze->add_option("--input", config.input, "input CSV path or http(s) URL")->required();
  analyze->add_option("--date-from", date_from, "first date (YYYY-MM-DD, inclusive)");
  analyze->add_option("--date-to", date_to, "last date (YYYY-MM-DD, inclusive)");
  analyze->add_option("--symbol", config.symbol, "series label for the artifacts");
  analyze->add_option("--omega0", config.omega0, "Morlet central frequency")->capture_default_str();
  analyze->add_option("--s0", config.s0, "smallest scale, days")->capture_default_str();
  analyze->add_option("--dj", config.dj, "scale step, log2 units")->capture_default_str();
  analyze->add_option("--level", config.level, "confidence level")->capture_default_str();
  analyze->add_option("--null", null_method, "null thresholds: analytic|mc")->capture_default_str();
  analyze->add_option("--mc-runs", config.mc_runs, "Monte Carlo runs")->capture_default_str();
  analyze->add_option("--seed", config.seed, "Monte Carlo seed")->capture_default_str();
  analyze->add_option("--col-date", config.schema.date, "date column name")->capture_default_str();
  analyze->add_option("--col-open", config.schema.open, "open column name")->capture_default_str();
  analyze->add_option("--col-high", config.schema.high, "high column name")->capture_default_str();
  analyze->add_option("--col-low", config.schema.low, "low column name")->capture_default_str();
  analyze->add_option("--col-close", config.schema.close, "close column name")
      ->capture_default_str();
  analyze->add_option("--timeout", config.fetch_timeout, "fetch timeout, seconds")
      ->capture_default_str();
  analyze->add_option("--retries", config.fetch_retries, "fetch retries")->capture_default_str();
  analyze->add_option("--out", config.out_dir, "output directory")->required();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "generate synthetic series");
  std::string kind = "ar1";
  std::size_t sim_n = 2048, burst_start = 1000, burst_end = 1060;
  double phi = 0.5, sigma = 1.0, band_min = 2.0, band_max = 8.0, ratio = 4.0;
  std::uint64_t sim_seed = 1;
  double sim_s0 = 2.0, sim_dj = 1.0 / 12.0;
  std::string sim_out;
  simulate->add_option("--kind", kind, "ar1|burst")->capture_default_str();
  simulate->add_option("--n", sim_n, "series length")->capture_default_str();
  simulate->add_option("--phi", phi, "AR(1) coefficient")->capture_default_str();
  simulate->add_option("--sigma", sigma, "innovation stdev")->capture_default_str();
  simulate->add_option("--burst-start", burst_start, "burst start index")->capture_default_str();
  simulate->add_option("--burst-end", burst_end, "burst end index")->capture_default_str();
  simulate->add_option("--band-min", band_min, "burst min period, days")->capture_default_str();
  simulate->add_option("--band-max", band_max, "burst max period, days")->capture_default_str();
  simulate->add_option("--ratio", ratio, "burst amplitude ratio")->capture_default_str();
  simulate->add_option("--seed", sim_seed, "generator seed")->capture_default_str();
  simulate->add_option("--s0", sim_s0, "truth-mask grid s0")->capture_default_str();
  simulate->add_option("--dj", sim_dj, "truth-mask grid dj")->capture_default_str();
  simulate->add_option("--out", sim_out, "output directory")->required();

  // render
  auto* render = app.add_subcommand("render", "re-render a heatmap from exported artifacts");
  std::string render_dir, render_out = "heatmap.png";
  int cell_size = 1;
  render->add_option("--dir", render_dir, "artifact directory (power/mask/coi csv)")->required();
  render->add_option("--out", render_out, "output PNG path")->capture_default_str();
  render->add_option("--cell-size", cell_size, "pixels per cell")->capture_default_str();

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the built-in verification suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      if (!date_from.empty()) config.date_from = parse_date_flag(date_from);
      if (!date_to.empty()) config.date_to = parse_date_flag(date_to);
      if (null_method == "analytic") {
        config.null_method = cwts::NullMethod::kAnalytic;
      } else if (null_method == "mc") {
        config.null_method = cwts::NullMethod::kMonteCarlo;
      } else {
        throw cwts::InputError("cli-render", "--null must be 'analytic' or 'mc'");
      }
      auto summary = cwts::run_analysis(config);
      std::cout << "analyzed " << summary.n_returns << " returns x " << summary.n_scales
                << " scales (" << summary.significant_cells << " significant cells, "
                << summary.dropped_rows << " rows dropped)\n"
                << "artifacts in " << summary.out_dir << "\n";
      return 0;
    }
    if (*simulate) {
      return run_simulate(kind, sim_n, phi, sigma, burst_start, burst_end, band_min, band_max,
                          ratio, sim_seed, sim_s0, sim_dj, sim_out);
    }
    if (*render) {
      return run_render(render_dir, render_out, cell_size);
    }
    if (*selftest) {
      return run_selftest();
    }
  } catch (const cwts::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cwts::NetworkError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const cwts::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

namespace {

int run_selftest() {
  using namespace cwts;
  int failures = 0;
  auto report = [&](const char* name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name << "  (" << detail << ")\n";
    if (!pass) ++failures;
  };

  // Oracle equivalence: FFT path vs direct Riemann sum inside the COI.
  {
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto series = gen_ar1(256, seed == 1 ? 0.0 : 0.5, 1.0, seed);
      auto grid = build_scale_grid(256, 1.0, 4.0, 1.0 / 12.0);
      auto fast = cwt(series, grid);
      auto direct = cwt_direct(series, grid);
      auto coi = cone_of_influence(256, 1.0);
      double max_direct = 0.0;
      for (const auto& c : direct.coefficients.data()) max_direct = std::max(max_direct, std::abs(c));
      for (std::size_t t = 0; t < 256; ++t) {
        for (std::size_t j = 0; j < grid.count(); ++j) {
          if (grid.scales[j] > coi[t]) continue;
          double err = std::abs(fast.coefficients(t, j) - direct.coefficients(t, j)) / max_direct;
          worst = std::max(worst, err);
        }
      }
    }
    report("oracle-equivalence", worst <= 1e-6, "max in-COI rel err " + format_double(worst));
  }

  // Round trip on white noise: energy deficit of the reconstruction <= 5%.
  {
    auto series = gen_ar1(1024, 0.0, 1.0, 7);
    auto grid = default_scale_grid(1024);
    auto transform = cwt(series, grid);
    auto basis = make_wavelet_basis({});
    auto rec = inverse_cwt(transform, basis);
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < 1024; ++t) {
      double x = series.values[t] - transform.series_mean;
      double d = rec.values[t] - x;
      num += d * d;
      den += x * x;
    }
    double err = num / den;
    report("round-trip", err <= 0.05, "rel L2 energy deficit " + format_double(err));
  }

  // Energy identity ratio.
  {
    bool ok = true;
    std::string detail;
    for (std::uint64_t seed = 11; seed <= 13; ++seed) {
      auto series = gen_ar1(1024, 0.0, 1.0, seed);
      auto grid = default_scale_grid(1024);
      auto report_e = energy(cwt(series, grid));
      double ratio = report_e.ratio();
      detail += format_double(ratio) + " ";
      ok = ok && ratio >= 0.9 && ratio <= 1.1;
    }
    report("energy-ratio", ok, detail);
  }

  // Calibration: AR(1) surrogates at level 0.95 flag ~5% of interior cells.
  {
    const std::size_t n = 1024, surrogates = 60;
    auto grid = default_scale_grid(n);
    auto coi = cone_of_influence(n, 1.0);
    double total = 0.0;
    for (std::uint64_t s = 0; s < surrogates; ++s) {
      auto series = gen_ar1(n, 0.5, 1.0, mix_seed(424242, s));
      auto spectrum = power(cwt(series, grid));
      auto model = fit_ar1(series);
      auto thresholds = significance_thresholds(model, grid, {}, 0.95);
      auto mask = significance_mask(spectrum, thresholds, 0.95);
      std::size_t sig = 0, cells = 0;
      for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t j = 0; j < grid.count(); ++j) {
          if (grid.scales[j] > coi[t]) continue;
          ++cells;
          sig += mask.mask(t, j);
        }
      }
      total += static_cast<double>(sig) / static_cast<double>(cells);
    }
    double fraction = total / surrogates;
    report("significance-calibration", fraction >= 0.02 && fraction <= 0.08,
           "mean interior significant fraction " + format_double(fraction));
  }

  std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? 0 : 3;
}

}  // namespace
