#include "cwts/significance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwts/errors.hpp"
#include "cwts/synthetic.hpp"
#include "cwt_engine.hpp"

namespace cwts {

namespace {
constexpr double kPi = std::numbers::pi;
}

Ar1Model fit_ar1(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 32) throw InputError("significance", "AR(1) fit needs at least 32 samples");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double var_sum = 0.0, lag_sum = 0.0;
  double prev = values[0] - mean;
  var_sum = prev * prev;
  for (std::size_t t = 1; t < n; ++t) {
    double d = values[t] - mean;
    var_sum += d * d;
    lag_sum += d * prev;
    prev = d;
  }
  double var = var_sum / static_cast<double>(n);
  if (var == 0.0 || var < 1e-24 * (mean * mean) || !std::isfinite(var)) {
    throw InputError("significance", "series variance is zero; cannot fit a red-noise null");
  }
  double phi = std::clamp(lag_sum / var_sum, 0.0, 0.99);
  Ar1Model model;
  model.phi = phi;
  model.series_variance = var;
  model.sigma2 = var * (1.0 - phi * phi);
  return model;
}

Ar1Model fit_ar1(const ReturnSeries& series) { return fit_ar1(series.values); }

double rednoise_spectrum(const Ar1Model& model, double frequency) {
  if (!(frequency >= 0.0 && frequency <= 0.5)) {
    throw InputError("significance", "frequency must lie in [0, 0.5] cycles per sample");
  }
  double phi = model.phi;
  return (1.0 - phi * phi) / (1.0 + phi * phi - 2.0 * phi * std::cos(2.0 * kPi * frequency));
}

double chi2_quantile_nu2(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InputError("significance", "confidence level must lie in (0, 1)");
  }
  return -2.0 * std::log1p(-p);
}

std::vector<double> significance_thresholds(const Ar1Model& model, const ScaleGrid& grid,
                                            const MorletParams& params, double level) {
  const double q_over_nu = chi2_quantile_nu2(level) / 2.0;
  const double lambda = fourier_factor(params);
  std::vector<double> thresholds(grid.count());
  for (std::size_t j = 0; j < grid.count(); ++j) {
    double f = grid.dt / (lambda * grid.scales[j]);
    thresholds[j] = model.series_variance * rednoise_spectrum(model, f) * q_over_nu;
  }
  return thresholds;
}

std::vector<double> monte_carlo_thresholds(const Ar1Model& model, const ScaleGrid& grid,
                                           const MorletParams& params, double level,
                                           std::size_t runs, std::uint64_t seed,
                                           std::size_t series_length) {
  if (runs < 300) {
    throw InputError("significance", "Monte Carlo null needs at least 300 runs");
  }
  if (!(level > 0.0 && level < 1.0)) {
    throw InputError("significance", "confidence level must lie in (0, 1)");
  }
  const std::size_t n = series_length;
  const double sigma = std::sqrt(model.sigma2);
  const auto analytic = significance_thresholds(model, grid, params, level);
  const auto coi = cone_of_influence(n, grid.dt, params);

  detail::CwtEngine engine(n, grid, params);
  const std::size_t padded = engine.padded();

  // Pass 1: simulate each run once and keep its padded spectrum; pass 2 then
  // revisits scales without re-simulating. Memory: runs * padded complexes.
  std::vector<std::complex<double>> spectra(runs * padded);
#pragma omp parallel
  {
    FftBuffer in(padded), tmp(padded);
#pragma omp for schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(runs); ++r) {
      auto series = gen_ar1(n, model.phi, sigma, mix_seed(seed, static_cast<std::uint64_t>(r)));
      engine.spectrum(series.values.data(), &spectra[static_cast<std::size_t>(r) * padded], in,
                      tmp);
    }
  }

  // Interior time points per scale (inside the COI).
  std::vector<std::size_t> first(grid.count()), count(grid.count());
  for (std::size_t j = 0; j < grid.count(); ++j) {
    std::size_t lo = 0;
    while (lo < n && coi[lo] < grid.scales[j]) ++lo;
    std::size_t hi = n;
    while (hi > lo && coi[hi - 1] < grid.scales[j]) --hi;
    first[j] = lo;
    count[j] = hi - lo;
  }

  std::vector<double> thresholds(grid.count());
// Scale-major: each scale pools its interior powers across all runs in run
// order, so the pooled multiset (and its quantile) is thread-count invariant.
#pragma omp parallel
  {
    FftBuffer in(padded), tmp(padded);
    std::vector<std::complex<double>> col(n);
    std::vector<double> pool;
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(grid.count()); ++j) {
      auto js = static_cast<std::size_t>(j);
      if (count[js] == 0) {
        thresholds[js] = analytic[js];  // no reliable cells at this scale
        continue;
      }
      pool.clear();
      pool.reserve(runs * count[js]);
      for (std::size_t r = 0; r < runs; ++r) {
        engine.column(&spectra[r * padded], js, col.data(), in, tmp);
        for (std::size_t t = first[js]; t < first[js] + count[js]; ++t) {
          pool.push_back(std::norm(col[t]));
        }
      }
      thresholds[js] = quantile(pool, level);
    }
  }
  return thresholds;
}

SignificanceResult significance_mask(const PowerSpectrum& spectrum,
                                     const std::vector<double>& thresholds, double level,
                                     NullMethod method, std::size_t mc_runs) {
  if (thresholds.size() != spectrum.power.cols()) {
    throw InputError("significance", "threshold count does not match scale count");
  }
  SignificanceResult result;
  result.level = level;
  result.thresholds = thresholds;
  result.method = method;
  result.mc_runs = (method == NullMethod::kMonteCarlo) ? mc_runs : 0;
  result.mask = MaskMatrix(spectrum.power.rows(), spectrum.power.cols());
  for (std::size_t t = 0; t < spectrum.power.rows(); ++t) {
    for (std::size_t j = 0; j < spectrum.power.cols(); ++j) {
      result.mask(t, j) = spectrum.power(t, j) > thresholds[j] ? 1 : 0;
    }
  }
  return result;
}

}  // namespace cwts
