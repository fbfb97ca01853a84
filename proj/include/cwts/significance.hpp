#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cwts/morlet.hpp"
#include "cwts/scale_grid.hpp"
#include "cwts/transform.hpp"
#include "cwts/util.hpp"

namespace cwts {

// Red-noise null model. series_variance = sigma2 / (1 - phi^2) by construction.
struct Ar1Model {
  double phi = 0.0;
  double sigma2 = 1.0;
  double series_variance = 1.0;
};

// phi = lag-1 sample autocorrelation clamped to [0, 0.99]; negative estimates
// degrade to white noise. Errors on n < 32 or (numerically) zero variance.
Ar1Model fit_ar1(const ReturnSeries& series);
Ar1Model fit_ar1(const std::vector<double>& values);

// Normalized AR(1) spectrum (1-phi^2) / (1 + phi^2 - 2 phi cos(2 pi f)) for
// f in cycles per sample, unit mean power for white noise. 0 <= f <= 0.5.
double rednoise_spectrum(const Ar1Model& model, double frequency);

// chi-square quantile for 2 degrees of freedom: -2 ln(1 - p).
double chi2_quantile_nu2(double p);

enum class NullMethod { kAnalytic, kMonteCarlo };

struct SignificanceResult {
  double level = 0.95;
  std::vector<double> thresholds;  // per scale
  MaskMatrix mask;                 // power > threshold, (n_times x n_scales)
  NullMethod method = NullMethod::kAnalytic;
  std::size_t mc_runs = 0;
};

// threshold_j = series_variance * P(f_j) * chi2_2(level)/2 with
// f_j = dt / (lambda * s_j) the equivalent Fourier frequency of scale s_j.
std::vector<double> significance_thresholds(const Ar1Model& model, const ScaleGrid& grid,
                                            const MorletParams& params, double level);

// Per-scale empirical level-quantile of wavelet power pooled over the
// inside-COI time points of `runs` simulated AR(1) series of length
// series_length. Per-run seeds are derived as mix_seed(seed, run), so the
// pooled quantile is independent of execution order; identical inputs give
// bitwise identical thresholds. Scales with no inside-COI points fall back
// to the analytic threshold. Requires runs >= 300.
std::vector<double> monte_carlo_thresholds(const Ar1Model& model, const ScaleGrid& grid,
                                           const MorletParams& params, double level,
                                           std::size_t runs, std::uint64_t seed,
                                           std::size_t series_length);

// Strict comparison power > threshold at every cell. Cells outside the COI
// are evaluated like any other; the COI is reported alongside, not used to
// blank them.
SignificanceResult significance_mask(const PowerSpectrum& spectrum,
                                     const std::vector<double>& thresholds,
                                     double level = 0.95,
                                     NullMethod method = NullMethod::kAnalytic,
                                     std::size_t mc_runs = 0);

}  // namespace cwts
