#include "cwts/synthetic.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "cwts/errors.hpp"
#include "cwts/fft.hpp"
#include "cwts/morlet.hpp"

namespace cwts {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPow53 = 9007199254740992.0;  // 2^53
}  // namespace

double GaussianRng::operator()() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // (0,1] and [0,1) uniforms from the top 53 bits.
  double u1 = (static_cast<double>(eng_() >> 11) + 1.0) / kTwoPow53;
  double u2 = static_cast<double>(eng_() >> 11) / kTwoPow53;
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * kPi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

ReturnSeries gen_ar1(std::size_t n, double phi, double sigma, std::uint64_t seed) {
  if (!(std::abs(phi) < 1.0)) {
    throw InputError("synthetic-bench", "nonstationary phi (|phi| must be < 1)");
  }
  if (!(sigma > 0.0)) throw InputError("synthetic-bench", "sigma must be positive");
  if (n < 32) throw InputError("synthetic-bench", "AR(1) generator needs n >= 32");

  auto burn = static_cast<std::size_t>(std::ceil(10.0 / (1.0 - phi)));
  GaussianRng rng(seed);
  ReturnSeries series;
  series.values.resize(n);
  series.timestamps = synthetic_dates(n);
  series.source_symbol = "ar1";
  double x = 0.0;
  for (std::size_t i = 0; i < burn; ++i) x = phi * x + sigma * rng();
  for (std::size_t i = 0; i < n; ++i) {
    x = phi * x + sigma * rng();
    series.values[i] = x;
  }
  return series;
}

namespace {

void validate_burst(const BurstSpec& spec, std::size_t n) {
  if (!(spec.start < spec.end) || spec.end > n) {
    throw InputError("synthetic-bench", "burst window must satisfy 0 <= start < end <= n");
  }
  if (spec.end - spec.start < 4) {
    throw InputError("synthetic-bench", "burst window too short to band-limit");
  }
  if (!(spec.min_period >= 2.0)) {
    throw InputError("synthetic-bench", "min_period must be >= 2 samples");
  }
  if (!(spec.max_period >= spec.min_period)) {
    throw InputError("synthetic-bench", "period band is empty");
  }
  if (!(spec.amplitude_ratio >= 1.0)) {
    throw InputError("synthetic-bench", "amplitude_ratio must be >= 1");
  }
}

// White noise restricted to DFT bins whose period lies in the band.
std::vector<double> band_limited_noise(std::size_t len, double min_period, double max_period,
                                       GaussianRng& rng) {
  FftPlan plan(len);
  FftBuffer in(len), freq(len), out(len);
  for (std::size_t i = 0; i < len; ++i) {
    in.get()[i][0] = rng();
    in.get()[i][1] = 0.0;
  }
  plan.forward(in.get(), freq.get());
  for (std::size_t k = 0; k < len; ++k) {
    std::size_t k_eff = std::min(k, len - k);
    bool keep = false;
    if (k_eff > 0) {
      double period = static_cast<double>(len) / static_cast<double>(k_eff);
      keep = period >= min_period && period <= max_period;
    }
    if (!keep) {
      freq.get()[k][0] = 0.0;
      freq.get()[k][1] = 0.0;
    }
  }
  plan.backward(freq.get(), out.get());
  std::vector<double> b(len);
  double inv = 1.0 / static_cast<double>(len);
  for (std::size_t i = 0; i < len; ++i) b[i] = out.get()[i][0] * inv;
  return b;
}

}  // namespace

BurstSeries gen_burst_series(std::size_t n, const Ar1Model& base, const BurstSpec& burst,
                             std::uint64_t seed) {
  validate_burst(burst, n);
  BurstSeries result;
  result.spec = burst;
  result.series = gen_ar1(n, base.phi, std::sqrt(base.sigma2), seed);
  result.series.source_symbol = "burst";

  double target_sd = (burst.amplitude_ratio - 1.0) * std::sqrt(base.series_variance);
  if (target_sd > 0.0) {
    GaussianRng rng(mix_seed(seed, 0xB1757));
    std::size_t len = burst.end - burst.start;
    auto b = band_limited_noise(len, burst.min_period, burst.max_period, rng);
    double mean = 0.0, var = 0.0;
    for (double v : b) mean += v;
    mean /= static_cast<double>(len);
    for (double v : b) var += (v - mean) * (v - mean);
    var /= static_cast<double>(len);
    if (!(var > 0.0)) {
      throw NumericalError("synthetic-bench", "period band left no noise energy");
    }
    double scale = target_sd / std::sqrt(var);
    for (std::size_t i = 0; i < len; ++i) {
      result.series.values[burst.start + i] += scale * (b[i] - mean);
    }
  }
  return result;
}

MaskMatrix burst_truth_mask(const BurstSpec& burst, const ScaleGrid& grid,
                            std::size_t n_times, const MorletParams& params) {
  validate_burst(burst, n_times);
  const double lambda = fourier_factor(params);
  MaskMatrix mask(n_times, grid.count());
  for (std::size_t j = 0; j < grid.count(); ++j) {
    double period = lambda * grid.scales[j];
    if (period < burst.min_period || period > burst.max_period) continue;
    for (std::size_t t = burst.start; t < burst.end; ++t) mask(t, j) = 1;
  }
  return mask;
}

}  // namespace cwts
