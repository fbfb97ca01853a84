#include "cwts/transform.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "cwts/errors.hpp"
#include "cwt_engine.hpp"

namespace cwts {

namespace detail {

namespace {
constexpr double kPi = std::numbers::pi;
}

CwtEngine::CwtEngine(std::size_t n, const ScaleGrid& grid, const MorletParams& params)
    : n_(n),
      // 4n padding rather than bare next-pow2: keeps the circular wrap of the
      // wavelet tails below 1e-9 of the peak coefficient inside the COI.
      padded_(next_pow2(4 * n)),
      grid_(grid),
      params_(params),
      plan_(padded_) {
  omega_.resize(padded_);
  double domega = 2.0 * kPi / (static_cast<double>(padded_) * grid_.dt);
  for (std::size_t k = 0; k < padded_; ++k) {
    double kk = (k <= padded_ / 2) ? static_cast<double>(k)
                                   : static_cast<double>(k) - static_cast<double>(padded_);
    omega_[k] = kk * domega;
  }
  norm_.resize(grid_.count());
  for (std::size_t j = 0; j < grid_.count(); ++j) {
    norm_[j] = std::sqrt(2.0 * kPi * grid_.scales[j] / grid_.dt);
  }
}

double CwtEngine::spectrum(const double* x, std::complex<double>* out, FftBuffer& in,
                           FftBuffer& tmp) const {
  double mean = 0.0;
  for (std::size_t t = 0; t < n_; ++t) mean += x[t];
  mean /= static_cast<double>(n_);
  for (std::size_t t = 0; t < n_; ++t) {
    in.get()[t][0] = x[t] - mean;
    in.get()[t][1] = 0.0;
  }
  for (std::size_t t = n_; t < padded_; ++t) {
    in.get()[t][0] = 0.0;
    in.get()[t][1] = 0.0;
  }
  plan_.forward(in.get(), tmp.get());
  for (std::size_t k = 0; k < padded_; ++k) {
    out[k] = {tmp.get()[k][0], tmp.get()[k][1]};
  }
  return mean;
}

double CwtEngine::filter(std::size_t j, std::size_t k) const {
  return norm_[j] * morlet_fourier(grid_.scales[j] * omega_[k], params_);
}

void CwtEngine::column(const std::complex<double>* spectrum, std::size_t j,
                       std::complex<double>* out, FftBuffer& in, FftBuffer& tmp) const {
  // The Fourier form is real, so the required conjugation is a no-op; it is
  // zero at non-positive frequency, which blanks the negative-frequency bins.
  for (std::size_t k = 0; k < padded_; ++k) {
    double f = filter(j, k);
    in.get()[k][0] = spectrum[k].real() * f;
    in.get()[k][1] = spectrum[k].imag() * f;
  }
  plan_.backward(in.get(), tmp.get());
  double inv_n = 1.0 / static_cast<double>(padded_);
  for (std::size_t t = 0; t < n_; ++t) {
    out[t] = {tmp.get()[t][0] * inv_n, tmp.get()[t][1] * inv_n};
  }
}

CwtValues cwt_values(const std::vector<double>& x, const ScaleGrid& grid,
                     const MorletParams& params) {
  const std::size_t n = x.size();
  CwtEngine engine(n, grid, params);
  const std::size_t padded = engine.padded();
  const std::size_t n_scales = grid.count();

  CwtValues result;
  result.coefficients = ComplexMatrix(n, n_scales);

  std::vector<std::complex<double>> spec(padded);
  {
    FftBuffer in(padded), tmp(padded);
    result.mean = engine.spectrum(x.data(), spec.data(), in, tmp);
  }
  double energy = 0.0;
  for (double v : x) {
    double d = v - result.mean;
    energy += d * d;
  }
  result.energy = energy * grid.dt;

  auto& coeff = result.coefficients;
#pragma omp parallel
  {
    FftBuffer in(padded), tmp(padded);
    std::vector<std::complex<double>> col(n);
#pragma omp for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n_scales); ++j) {
      engine.column(spec.data(), static_cast<std::size_t>(j), col.data(), in, tmp);
      for (std::size_t t = 0; t < n; ++t) {
        coeff(t, static_cast<std::size_t>(j)) = col[t];
      }
    }
  }
  return result;
}

}  // namespace detail

namespace {

void validate_series_for_transform(const ReturnSeries& series, const ScaleGrid& grid) {
  if (series.size() < 8) {
    throw InputError("wavelet-core", "series too short for a transform (n < 8)");
  }
  for (double v : series.values) {
    if (!std::isfinite(v)) {
      throw InputError("wavelet-core", "non-finite value in input series");
    }
  }
  if (grid.scales.empty() ||
      grid.scales.back() > static_cast<double>(series.size()) * grid.dt * (1.0 + 1e-12)) {
    throw InputError("wavelet-core", "scale grid does not match series length");
  }
}

WaveletTransform make_transform(const ReturnSeries& series, const ScaleGrid& grid,
                                detail::CwtValues&& values) {
  WaveletTransform tf;
  tf.coefficients = std::move(values.coefficients);
  tf.grid = grid;
  tf.series_length = series.size();
  tf.series_mean = values.mean;
  tf.series_energy = values.energy;
  tf.timestamps = series.timestamps;
  return tf;
}

}  // namespace

WaveletTransform cwt(const ReturnSeries& series, const ScaleGrid& grid,
                     const MorletParams& params) {
  validate(params);
  validate_series_for_transform(series, grid);
  return make_transform(series, grid, detail::cwt_values(series.values, grid, params));
}

WaveletTransform cwt_direct(const ReturnSeries& series, const ScaleGrid& grid,
                            const MorletParams& params) {
  validate(params);
  validate_series_for_transform(series, grid);
  const std::size_t n = series.size();
  if (n > 2048) {
    throw InputError("wavelet-core", "cwt_direct is O(n^2) and capped at n <= 2048");
  }

  double mean = 0.0;
  for (double v : series.values) mean += v;
  mean /= static_cast<double>(n);
  std::vector<double> xm(n);
  double energy = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    xm[t] = series.values[t] - mean;
    energy += xm[t] * xm[t];
  }

  detail::CwtValues values;
  values.mean = mean;
  values.energy = energy * grid.dt;
  values.coefficients = ComplexMatrix(n, grid.count());

  const double dt = grid.dt;
  for (std::size_t j = 0; j < grid.count(); ++j) {
    const double s = grid.scales[j];
    const double amp = std::sqrt(dt / s);
    for (std::size_t u = 0; u < n; ++u) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t t = 0; t < n; ++t) {
        double tau = (static_cast<double>(t) - static_cast<double>(u)) * dt / s;
        acc += xm[t] * std::conj(morlet_mother(tau, params));
      }
      values.coefficients(u, j) = acc * amp;
    }
  }
  return make_transform(series, grid, std::move(values));
}

std::vector<double> cone_of_influence(std::size_t n, double dt, const MorletParams&) {
  if (n < 2) throw InputError("wavelet-core", "cone of influence needs n >= 2");
  std::vector<double> coi(n);
  const double slope = dt / std::sqrt(2.0);
  for (std::size_t t = 0; t < n; ++t) {
    coi[t] = slope * static_cast<double>(std::min(t, n - 1 - t));
  }
  return coi;
}

PowerSpectrum power(const WaveletTransform& transform) {
  PowerSpectrum ps;
  const auto& c = transform.coefficients;
  ps.power = RealMatrix(c.rows(), c.cols());
  for (std::size_t t = 0; t < c.rows(); ++t) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      ps.power(t, j) = std::norm(c(t, j));
    }
  }
  ps.coi = cone_of_influence(transform.series_length, transform.grid.dt);
  ps.grid = transform.grid;
  ps.timestamps = transform.timestamps;
  return ps;
}

double reconstruction_constant(std::size_t n, const ScaleGrid& grid,
                               const MorletParams& params) {
  std::vector<double> impulse(n, 0.0);
  impulse[n / 2] = 1.0;
  auto values = detail::cwt_values(impulse, grid, params);
  double sum = 0.0;
  for (std::size_t j = 0; j < grid.count(); ++j) {
    sum += values.coefficients(n / 2, j).real() / std::sqrt(grid.scales[j]);
  }
  double c = grid.dj * std::sqrt(grid.dt) * sum;
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw NumericalError("wavelet-core", "impulse calibration produced a bad constant");
  }
  return c;
}

namespace {

void validate_reconstruction_grid(const WaveletTransform& tf) {
  const auto& g = tf.grid;
  if (g.dj > 0.25) {
    throw InputError("wavelet-core",
                     "grid too coarse for reconstruction (dj > 1/4 voids the guarantee)");
  }
  double span = static_cast<double>(tf.series_length) * g.dt;
  if (g.s0 > 2.0 * g.dt * (1.0 + 1e-12) || g.scales.back() < span / 4.0) {
    throw InputError("wavelet-core",
                     "reconstruction requires a grid covering 2*dt up to the series length");
  }
}

}  // namespace

ReturnSeries inverse_cwt(const WaveletTransform& transform, const WaveletBasis& basis) {
  validate_reconstruction_grid(transform);
  const auto& g = transform.grid;
  const std::size_t n = transform.series_length;
  const double c_rec = reconstruction_constant(n, g, basis.params);
  const double weight = g.dj * std::sqrt(g.dt) / c_rec;

  ReturnSeries out;
  out.values.resize(n);
  out.timestamps = transform.timestamps;
  out.source_symbol = "reconstruction";
  std::vector<double> inv_sqrt_s(g.count());
  for (std::size_t j = 0; j < g.count(); ++j) inv_sqrt_s[j] = 1.0 / std::sqrt(g.scales[j]);
  for (std::size_t t = 0; t < n; ++t) {
    double acc = 0.0;
    for (std::size_t j = 0; j < g.count(); ++j) {
      acc += transform.coefficients(t, j).real() * inv_sqrt_s[j];
    }
    out.values[t] = weight * acc;
  }
  return out;
}

EnergyReport energy(const WaveletTransform& transform, const MorletParams& params) {
  const auto& g = transform.grid;
  const std::size_t n = transform.series_length;
  // Same impulse constant as reconstruction, in mother-amplitude units.
  const double psi0 = morlet_mother(0.0, params).real();
  const double c_delta = reconstruction_constant(n, g, params) / psi0;

  double total = 0.0;
  for (std::size_t j = 0; j < g.count(); ++j) {
    double col = 0.0;
    for (std::size_t t = 0; t < n; ++t) col += std::norm(transform.coefficients(t, j));
    total += col / g.scales[j];
  }
  EnergyReport report;
  report.wavelet_energy = g.dj * g.dt / c_delta * total;
  report.series_energy = transform.series_energy;
  return report;
}

}  // namespace cwts
