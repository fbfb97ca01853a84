#pragma once

#include <cstddef>
#include <vector>

#include "cwts/data_io.hpp"
#include "cwts/morlet.hpp"
#include "cwts/scale_grid.hpp"
#include "cwts/util.hpp"

namespace cwts {

struct WaveletTransform {
  ComplexMatrix coefficients;  // (n_times x n_scales)
  ScaleGrid grid;
  std::size_t series_length = 0;
  double series_mean = 0.0;    // removed before the transform
  double series_energy = 0.0;  // sum (x - mean)^2 * dt, kept for energy checks
  std::vector<Date> timestamps;
};

struct PowerSpectrum {
  RealMatrix power;  // |W|^2, (n_times x n_scales)
  std::vector<double> coi;  // per-time max reliable scale, in scale units
  ScaleGrid grid;
  std::vector<Date> timestamps;
};

// Forward CWT, FFT path. Per scale the padded spectrum is multiplied by the
// conjugated Fourier form scaled by sqrt(2*pi*s/dt), which makes expected
// power flat across scales for white noise. The series mean is removed first
// and the series is zero-padded to the next power of two >= 4n; the wide pad
// keeps circular wrap-around below coefficient tolerance inside the COI.
// Scale columns are independent and computed in parallel; results are
// bit-identical regardless of thread count.
WaveletTransform cwt(const ReturnSeries& series, const ScaleGrid& grid,
                     const MorletParams& params = {});

// Literal Riemann-sum of the CWT integral, O(n^2 * J). The testing oracle for
// cwt; refuses series longer than 2048.
//
// Caveat: at scales below ~4*dt the two paths genuinely differ. The sampled
// mother wavelet aliases its above-Nyquist band back into the spectrum while
// the FFT path truncates it, so agreement to 1e-6 holds only for s >= 4*dt.
WaveletTransform cwt_direct(const ReturnSeries& series, const ScaleGrid& grid,
                            const MorletParams& params = {});

// coi[t] = (dt/sqrt(2)) * min(t, n-1-t): the largest scale whose e-folding
// distance sqrt(2)*s stays inside the series at time t.
std::vector<double> cone_of_influence(std::size_t n, double dt,
                                      const MorletParams& params = {});

PowerSpectrum power(const WaveletTransform& transform);

// Inverse transform by the delta-reconstruction sum over scales,
//   x_t = dj*sqrt(dt)/C_rec * sum_j Re W(t, s_j) / sqrt(s_j),
// with C_rec calibrated once per (n, grid, params) by transforming a unit
// impulse. Returns the zero-mean series. Requires dj <= 1/4 and a grid
// running from 2*dt up to the series length.
ReturnSeries inverse_cwt(const WaveletTransform& transform, const WaveletBasis& basis);

// The calibration constant used by inverse_cwt and energy. Exposed for tests.
double reconstruction_constant(std::size_t n, const ScaleGrid& grid,
                               const MorletParams& params = {});

struct EnergyReport {
  double wavelet_energy = 0.0;  // discretized scale-integral of |W|^2
  double series_energy = 0.0;   // ||x - mean||^2 * dt

  double ratio() const { return series_energy > 0 ? wavelet_energy / series_energy : 0.0; }
};

// Discretization of the energy identity: sum |W|^2 / s_j weighted by dj*dt
// and normalized by the impulse-calibrated constant. params must match the
// ones the transform was computed with.
EnergyReport energy(const WaveletTransform& transform, const MorletParams& params = {});

}  // namespace cwts
