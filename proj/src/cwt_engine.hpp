#pragma once

// Internal FFT-path machinery shared by the forward transform and the Monte
// Carlo null. Not part of the public API.

#include <complex>
#include <cstddef>
#include <vector>

#include "cwts/fft.hpp"
#include "cwts/morlet.hpp"
#include "cwts/scale_grid.hpp"
#include "cwts/util.hpp"

namespace cwts::detail {

class CwtEngine {
 public:
  CwtEngine(std::size_t n, const ScaleGrid& grid, const MorletParams& params);

  std::size_t n() const { return n_; }
  std::size_t padded() const { return padded_; }

  // DFT of the mean-removed, zero-padded series. `out` must hold padded()
  // values. Returns the removed mean.
  double spectrum(const double* x, std::complex<double>* out, FftBuffer& in,
                  FftBuffer& tmp) const;

  // One scale column: inverse DFT of spectrum * conj(filter_j), truncated to
  // the series length. in/out are per-thread scratch of padded() values.
  void column(const std::complex<double>* spectrum, std::size_t j,
              std::complex<double>* out, FftBuffer& in, FftBuffer& tmp) const;

  // sqrt(2 pi s/dt) * Psi(s * omega_k), the scale-normalized filter.
  double filter(std::size_t j, std::size_t k) const;

 private:
  std::size_t n_;
  std::size_t padded_;
  ScaleGrid grid_;
  MorletParams params_;
  FftPlan plan_;
  std::vector<double> omega_;  // angular frequency per bin, negative half < 0
  std::vector<double> norm_;   // sqrt(2 pi s_j / dt)
};

struct CwtValues {
  ComplexMatrix coefficients;
  double mean = 0.0;
  double energy = 0.0;  // sum (x-mean)^2 * dt
};

// Values-only forward transform (no timestamps); the public cwt() wraps it.
CwtValues cwt_values(const std::vector<double>& x, const ScaleGrid& grid,
                     const MorletParams& params);

}  // namespace cwts::detail
