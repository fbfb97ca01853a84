#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cwts/data_io.hpp"
#include "cwts/scale_grid.hpp"
#include "cwts/significance.hpp"
#include "cwts/util.hpp"

namespace cwts {

// Standard normal deviates from mt19937_64 via Box-Muller. Hand-rolled
// because std::normal_distribution's algorithm is implementation-defined and
// generated fixtures must reproduce bit-for-bit across toolchains.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : eng_(seed) {}
  double operator()();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// x_t = phi x_{t-1} + eps_t with eps ~ N(0, sigma^2); the first
// ceil(10/(1-phi)) burn-in samples are discarded. Deterministic given seed.
ReturnSeries gen_ar1(std::size_t n, double phi, double sigma, std::uint64_t seed);

// Scale-localized variance burst: inside [start, end) band-limited noise is
// added whose periods lie in [min_period, max_period] days and whose sample
// standard deviation is (amplitude_ratio - 1) times the baseline process
// standard deviation.
struct BurstSpec {
  std::size_t start = 0;
  std::size_t end = 0;
  double min_period = 2.0;
  double max_period = 8.0;
  double amplitude_ratio = 4.0;
};

struct BurstSeries {
  ReturnSeries series;
  BurstSpec spec;
};

// Baseline drawn with `seed` exactly as gen_ar1 would; the burst noise uses
// an independent derived stream, so amplitude_ratio == 1 reproduces the
// baseline realization bitwise.
BurstSeries gen_burst_series(std::size_t n, const Ar1Model& base, const BurstSpec& burst,
                             std::uint64_t seed);

// Ground truth: cell (t, j) is true iff start <= t < end and the Fourier
// period of s_j lies in [min_period, max_period].
MaskMatrix burst_truth_mask(const BurstSpec& burst, const ScaleGrid& grid,
                            std::size_t n_times, const MorletParams& params = {});

}  // namespace cwts
