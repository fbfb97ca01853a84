#pragma once

#include <cstddef>
#include <vector>

namespace cwts {

// Fractional-dyadic scale grid s_j = s0 * 2^(j*dj), j = 0..J with
// J = floor(log2(n*dt/s0)/dj). Scales are in the sampling-interval unit
// (days for daily data).
struct ScaleGrid {
  double s0 = 2.0;
  double dj = 1.0 / 12.0;
  double dt = 1.0;
  std::vector<double> scales;

  std::size_t count() const { return scales.size(); }
};

// Throws InputError for n < 8, s0 < 2*dt (would alias), dj <= 0, or a grid
// that would hold fewer than two scales.
ScaleGrid build_scale_grid(std::size_t n, double dt, double s0, double dj);

inline ScaleGrid default_scale_grid(std::size_t n, double dt = 1.0) {
  return build_scale_grid(n, dt, 2.0 * dt, 1.0 / 12.0);
}

}  // namespace cwts
