#include "cwts/scale_grid.hpp"

#include <cmath>

#include "cwts/errors.hpp"

namespace cwts {

ScaleGrid build_scale_grid(std::size_t n, double dt, double s0, double dj) {
  if (n < 8) throw InputError("wavelet-core", "series too short for a scale grid (n < 8)");
  if (!(dt > 0.0)) throw InputError("wavelet-core", "dt must be positive");
  if (!(dj > 0.0)) throw InputError("wavelet-core", "dj must be positive");
  if (s0 < 2.0 * dt) {
    throw InputError("wavelet-core", "s0 < 2*dt: grid would alias");
  }
  double j_max = std::floor(std::log2(static_cast<double>(n) * dt / s0) / dj);
  if (j_max < 1.0) {
    throw InputError("wavelet-core", "grid would hold fewer than two scales");
  }
  auto count = static_cast<std::size_t>(j_max) + 1;
  ScaleGrid grid;
  grid.s0 = s0;
  grid.dj = dj;
  grid.dt = dt;
  grid.scales.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    grid.scales[j] = s0 * std::exp2(dj * static_cast<double>(j));
  }
  return grid;
}

}  // namespace cwts
