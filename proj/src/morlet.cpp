#include "cwts/morlet.hpp"

#include <cmath>
#include <numbers>

#include "cwts/errors.hpp"

namespace cwts {

namespace {
constexpr double kPi = std::numbers::pi;
const double kNormalization = std::pow(kPi, -0.25);
}  // namespace

void validate(const MorletParams& params) {
  if (!(params.omega0 > 0.0) || !std::isfinite(params.omega0)) {
    throw InputError("wavelet-core", "omega0 must be positive and finite");
  }
}

std::complex<double> morlet_mother(double t, const MorletParams& params) {
  double envelope = kNormalization * std::exp(-0.5 * t * t);
  return {envelope * std::cos(params.omega0 * t), envelope * std::sin(params.omega0 * t)};
}

double morlet_fourier(double omega, const MorletParams& params) {
  if (!(omega > 0.0)) return 0.0;
  double d = omega - params.omega0;
  return kNormalization * std::exp(-0.5 * d * d);
}

double fourier_factor(const MorletParams& params) {
  double w0 = params.omega0;
  return 4.0 * kPi / (w0 + std::sqrt(2.0 + w0 * w0));
}

namespace {

// Composite Simpson of |Psi(w)|^2 / w on [lo, w0+12]; the integrand is below
// 1e-16 of its peak beyond that. The lower limit stops just short of the
// logarithmic blow-up at 0, whose contribution is O(e^{-w0^2}) ~ 1e-16 for
// w0 = 6 and is ignored along with the admissibility correction term.
double cpsi_simpson(double w0, std::size_t halves, double lo) {
  MorletParams p{w0};
  double hi = w0 + 12.0;
  std::size_t m = 2 * halves;
  double h = (hi - lo) / static_cast<double>(m);
  double sum = 0.0;
  for (std::size_t i = 0; i <= m; ++i) {
    double w = lo + h * static_cast<double>(i);
    double psi = morlet_fourier(w, p);
    double f = psi * psi / w;
    double weight = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += weight * f;
  }
  return h / 3.0 * sum;
}

}  // namespace

double admissibility_constant(const MorletParams& params) {
  if (!(params.omega0 >= 5.0)) {
    throw InputError("wavelet-core", "admissibility quadrature requires omega0 >= 5");
  }
  const double lo = 1e-6;
  double coarse = cpsi_simpson(params.omega0, 1 << 15, lo);
  double fine = cpsi_simpson(params.omega0, 1 << 16, lo);
  if (!std::isfinite(fine) || fine <= 0.0 || std::abs(fine - coarse) > 1e-8 * fine) {
    throw NumericalError("wavelet-core", "admissibility quadrature did not converge");
  }
  return fine;
}

WaveletBasis make_wavelet_basis(const MorletParams& params) {
  validate(params);
  return WaveletBasis{params, admissibility_constant(params)};
}

}  // namespace cwts
