#pragma once

#include <complex>

namespace cwts {

// Morlet mother wavelet psi(t) = pi^(-1/4) exp(i w0 t) exp(-t^2/2) and its
// frequency-domain form. omega0 = 6 balances time and frequency localization
// and makes the Fourier period of scale s approximately 1.033 s.
struct MorletParams {
  double omega0 = 6.0;
};

void validate(const MorletParams& params);  // omega0 > 0

std::complex<double> morlet_mother(double t, const MorletParams& params = {});

// Fourier form pi^(-1/4) exp(-(omega-w0)^2/2) for omega > 0, zero otherwise
// (analytic wavelet: no response at non-positive frequency).
double morlet_fourier(double omega, const MorletParams& params = {});

// Scale -> Fourier period conversion factor 4*pi / (w0 + sqrt(2 + w0^2)).
double fourier_factor(const MorletParams& params = {});

// C_psi = integral_0^inf |Psi(f)|^2 / f df by composite Simpson quadrature,
// converged to 1e-8 relative between grid refinements. Requires omega0 >= 5;
// below that the near-zero tail of the Gaussian makes the integral blow up.
double admissibility_constant(const MorletParams& params = {});

struct WaveletBasis {
  MorletParams params;
  double admissibility;  // C_psi for these params

  std::complex<double> mother(double t) const { return morlet_mother(t, params); }
  double fourier(double omega) const { return morlet_fourier(omega, params); }
};

WaveletBasis make_wavelet_basis(const MorletParams& params = {});

}  // namespace cwts
