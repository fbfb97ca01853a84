#include <cmath>
#include <complex>

#include <doctest.h>

#include "cwts/errors.hpp"
#include "cwts/morlet.hpp"
#include "support.hpp"

using namespace cwts;

TEST_CASE("morlet mother at t = 0 is pi^(-1/4)") {
  auto v = morlet_mother(0.0);
  CHECK(v.real() == doctest::Approx(0.751125544464943).epsilon(1e-12));
  CHECK(v.imag() == 0.0);
}

TEST_CASE("morlet mother decays to zero away from the origin") {
  CHECK(std::abs(morlet_mother(10.0)) < 1e-21);
  CHECK(std::abs(morlet_mother(-10.0)) < 1e-21);
}

TEST_CASE("morlet mother at t = 1") {
  // pi^(-1/4) e^(-1/2) (cos 6 + i sin 6), evaluated independently.
  auto v = morlet_mother(1.0);
  CHECK(v.real() == doctest::Approx(0.437435024437488).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(-0.127296300439848).epsilon(1e-12));
}

TEST_CASE("mother wavelet has (approximately) zero mean and unit L2 norm") {
  // |integral psi| is O(e^(-omega0^2/2)) ~ 2e-8 for omega0 = 6; the spec
  // tolerance 1e-7 reflects that the plain Morlet only approximately
  // satisfies the admissibility condition.
  auto re = testsupport::simpson([](double t) { return morlet_mother(t).real(); }, -16.0, 16.0,
                                 1 << 14);
  auto im = testsupport::simpson([](double t) { return morlet_mother(t).imag(); }, -16.0, 16.0,
                                 1 << 14);
  CHECK(std::abs(std::complex<double>(re, im)) <= 1e-7);

  auto l2 = testsupport::simpson([](double t) { return std::norm(morlet_mother(t)); }, -16.0,
                                 16.0, 1 << 14);
  CHECK(l2 == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("fourier form peaks at omega0 and vanishes at non-positive frequency") {
  CHECK(morlet_fourier(6.0) == doctest::Approx(0.751125544464943).epsilon(1e-12));
  CHECK(morlet_fourier(0.0) == 0.0);
  CHECK(morlet_fourier(-3.0) == 0.0);

  // Locate the maximizer on a fine grid.
  double best_w = 0.0, best = -1.0;
  for (int i = 0; i <= 1200000; ++i) {
    double w = 12.0 * i / 1200000.0;
    double v = morlet_fourier(w);
    if (v > best) {
      best = v;
      best_w = w;
    }
  }
  CHECK(best_w == doctest::Approx(6.0).epsilon(1e-4));
}

TEST_CASE("fourier factor converts scale to period") {
  // 4 pi / (6 + sqrt(38))
  CHECK(fourier_factor() == doctest::Approx(1.033043647749254).epsilon(1e-12));
  double w0 = 6.0;
  CHECK(fourier_factor() ==
        doctest::Approx(4.0 * M_PI / (w0 + std::sqrt(2.0 + w0 * w0))).epsilon(1e-15));
}

TEST_CASE("admissibility constant by quadrature") {
  double c6 = admissibility_constant(MorletParams{6.0});
  CHECK(c6 > 0.0);
  CHECK(c6 == doctest::Approx(0.169085377949).epsilon(1e-7));

  double c8 = admissibility_constant(MorletParams{8.0});
  CHECK(c8 > 0.0);
  CHECK(c8 < c6);  // strictly decreasing from omega0 = 6 to 8

  // The analytic cutoff keeps the integrand negligible at the lower limit.
  double w = 1e-6;
  double integrand = morlet_fourier(w) * morlet_fourier(w) / w;
  CHECK(integrand < 1e-9);

  CHECK_THROWS_AS(admissibility_constant(MorletParams{2.0}), InputError);
}

TEST_CASE("basis construction validates params") {
  auto basis = make_wavelet_basis({});
  CHECK(basis.admissibility == doctest::Approx(0.169085377949).epsilon(1e-7));
  CHECK_THROWS_AS(make_wavelet_basis(MorletParams{-1.0}), InputError);
  CHECK_THROWS_AS(make_wavelet_basis(MorletParams{0.0}), InputError);
}
