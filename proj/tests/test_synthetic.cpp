#include <cmath>
#include <cstring>
#include <vector>

#include <doctest.h>

#include "cwts/errors.hpp"
#include "cwts/synthetic.hpp"
#include "cwts/transform.hpp"
#include "support.hpp"

using namespace cwts;

TEST_CASE("generators are seed-deterministic") {
  auto a = gen_ar1(256, 0.6, 1.0, 12345);
  auto b = gen_ar1(256, 0.6, 1.0, 12345);
  CHECK(a.values == b.values);
  auto c = gen_ar1(256, 0.6, 1.0, 12346);
  CHECK(a.values != c.values);
}

TEST_CASE("white-noise generator has near-zero lag-1 autocorrelation") {
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto series = gen_ar1(4096, 0.0, 1.0, mix_seed(31, seed));
    if (std::abs(testsupport::lag1_autocorr(series.values)) <= 0.05) ++inside;
  }
  CHECK(inside >= 19);
}

TEST_CASE("AR(1) generator variance matches the closed form") {
  const double phi = 0.8, expect = 1.0 / (1.0 - phi * phi);
  for (std::uint64_t seed : {5u, 6u, 7u}) {
    auto series = gen_ar1(8192, phi, 1.0, seed);
    double var = testsupport::variance(series.values);
    CHECK(std::abs(var - expect) / expect <= 0.10);
  }
}

TEST_CASE("AR(1) generator preconditions") {
  CHECK_THROWS_AS(gen_ar1(256, 1.0, 1.0, 1), InputError);    // nonstationary
  CHECK_THROWS_AS(gen_ar1(256, -1.2, 1.0, 1), InputError);
  CHECK_THROWS_AS(gen_ar1(256, 0.5, 0.0, 1), InputError);    // sigma
  CHECK_THROWS_AS(gen_ar1(16, 0.5, 1.0, 1), InputError);     // n < 32
}

TEST_CASE("degenerate burst reproduces the baseline bitwise") {
  Ar1Model base{0.5, 0.75, 1.0};
  BurstSpec spec{100, 160, 2.0, 8.0, 1.0};
  auto burst = gen_burst_series(1024, base, spec, 777);
  auto baseline = gen_ar1(1024, 0.5, std::sqrt(0.75), 777);
  REQUIRE(burst.series.values.size() == baseline.values.size());
  CHECK(std::memcmp(burst.series.values.data(), baseline.values.data(),
                    baseline.values.size() * sizeof(double)) == 0);
}

TEST_CASE("burst adds exactly the requested in-window standard deviation") {
  Ar1Model base{0.5, 0.75, 1.0};
  BurstSpec spec{1000, 1060, 2.0, 8.0, 4.0};
  auto with = gen_burst_series(2048, base, spec, 4242);
  auto without = gen_ar1(2048, 0.5, std::sqrt(0.75), 4242);
  std::vector<double> added;
  for (std::size_t t = spec.start; t < spec.end; ++t) {
    added.push_back(with.series.values[t] - without.values[t]);
  }
  double sd = std::sqrt(testsupport::variance(added));
  // (ratio - 1) * sqrt(series_variance) = 3.0
  CHECK(sd == doctest::Approx(3.0).epsilon(1e-9));
  // Outside the window the two series are identical.
  for (std::size_t t = 0; t < spec.start; ++t) {
    CHECK(with.series.values[t] == without.values[t]);
  }
}

TEST_CASE("burst truth mask counts (end-start) x (band scales)") {
  auto grid = default_scale_grid(2048);
  BurstSpec spec{1000, 1060, 2.0, 8.0, 4.0};
  auto truth = burst_truth_mask(spec, grid, 2048);
  std::size_t band_scales = 0;
  const double lambda = fourier_factor();
  for (double s : grid.scales) {
    double period = lambda * s;
    if (period >= 2.0 && period <= 8.0) ++band_scales;
  }
  std::size_t count = 0;
  for (auto v : truth.data()) count += v;
  CHECK(count == (spec.end - spec.start) * band_scales);
  CHECK(band_scales > 0);
}

TEST_CASE("burst spec validation") {
  Ar1Model base{0.5, 0.75, 1.0};
  CHECK_THROWS_AS(gen_burst_series(512, base, BurstSpec{200, 100, 2, 8, 4}, 1), InputError);
  CHECK_THROWS_AS(gen_burst_series(512, base, BurstSpec{100, 600, 2, 8, 4}, 1), InputError);
  CHECK_THROWS_AS(gen_burst_series(512, base, BurstSpec{100, 160, 1.0, 8, 4}, 1), InputError);
  CHECK_THROWS_AS(gen_burst_series(512, base, BurstSpec{100, 160, 8, 2, 4}, 1), InputError);
  CHECK_THROWS_AS(gen_burst_series(512, base, BurstSpec{100, 160, 2, 8, 0.5}, 1), InputError);
}

TEST_CASE("outside the burst window the series stays at baseline variance") {
  Ar1Model base{0.5, 0.75, 1.0};
  BurstSpec spec{900, 960, 2.0, 8.0, 4.0};
  int inside_band = 0;
  const int seeds = 30;
  double ratio_sum = 0.0;
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    auto burst = gen_burst_series(2048, base, spec, mix_seed(99, seed));
    std::vector<double> outside;
    for (std::size_t t = 0; t < 2048; ++t) {
      if (t >= spec.start && t < spec.end) continue;
      outside.push_back(burst.series.values[t]);
    }
    double ratio = testsupport::variance(outside) / base.series_variance;
    ratio_sum += ratio;
    if (ratio >= 0.8 && ratio <= 1.25) ++inside_band;
  }
  CHECK(inside_band == seeds);
  CHECK(ratio_sum / seeds == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("burst power dominates at matching scales") {
  const std::size_t n = 2048;
  Ar1Model base{0.8, 0.36, 1.0 / 0.36};
  BurstSpec spec{1000, 1060, 2.0, 8.0, 4.0};
  auto burst = gen_burst_series(n, base, spec, 4242);
  auto grid = default_scale_grid(n);
  auto spectrum = power(cwt(burst.series, grid));
  auto truth = burst_truth_mask(spec, grid, n);
  auto coi = cone_of_influence(n, 1.0);

  double inside = 0.0, outside = 0.0;
  std::size_t n_in = 0, n_out = 0;
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t j = 0; j < grid.count(); ++j) {
      double period = fourier_factor() * grid.scales[j];
      if (period < spec.min_period || period > spec.max_period) continue;
      if (grid.scales[j] > coi[t]) continue;
      bool near_window = t + 40 >= spec.start && t < spec.end + 40;
      if (truth(t, j)) {
        inside += spectrum.power(t, j);
        ++n_in;
      } else if (!near_window) {
        outside += spectrum.power(t, j);
        ++n_out;
      }
    }
  }
  double mean_in = inside / static_cast<double>(n_in);
  double mean_out = outside / static_cast<double>(n_out);
  CHECK(mean_in > 3.0 * mean_out);
}
