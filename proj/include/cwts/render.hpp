#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cwts/significance.hpp"
#include "cwts/transform.hpp"

namespace cwts {

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // 3 bytes per pixel, row-major, top row first

  std::array<std::uint8_t, 3> pixel(int x, int y) const {
    std::size_t i = 3 * (static_cast<std::size_t>(y) * width + x);
    return {rgb[i], rgb[i + 1], rgb[i + 2]};
  }
};

struct GradientStop {
  double t;  // position in [0, 1]
  std::uint8_t r, g, b;
};

// Piecewise-linear cold-to-hot gradient; the hottest stop runs toward dark
// red. The exact stops are recorded in the run manifest so golden-image
// comparisons are meaningful.
const std::vector<GradientStop>& default_gradient();

std::array<std::uint8_t, 3> gradient_color(const std::vector<GradientStop>& stops, double t);

struct RenderOptions {
  int cell_size = 1;          // pixels per matrix cell
  bool shade_coi = true;      // pale colors above the COI
  bool draw_boundary = true;  // black significance contour
};

// Raster of the power spectrum: x = time, y = scale with the largest scale at
// the top (matching the pale-top orientation of the COI). Cell color comes
// from per-image normalized log2 power; boundary cells of the significance
// mask are black; cells above the COI are blended 40/60 toward a pale gray.
Image render_heatmap(const PowerSpectrum& spectrum, const SignificanceResult& result,
                     const RenderOptions& options = {});

std::vector<std::uint8_t> encode_png(const Image& image);

}  // namespace cwts
