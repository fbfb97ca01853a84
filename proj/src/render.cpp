#include "cwts/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include <png.h>

#include "cwts/errors.hpp"

namespace cwts {

const std::vector<GradientStop>& default_gradient() {
  static const std::vector<GradientStop> stops = {
      {0.0, 8, 8, 96},      // deep blue
      {0.2, 16, 80, 255},   // blue
      {0.4, 0, 224, 255},   // cyan
      {0.6, 255, 255, 64},  // yellow
      {0.8, 255, 64, 0},    // red
      {1.0, 64, 0, 16},     // near black, "hotter than red"
  };
  return stops;
}

std::array<std::uint8_t, 3> gradient_color(const std::vector<GradientStop>& stops, double t) {
  t = std::clamp(t, 0.0, 1.0);
  if (t <= stops.front().t) return {stops.front().r, stops.front().g, stops.front().b};
  for (std::size_t i = 1; i < stops.size(); ++i) {
    if (t <= stops[i].t) {
      const auto& a = stops[i - 1];
      const auto& b = stops[i];
      double f = (t - a.t) / (b.t - a.t);
      auto mix = [f](std::uint8_t x, std::uint8_t y) {
        return static_cast<std::uint8_t>(std::lround(x + f * (y - x)));
      };
      return {mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)};
    }
  }
  return {stops.back().r, stops.back().g, stops.back().b};
}

namespace {

// "Paler colors" above the COI: keep 40% of the cell color, blend the rest
// toward a light gray backdrop.
std::array<std::uint8_t, 3> pale(std::array<std::uint8_t, 3> c) {
  auto blend = [](std::uint8_t v) {
    return static_cast<std::uint8_t>(std::lround(0.4 * v + 0.6 * 224.0));
  };
  return {blend(c[0]), blend(c[1]), blend(c[2])};
}

}  // namespace

Image render_heatmap(const PowerSpectrum& spectrum, const SignificanceResult& result,
                     const RenderOptions& options) {
  const std::size_t n_times = spectrum.power.rows();
  const std::size_t n_scales = spectrum.power.cols();
  if (result.mask.rows() != n_times || result.mask.cols() != n_scales) {
    throw InputError("cli-render", "mask dimensions do not match the spectrum");
  }
  if (spectrum.coi.size() != n_times) {
    throw InputError("cli-render", "COI length does not match the spectrum");
  }
  if (options.cell_size < 1) throw InputError("cli-render", "cell_size must be >= 1");

  // Per-image normalization of log2 power; the data files carry the absolute
  // values, the image is presentation only.
  double vmin = 0.0, vmax = 0.0;
  bool first = true;
  RealMatrix logp(n_times, n_scales);
  for (std::size_t t = 0; t < n_times; ++t) {
    for (std::size_t j = 0; j < n_scales; ++j) {
      double v = std::log2(std::max(spectrum.power(t, j), 1e-300));
      logp(t, j) = v;
      if (first) {
        vmin = vmax = v;
        first = false;
      } else {
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
      }
    }
  }
  const double range = vmax - vmin;

  const auto& stops = default_gradient();
  const int cs = options.cell_size;
  Image img;
  img.width = static_cast<int>(n_times) * cs;
  img.height = static_cast<int>(n_scales) * cs;
  img.rgb.assign(static_cast<std::size_t>(img.width) * img.height * 3, 0);

  auto significant = [&](std::ptrdiff_t t, std::ptrdiff_t j) {
    if (t < 0 || j < 0 || t >= static_cast<std::ptrdiff_t>(n_times) ||
        j >= static_cast<std::ptrdiff_t>(n_scales))
      return false;
    return result.mask(static_cast<std::size_t>(t), static_cast<std::size_t>(j)) != 0;
  };

  for (std::size_t j = 0; j < n_scales; ++j) {
    // Largest scale on the top row: the pale COI region sits at the top of
    // the chart.
    const std::size_t row = n_scales - 1 - j;
    for (std::size_t t = 0; t < n_times; ++t) {
      double norm = range > 0.0 ? (logp(t, j) - vmin) / range : 0.0;
      auto color = gradient_color(stops, norm);

      if (options.draw_boundary && significant(static_cast<std::ptrdiff_t>(t),
                                               static_cast<std::ptrdiff_t>(j))) {
        auto ts = static_cast<std::ptrdiff_t>(t);
        auto js = static_cast<std::ptrdiff_t>(j);
        bool boundary = !significant(ts - 1, js) || !significant(ts + 1, js) ||
                        !significant(ts, js - 1) || !significant(ts, js + 1);
        if (boundary) color = {0, 0, 0};
      }
      if (options.shade_coi && spectrum.grid.scales[j] > spectrum.coi[t]) {
        color = pale(color);
      }

      for (int dy = 0; dy < cs; ++dy) {
        for (int dx = 0; dx < cs; ++dx) {
          std::size_t y = static_cast<std::size_t>(row) * cs + static_cast<std::size_t>(dy);
          std::size_t x = t * static_cast<std::size_t>(cs) + static_cast<std::size_t>(dx);
          std::size_t off = 3 * (y * static_cast<std::size_t>(img.width) + x);
          img.rgb[off] = color[0];
          img.rgb[off + 1] = color[1];
          img.rgb[off + 2] = color[2];
        }
      }
    }
  }
  return img;
}

namespace {

void png_append(png_structp png, png_bytep data, png_size_t len) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + len);
}

}  // namespace

std::vector<std::uint8_t> encode_png(const Image& image) {
  if (image.width <= 0 || image.height <= 0 ||
      image.rgb.size() != static_cast<std::size_t>(image.width) * image.height * 3) {
    throw InputError("cli-render", "image buffer does not match its dimensions");
  }
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw NumericalError("cli-render", "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw NumericalError("cli-render", "libpng info init failed");
  }
  std::vector<std::uint8_t> out;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw NumericalError("cli-render", "libpng write failed");
  }
  png_set_write_fn(png, &out, png_append, nullptr);
  // Fixed encoder settings; identical pixels give identical bytes.
  png_set_compression_level(png, 6);
  png_set_filter(png, 0, PNG_FILTER_NONE);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
               static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<png_bytep> rows(static_cast<std::size_t>(image.height));
  for (int y = 0; y < image.height; ++y) {
    rows[static_cast<std::size_t>(y)] = const_cast<png_bytep>(
        image.rgb.data() + static_cast<std::size_t>(y) * image.width * 3);
  }
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

}  // namespace cwts
