// Frequency-domain feature image: per channel, the centered log-magnitude
// spectrum rescaled to a fixed range.
//
// The exact transform chain (2-D DFT -> magnitude -> log(1 + .) ->
// center shift -> min-max to [lo, hi]) is a parameter of the scheme and is
// recorded in the key file so verification repeats it bit for bit.  The
// floor at lo = 1 keeps the encoded standard part away from exactly zero
// leading minors.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "dqzw/fft.hpp"
#include "dqzw/image.hpp"

namespace dqzw {

struct FeatureParams {
  std::string transform = "logmag-shift-minmax/v1";
  double lo = 1.0;
  double hi = 255.0;

  bool operator==(const FeatureParams&) const = default;
};

inline FeatureImage fft_feature(const RgbImage& img, const FeatureParams& params = {}) {
  const int w = img.width;
  const int h = img.height;
  FeatureImage feature(w, h);
  std::vector<Cplx> grid(static_cast<std::size_t>(w) * h);
  std::vector<double> shifted(static_cast<std::size_t>(w) * h);

  for (int ch = 0; ch < 3; ++ch) {
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        grid[static_cast<std::size_t>(y) * w + x] = Cplx(img.at(x, y, ch), 0.0);
    fft_2d(grid, h, w);

    // log magnitude with the DC bin moved to the center
    for (int y = 0; y < h; ++y) {
      const int sy = (y + h / 2) % h;
      for (int x = 0; x < w; ++x) {
        const int sx = (x + w / 2) % w;
        shifted[static_cast<std::size_t>(sy) * w + sx] =
            std::log1p(std::abs(grid[static_cast<std::size_t>(y) * w + x]));
      }
    }

    const auto [mn_it, mx_it] = std::minmax_element(shifted.begin(), shifted.end());
    const double mn = *mn_it;
    const double mx = *mx_it;
    const double span = mx - mn;
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        const double v = shifted[static_cast<std::size_t>(y) * w + x];
        feature.at(x, y, ch) =
            span > 0.0 ? params.lo + (params.hi - params.lo) * (v - mn) / span : params.lo;
      }
  }
  return feature;
}

}  // namespace dqzw
