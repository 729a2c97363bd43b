// 8-bit three-channel image storage (row-major, channel-interleaved RGB).
#pragma once

#include <cstdint>
#include <vector>

#include "dqzw/errors.hpp"

namespace dqzw {

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> px;  // size 3 * width * height

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), px(static_cast<std::size_t>(3) * w * h) {
    if (w < 0 || h < 0) throw BadParameters("negative image dimension");
  }

  std::size_t index(int x, int y, int c) const {
    return (static_cast<std::size_t>(y) * width + x) * 3 + c;
  }
  std::uint8_t& at(int x, int y, int c) { return px[index(x, y, c)]; }
  std::uint8_t at(int x, int y, int c) const { return px[index(x, y, c)]; }

  bool square() const { return width == height && width > 0; }

  bool operator==(const RgbImage& o) const {
    return width == o.width && height == o.height && px == o.px;
  }
};

// Per-channel real-valued image produced by the feature transform.
struct FeatureImage {
  int width = 0;
  int height = 0;
  std::vector<double> values;  // size 3 * width * height, same layout as RgbImage

  FeatureImage() = default;
  FeatureImage(int w, int h)
      : width(w), height(h), values(static_cast<std::size_t>(3) * w * h) {}

  std::size_t index(int x, int y, int c) const {
    return (static_cast<std::size_t>(y) * width + x) * 3 + c;
  }
  double& at(int x, int y, int c) { return values[index(x, y, c)]; }
  double at(int x, int y, int c) const { return values[index(x, y, c)]; }
};

inline std::uint8_t clamp_byte(double v) {
  if (v <= 0.0) return 0;
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(v + 0.5);
}

inline std::uint8_t clamp_byte_int(int v) {
  if (v <= 0) return 0;
  if (v >= 255) return 255;
  return static_cast<std::uint8_t>(v);
}

}  // namespace dqzw
