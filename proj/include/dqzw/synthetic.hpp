// Deterministic procedural images for experiments and tests (the toolchain
// ships no sample data).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "dqzw/image.hpp"

namespace dqzw {

// Textured carrier: smooth gradients plus sinusoidal detail and a seeded
// noise floor, different per channel.
inline RgbImage synthetic_carrier(int side, std::uint64_t seed) {
  RgbImage img(side, side);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> jitter(-24, 24);
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      const double u = static_cast<double>(x) / side;
      const double v = static_cast<double>(y) / side;
      const double base[3] = {
          120.0 + 90.0 * std::sin(6.2 * u + 1.7 * v) * std::cos(4.1 * v),
          128.0 + 80.0 * u - 40.0 * v + 30.0 * std::sin(9.0 * u * v + 2.0),
          110.0 + 70.0 * std::cos(5.5 * v) + 50.0 * u * u,
      };
      for (int c = 0; c < 3; ++c)
        img.at(x, y, c) = clamp_byte(base[c] + jitter(rng));
    }
  }
  return img;
}

// Blocky high-contrast watermark resembling a label/logo image.
inline RgbImage synthetic_watermark(int side, std::uint64_t seed = 7) {
  RgbImage img(side, side);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 3);
  const int cell = std::max(1, side / 16);
  for (int by = 0; by < (side + cell - 1) / cell; ++by) {
    for (int bx = 0; bx < (side + cell - 1) / cell; ++bx) {
      const int tone = coin(rng);
      const std::uint8_t rgb[3] = {static_cast<std::uint8_t>(tone & 1 ? 230 : 25),
                                   static_cast<std::uint8_t>(tone & 2 ? 220 : 35),
                                   static_cast<std::uint8_t>(tone ? 200 : 40)};
      for (int y = by * cell; y < std::min(side, (by + 1) * cell); ++y)
        for (int x = bx * cell; x < std::min(side, (bx + 1) * cell); ++x)
          for (int c = 0; c < 3; ++c) img.at(x, y, c) = rgb[c];
    }
  }
  return img;
}

}  // namespace dqzw
