// The six tampering attacks used for fragility testing.  Every attack is a
// pure function of (image, spec): noise uses a seeded generator, the other
// kinds are deterministic by construction, and output dimensions always
// match the input.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "dqzw/errors.hpp"
#include "dqzw/image.hpp"
#include "dqzw/image_io.hpp"

namespace dqzw {

enum class AttackKind {
  gaussian_noise,
  jpeg_compress,
  rotate,
  center_crop,
  brighten,
  pixel_edit,
};

inline std::string attack_kind_name(AttackKind kind) {
  switch (kind) {
    case AttackKind::gaussian_noise: return "gaussian_noise";
    case AttackKind::jpeg_compress: return "jpeg_compress";
    case AttackKind::rotate: return "rotate";
    case AttackKind::center_crop: return "center_crop";
    case AttackKind::brighten: return "brighten";
    case AttackKind::pixel_edit: return "pixel_edit";
  }
  throw BadParameters("unknown attack kind");
}

inline AttackKind attack_kind_from_name(const std::string& name) {
  if (name == "gaussian_noise" || name == "gaussian") return AttackKind::gaussian_noise;
  if (name == "jpeg_compress" || name == "jpeg") return AttackKind::jpeg_compress;
  if (name == "rotate") return AttackKind::rotate;
  if (name == "center_crop" || name == "crop") return AttackKind::center_crop;
  if (name == "brighten") return AttackKind::brighten;
  if (name == "pixel_edit" || name == "pixel") return AttackKind::pixel_edit;
  throw BadParameters("unknown attack kind: " + name);
}

struct AttackSpec {
  AttackKind kind = AttackKind::gaussian_noise;
  double variance = 0.01;     // gaussian noise variance on the [0,1] scale
  std::uint64_t seed = 0;     // gaussian noise only
  int quality = 10;           // jpeg quality
  double angle = 3.0;         // counterclockwise rotation, degrees
  double area_fraction = 0.25;  // zeroed central area fraction
  int delta = 30;             // brightening offset per channel
  int px_x = 0, px_y = 0, px_channel = 0;
  int px_value = -1;          // 0..255 sets the byte; -1 nudges it by +/-1

  std::string label() const { return attack_kind_name(kind); }
};

namespace detail {

inline RgbImage attack_gaussian(const RgbImage& img, double variance, std::uint64_t seed) {
  if (variance < 0.0 || !std::isfinite(variance))
    throw BadParameters("gaussian noise variance must be nonnegative");
  if (variance == 0.0) return img;
  RgbImage out = img;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, std::sqrt(variance));
  for (std::size_t t = 0; t < out.px.size(); ++t) {
    const double v = static_cast<double>(out.px[t]) / 255.0 + noise(rng);
    out.px[t] = clamp_byte(255.0 * std::clamp(v, 0.0, 1.0));
  }
  return out;
}

inline RgbImage attack_rotate(const RgbImage& img, double angle_deg) {
  if (!std::isfinite(angle_deg)) throw BadParameters("rotation angle must be finite");
  const double ang = angle_deg * std::numbers::pi / 180.0;
  const double ca = std::cos(ang);
  const double sa = std::sin(ang);
  const double cx = (img.width - 1) / 2.0;
  const double cy = (img.height - 1) / 2.0;
  RgbImage out(img.width, img.height);
  // Inverse mapping of a visually counterclockwise rotation (y grows
  // downward); bilinear sampling, black outside the source frame.
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const double dx = x - cx;
      const double dy = y - cy;
      const double sx = cx + ca * dx - sa * dy;
      const double sy = cy + sa * dx + ca * dy;
      const int ix = static_cast<int>(std::floor(sx));
      const int iy = static_cast<int>(std::floor(sy));
      const double fx = sx - ix;
      const double fy = sy - iy;
      for (int c = 0; c < 3; ++c) {
        auto sample = [&](int px, int py) -> double {
          if (px < 0 || py < 0 || px >= img.width || py >= img.height) return 0.0;
          return img.at(px, py, c);
        };
        const double v = (1 - fx) * (1 - fy) * sample(ix, iy) +
                         fx * (1 - fy) * sample(ix + 1, iy) +
                         (1 - fx) * fy * sample(ix, iy + 1) +
                         fx * fy * sample(ix + 1, iy + 1);
        out.at(x, y, c) = clamp_byte(v);
      }
    }
  }
  return out;
}

inline RgbImage attack_center_crop(const RgbImage& img, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw BadParameters("crop fraction must lie in (0,1)");
  const double side = std::sqrt(fraction);
  const int ch = std::max(1, static_cast<int>(std::lround(img.height * side)));
  const int cw = std::max(1, static_cast<int>(std::lround(img.width * side)));
  const int y0 = (img.height - ch) / 2;
  const int x0 = (img.width - cw) / 2;
  RgbImage out = img;
  for (int y = y0; y < y0 + ch; ++y)
    for (int x = x0; x < x0 + cw; ++x)
      for (int c = 0; c < 3; ++c) out.at(x, y, c) = 0;
  return out;
}

inline RgbImage attack_brighten(const RgbImage& img, int delta) {
  RgbImage out = img;
  for (std::size_t t = 0; t < out.px.size(); ++t)
    out.px[t] = clamp_byte_int(static_cast<int>(out.px[t]) + delta);
  return out;
}

inline RgbImage attack_pixel_edit(const RgbImage& img, const AttackSpec& spec) {
  if (spec.px_x < 0 || spec.px_x >= img.width || spec.px_y < 0 || spec.px_y >= img.height)
    throw BadParameters("pixel edit coordinates out of range");
  if (spec.px_channel < 0 || spec.px_channel > 2)
    throw BadParameters("pixel edit channel out of range");
  if (spec.px_value < -1 || spec.px_value > 255)
    throw BadParameters("pixel edit value out of range");
  RgbImage out = img;
  std::uint8_t& byte = out.at(spec.px_x, spec.px_y, spec.px_channel);
  if (spec.px_value >= 0)
    byte = static_cast<std::uint8_t>(spec.px_value);
  else
    byte = byte < 255 ? byte + 1 : byte - 1;  // guaranteed one-byte change
  return out;
}

}  // namespace detail

inline RgbImage apply_attack(const RgbImage& img, const AttackSpec& spec) {
  switch (spec.kind) {
    case AttackKind::gaussian_noise:
      return detail::attack_gaussian(img, spec.variance, spec.seed);
    case AttackKind::jpeg_compress:
      if (spec.quality < 1 || spec.quality > 100)
        throw BadParameters("jpeg quality must lie in [1,100]");
      return jpeg_roundtrip(img, spec.quality);
    case AttackKind::rotate:
      return detail::attack_rotate(img, spec.angle);
    case AttackKind::center_crop:
      return detail::attack_center_crop(img, spec.area_fraction);
    case AttackKind::brighten:
      return detail::attack_brighten(img, spec.delta);
    case AttackKind::pixel_edit:
      return detail::attack_pixel_edit(img, spec);
  }
  throw BadParameters("unknown attack kind");
}

}  // namespace dqzw
