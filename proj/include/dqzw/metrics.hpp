// Watermark quality metrics: PSNR, SSIM, BER, NC.
#pragma once

#include <cmath>
#include <limits>

#include "dqzw/errors.hpp"
#include "dqzw/image.hpp"

namespace dqzw {

struct MetricsReport {
  double psnr = 0.0;  // dB, +infinity for identical images
  double ssim = 0.0;
  double ber = 0.0;
  double nc = 0.0;
  bool authentic = false;
};

namespace detail {

inline void require_same_dims(const RgbImage& a, const RgbImage& b) {
  if (a.width != b.width || a.height != b.height)
    throw DimensionMismatch("metric operands have different dimensions");
}

}  // namespace detail

// 10 log10(3 m n 255^2 / sum (F - F~)^2); +inf when the images coincide.
inline double psnr(const RgbImage& f, const RgbImage& g) {
  detail::require_same_dims(f, g);
  double sse = 0.0;
  for (std::size_t t = 0; t < f.px.size(); ++t) {
    const double d = static_cast<double>(f.px[t]) - static_cast<double>(g.px[t]);
    sse += d * d;
  }
  if (sse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(static_cast<double>(f.px.size()) * 255.0 * 255.0 / sse);
}

// Global-statistics SSIM per channel, averaged over the three channels.
// Stabilizers c1 = (0.01 * 255)^2 and c2 = (0.03 * 255)^2.
inline double ssim(const RgbImage& f, const RgbImage& g) {
  detail::require_same_dims(f, g);
  const double c1 = 0.01 * 255.0 * 0.01 * 255.0;
  const double c2 = 0.03 * 255.0 * 0.03 * 255.0;
  const std::size_t n = static_cast<std::size_t>(f.width) * f.height;
  double total = 0.0;
  for (int ch = 0; ch < 3; ++ch) {
    double mu_f = 0.0, mu_g = 0.0;
    for (int y = 0; y < f.height; ++y)
      for (int x = 0; x < f.width; ++x) {
        mu_f += f.at(x, y, ch);
        mu_g += g.at(x, y, ch);
      }
    mu_f /= static_cast<double>(n);
    mu_g /= static_cast<double>(n);
    double var_f = 0.0, var_g = 0.0, cov = 0.0;
    for (int y = 0; y < f.height; ++y)
      for (int x = 0; x < f.width; ++x) {
        const double df = f.at(x, y, ch) - mu_f;
        const double dg = g.at(x, y, ch) - mu_g;
        var_f += df * df;
        var_g += dg * dg;
        cov += df * dg;
      }
    var_f /= static_cast<double>(n);
    var_g /= static_cast<double>(n);
    cov /= static_cast<double>(n);
    total += (2.0 * mu_f * mu_g + c1) * (2.0 * cov + c2) /
             ((mu_f * mu_f + mu_g * mu_g + c1) * (var_f + var_g + c2));
  }
  return total / 3.0;
}

// One bit per pixel-channel: binarize at `threshold` (value >= threshold
// reads as 1) and count mismatches over 3 m n bits.
inline double ber(const RgbImage& f, const RgbImage& g, int threshold = 128) {
  detail::require_same_dims(f, g);
  if (threshold < 0 || threshold > 255) throw BadParameters("ber threshold out of range");
  std::size_t mismatched = 0;
  for (std::size_t t = 0; t < f.px.size(); ++t) {
    const bool bf = f.px[t] >= threshold;
    const bool bg = g.px[t] >= threshold;
    if (bf != bg) ++mismatched;
  }
  return static_cast<double>(mismatched) / static_cast<double>(f.px.size());
}

// Normalized correlation over raw pixel values (cosine similarity).
inline double nc(const RgbImage& f, const RgbImage& g) {
  detail::require_same_dims(f, g);
  double dot = 0.0, nf = 0.0, ng = 0.0;
  for (std::size_t t = 0; t < f.px.size(); ++t) {
    const double a = f.px[t];
    const double b = g.px[t];
    dot += a * b;
    nf += a * a;
    ng += b * b;
  }
  if (nf == 0.0 || ng == 0.0) throw ZeroImage("normalized correlation of an all-zero image");
  return dot / (std::sqrt(nf) * std::sqrt(ng));
}

}  // namespace dqzw
