// Arnold scrambling: the modular linear map [x;y] -> M [x;y] mod N applied
// k times as a pixel permutation, and its exact inverse.
#pragma once

#include <cstdint>

#include "dqzw/errors.hpp"
#include "dqzw/image.hpp"

namespace dqzw {

struct ArnoldKey {
  std::int64_t a = 1, b = 1, c = 1, d = 2;  // classic cat map
  int k = 10;                               // iteration count
  int n = 0;                                // image side length

  std::int64_t det() const { return a * d - b * c; }
};

namespace detail {

inline std::int64_t mod_n(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

// One application of [x;y] -> M [x;y] mod N to every pixel.
inline RgbImage arnold_step(const RgbImage& img, std::int64_t a, std::int64_t b,
                            std::int64_t c, std::int64_t d) {
  const std::int64_t n = img.width;
  RgbImage out(img.width, img.height);
  for (std::int64_t y = 0; y < n; ++y) {
    for (std::int64_t x = 0; x < n; ++x) {
      const int nx = static_cast<int>(mod_n(a * x + b * y, n));
      const int ny = static_cast<int>(mod_n(c * x + d * y, n));
      for (int ch = 0; ch < 3; ++ch)
        out.at(nx, ny, ch) = img.at(static_cast<int>(x), static_cast<int>(y), ch);
    }
  }
  return out;
}

inline void check_arnold(const RgbImage& img, const ArnoldKey& key) {
  const std::int64_t det = key.det();
  if (det != 1 && det != -1) throw BadKey("arnold key must satisfy |ad - bc| = 1");
  if (key.k < 0) throw BadKey("arnold iteration count must be nonnegative");
  if (!img.square()) throw NotSquare("arnold scrambling needs a square image");
  if (img.width != key.n) throw DimensionMismatch("image side differs from arnold key N");
}

}  // namespace detail

inline RgbImage arnold_scramble(const RgbImage& img, const ArnoldKey& key) {
  detail::check_arnold(img, key);
  RgbImage out = img;
  for (int t = 0; t < key.k; ++t) out = detail::arnold_step(out, key.a, key.b, key.c, key.d);
  return out;
}

// Applies the integer modular inverse matrix k times; exact inverse of
// arnold_scramble for the same key.
inline RgbImage arnold_unscramble(const RgbImage& img, const ArnoldKey& key) {
  detail::check_arnold(img, key);
  const std::int64_t det = key.det();  // +1 or -1; det^{-1} = det mod N
  const std::int64_t ia = det * key.d;
  const std::int64_t ib = -det * key.b;
  const std::int64_t ic = -det * key.c;
  const std::int64_t id = det * key.a;
  RgbImage out = img;
  for (int t = 0; t < key.k; ++t) out = detail::arnold_step(out, ia, ib, ic, id);
  return out;
}

}  // namespace dqzw
