#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "dqzw/arnold.hpp"
#include "dqzw/encode.hpp"
#include "dqzw/feature.hpp"
#include "dqzw/metrics.hpp"
#include "test_support.hpp"

using namespace dqzw;
using test::random_image;

namespace {

// Random unimodular 2x2 integer matrix from shear products (det +1), with
// an optional row swap for det -1.
ArnoldKey random_arnold_key(std::mt19937_64& rng, int n) {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  std::uniform_int_distribution<int> shear(-3, 3);
  std::uniform_int_distribution<int> steps(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  const int count = steps(rng);
  for (int t = 0; t < count; ++t) {
    const std::int64_t s = shear(rng);
    if (coin(rng)) {  // right-multiply by [[1, s], [0, 1]]
      b = a * s + b;
      d = c * s + d;
    } else {  // right-multiply by [[1, 0], [s, 1]]
      a = a + b * s;
      c = c + d * s;
    }
  }
  if (coin(rng)) std::swap(a, c), std::swap(b, d);  // det -> -1
  ArnoldKey key{a, b, c, d, 0, n};
  key.k = std::uniform_int_distribution<int>(0, 12)(rng);
  return key;
}

}  // namespace

TEST(Arnold, ZeroIterationsIsIdentity) {
  std::mt19937_64 rng(51);
  const RgbImage img = random_image(rng, 8, 8);
  ArnoldKey key{1, 1, 1, 2, 0, 8};
  EXPECT_EQ(arnold_scramble(img, key), img);
  EXPECT_EQ(arnold_unscramble(img, key), img);
}

TEST(Arnold, OriginIsFixedPoint) {
  std::mt19937_64 rng(52);
  const RgbImage img = random_image(rng, 16, 16);
  for (int k = 1; k <= 7; ++k) {
    const ArnoldKey key{1, 1, 1, 2, k, 16};
    const RgbImage scrambled = arnold_scramble(img, key);
    for (int c = 0; c < 3; ++c) EXPECT_EQ(scrambled.at(0, 0, c), img.at(0, 0, c));
  }
}

TEST(Arnold, PeriodMatchesBruteForce) {
  // brute-force the permutation period for N = 3 with the classic matrix,
  // then check that scrambling that many times is the identity
  const int n = 3;
  auto step = [&](std::pair<int, int> p) {
    return std::pair<int, int>{(p.first + p.second) % n, (p.first + 2 * p.second) % n};
  };
  int period = 0;
  for (int k = 1; k <= 1000; ++k) {
    bool identity = true;
    for (int x = 0; x < n && identity; ++x)
      for (int y = 0; y < n && identity; ++y) {
        std::pair<int, int> p{x, y};
        for (int t = 0; t < k; ++t) p = step(p);
        identity = (p == std::pair<int, int>{x, y});
      }
    if (identity) {
      period = k;
      break;
    }
  }
  ASSERT_GT(period, 0);

  std::mt19937_64 rng(53);
  const RgbImage img = random_image(rng, n, n);
  const ArnoldKey key{1, 1, 1, 2, period, n};
  EXPECT_EQ(arnold_scramble(img, key), img);
  const ArnoldKey shorter{1, 1, 1, 2, period - 1, n};
  if (period > 1) EXPECT_NE(arnold_scramble(img, shorter), img);
}

TEST(Arnold, RoundTripAndPermutationProperty) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 13);
    const RgbImage img = random_image(rng, n, n);
    const ArnoldKey key = random_arnold_key(rng, n);

    const RgbImage scrambled = arnold_scramble(img, key);
    EXPECT_EQ(arnold_unscramble(scrambled, key), img);

    // pixel multiset preserved exactly
    std::map<std::array<std::uint8_t, 3>, int> before, after;
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        ++before[{img.at(x, y, 0), img.at(x, y, 1), img.at(x, y, 2)}];
        ++after[{scrambled.at(x, y, 0), scrambled.at(x, y, 1), scrambled.at(x, y, 2)}];
      }
    EXPECT_EQ(before, after);
  }
}

TEST(Arnold, RejectsBadInputs) {
  std::mt19937_64 rng(55);
  const RgbImage img = random_image(rng, 8, 8);
  EXPECT_THROW(arnold_scramble(img, ArnoldKey{2, 0, 0, 2, 1, 8}), BadKey);
  EXPECT_THROW(arnold_scramble(img, ArnoldKey{1, 1, 1, 2, 1, 9}), DimensionMismatch);
  const RgbImage rect = random_image(rng, 8, 4);
  EXPECT_THROW(arnold_scramble(rect, ArnoldKey{1, 1, 1, 2, 1, 8}), NotSquare);
}

TEST(FftFeature, ConstantImage) {
  RgbImage img(8, 8);
  std::fill(img.px.begin(), img.px.end(), 77);
  const FeatureImage f = fft_feature(img);
  for (int c = 0; c < 3; ++c) {
    EXPECT_NEAR(f.at(4, 4, c), 255.0, 1e-12);  // DC spike lands at the center
    for (int y = 0; y < 8; ++y)
      for (int x = 0; x < 8; ++x)
        if (x != 4 || y != 4) EXPECT_NEAR(f.at(x, y, c), 1.0, 1e-12);
  }
}

TEST(FftFeature, Deterministic) {
  std::mt19937_64 rng(56);
  const RgbImage img = random_image(rng, 16, 16);
  const FeatureImage f1 = fft_feature(img);
  const FeatureImage f2 = fft_feature(img);
  EXPECT_EQ(f1.values, f2.values);
}

TEST(Fft2d, ParsevalAgainstDirectDft) {
  std::mt19937_64 rng(57);
  const int rows = 8, cols = 8;
  std::vector<double> f(rows * cols);
  std::uniform_real_distribution<double> u(0, 255);
  for (double& v : f) v = u(rng);

  std::vector<Cplx> grid(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) grid[t] = Cplx(f[t], 0.0);
  fft_2d(grid, rows, cols);

  const auto direct = test::dft2_direct(f, rows, cols);
  double lib_energy = 0.0, direct_energy = 0.0, spatial_energy = 0.0;
  for (std::size_t t = 0; t < f.size(); ++t) {
    EXPECT_NEAR(std::abs(grid[t] - direct[t]), 0.0, 1e-8);
    lib_energy += std::norm(grid[t]);
    direct_energy += std::norm(direct[t]);
    spatial_energy += f[t] * f[t];
  }
  EXPECT_NEAR(lib_energy, rows * cols * spatial_energy, 1e-6 * lib_energy);
  EXPECT_NEAR(direct_energy, rows * cols * spatial_energy, 1e-6 * direct_energy);
}

TEST(Fft2d, NonPowerOfTwoMatchesDirect) {
  std::mt19937_64 rng(58);
  const int rows = 6, cols = 10;
  std::vector<double> f(static_cast<std::size_t>(rows) * cols);
  std::uniform_real_distribution<double> u(-1, 1);
  for (double& v : f) v = u(rng);
  std::vector<Cplx> grid(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) grid[t] = Cplx(f[t], 0.0);
  fft_2d(grid, rows, cols);
  const auto direct = test::dft2_direct(f, rows, cols);
  for (std::size_t t = 0; t < f.size(); ++t)
    EXPECT_NEAR(std::abs(grid[t] - direct[t]), 0.0, 1e-9);
}

TEST(EncodePair, RoundTripAndShapes) {
  std::mt19937_64 rng(59);
  const RgbImage wm = random_image(rng, 6, 6);
  const RgbImage carrier = random_image(rng, 6, 6);
  const FeatureImage feature = fft_feature(carrier);
  const DualQuaternionMatrix bound = encode_pair(feature, wm);

  // real components zero everywhere
  for (const Quaternion& q : bound.s().data()) EXPECT_EQ(q.w, 0.0);
  for (const Quaternion& q : bound.i().data()) EXPECT_EQ(q.w, 0.0);

  const DecodedImage decoded = decode_dual_part(bound.i());
  EXPECT_EQ(decoded.image, wm);
  EXPECT_EQ(decoded.max_real_residual, 0.0);

  RgbImage black(6, 6);
  EXPECT_EQ(encode_pair(feature, black).i().frobenius_norm(), 0.0);

  const RgbImage small = random_image(rng, 4, 4);
  EXPECT_THROW(encode_pair(feature, small), DimensionMismatch);
}

TEST(EncodePair, SinglePixel) {
  FeatureImage f(1, 1);
  f.at(0, 0, 0) = 10.0;
  f.at(0, 0, 1) = 20.0;
  f.at(0, 0, 2) = 30.0;
  RgbImage wm(1, 1);
  wm.at(0, 0, 0) = 7;
  wm.at(0, 0, 1) = 8;
  wm.at(0, 0, 2) = 9;
  const DualQuaternionMatrix bound = encode_pair(f, wm);
  EXPECT_EQ(bound.s()(0, 0), (Quaternion{0, 10, 20, 30}));
  EXPECT_EQ(bound.i()(0, 0), (Quaternion{0, 7, 8, 9}));
}

TEST(DecodeDualPart, RoundingRadius) {
  QuaternionMatrix dual(1, 2);
  dual(0, 0) = {0.01, 100.4, 0.3, 254.6};
  dual(0, 1) = {0.0, -3.0, 270.0, 128.0};
  const DecodedImage decoded = decode_dual_part(dual);
  EXPECT_EQ(decoded.image.at(0, 0, 0), 100);
  EXPECT_EQ(decoded.image.at(0, 0, 1), 0);
  EXPECT_EQ(decoded.image.at(0, 0, 2), 255);
  EXPECT_EQ(decoded.image.at(1, 0, 0), 0);    // clamped
  EXPECT_EQ(decoded.image.at(1, 0, 1), 255);  // clamped
  EXPECT_EQ(decoded.image.at(1, 0, 2), 128);
  EXPECT_NEAR(decoded.max_real_residual, 0.01, 1e-15);
}

TEST(Metrics, IdenticalImages) {
  std::mt19937_64 rng(60);
  const RgbImage img = random_image(rng, 12, 12);
  EXPECT_TRUE(std::isinf(psnr(img, img)));
  EXPECT_NEAR(ssim(img, img), 1.0, 1e-12);
  EXPECT_EQ(ber(img, img), 0.0);
  EXPECT_NEAR(nc(img, img), 1.0, 1e-12);
}

TEST(Metrics, KnownValues) {
  const int n = 16;
  RgbImage a(n, n), b(n, n);
  // every pixel-channel differs by exactly 1 -> MSE 1 -> 10 log10(255^2)
  for (std::size_t t = 0; t < a.px.size(); ++t) {
    a.px[t] = 100;
    b.px[t] = 101;
  }
  EXPECT_NEAR(psnr(a, b), 10.0 * std::log10(255.0 * 255.0), 1e-12);

  RgbImage black(n, n), white(n, n);
  std::fill(white.px.begin(), white.px.end(), 255);
  EXPECT_NEAR(psnr(black, white), 0.0, 1e-12);  // maximal error
  EXPECT_EQ(ber(black, white), 1.0);            // binarized complement

  // one flipped bit
  RgbImage c = black;
  c.px[5] = 200;
  EXPECT_NEAR(ber(black, c), 1.0 / (3.0 * n * n), 1e-15);

  // constant vs same constant: stabilizers dominate, SSIM = 1
  RgbImage k1(n, n), k2(n, n);
  std::fill(k1.px.begin(), k1.px.end(), 42);
  std::fill(k2.px.begin(), k2.px.end(), 42);
  EXPECT_NEAR(ssim(k1, k2), 1.0, 1e-12);
}

TEST(Metrics, NcProperties) {
  const int n = 8;
  RgbImage g(n, n), h(n, n);
  // disjoint supports -> orthogonal
  g.at(0, 0, 0) = 200;
  h.at(1, 0, 0) = 200;
  EXPECT_NEAR(nc(g, h), 0.0, 1e-15);

  std::mt19937_64 rng(61);
  RgbImage base(n, n);
  std::uniform_int_distribution<int> byte(0, 127);  // keep 2x in range
  for (std::uint8_t& b : base.px) b = static_cast<std::uint8_t>(byte(rng));
  RgbImage doubled = base;
  for (std::uint8_t& b : doubled.px) b = static_cast<std::uint8_t>(b * 2);
  EXPECT_NEAR(nc(base, doubled), 1.0, 1e-12);  // scale invariance

  RgbImage zero(n, n);
  EXPECT_THROW(nc(zero, base), ZeroImage);
}

TEST(Metrics, SymmetryAndInversion) {
  std::mt19937_64 rng(62);
  const RgbImage a = random_image(rng, 10, 10);
  const RgbImage b = random_image(rng, 10, 10);
  EXPECT_EQ(psnr(a, b), psnr(b, a));
  EXPECT_EQ(ber(a, b), ber(b, a));

  RgbImage inverted = a;
  for (std::uint8_t& px : inverted.px) px = static_cast<std::uint8_t>(255 - px);
  EXPECT_LT(ssim(a, inverted), 0.1);

  const RgbImage small = random_image(rng, 4, 4);
  EXPECT_THROW(psnr(a, small), DimensionMismatch);
}
