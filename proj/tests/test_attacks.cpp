#include <gtest/gtest.h>

#include <random>

#include "dqzw/attacks.hpp"
#include "dqzw/synthetic.hpp"
#include "test_support.hpp"

using namespace dqzw;
using test::random_image;

TEST(Attacks, GaussianNoiseDeterminismAndSeeds) {
  std::mt19937_64 rng(71);
  const RgbImage img = random_image(rng, 16, 16);
  AttackSpec spec;
  spec.kind = AttackKind::gaussian_noise;
  spec.variance = 0.01;
  spec.seed = 42;
  const RgbImage a = apply_attack(img, spec);
  const RgbImage b = apply_attack(img, spec);
  EXPECT_EQ(a, b);

  spec.seed = 43;
  EXPECT_NE(apply_attack(img, spec), a);

  spec.variance = 0.0;
  EXPECT_EQ(apply_attack(img, spec), img);

  spec.variance = -1.0;
  EXPECT_THROW(apply_attack(img, spec), BadParameters);
}

TEST(Attacks, DimensionsAndRangePreserved) {
  const RgbImage img = synthetic_carrier(32, 5);
  for (const AttackKind kind :
       {AttackKind::gaussian_noise, AttackKind::jpeg_compress, AttackKind::rotate,
        AttackKind::center_crop, AttackKind::brighten, AttackKind::pixel_edit}) {
    AttackSpec spec;
    spec.kind = kind;
    const RgbImage out = apply_attack(img, spec);
    EXPECT_EQ(out.width, img.width);
    EXPECT_EQ(out.height, img.height);
    EXPECT_EQ(out.px.size(), img.px.size());
  }
}

TEST(Attacks, PixelEditChangesExactlyOneByte) {
  std::mt19937_64 rng(72);
  const RgbImage img = random_image(rng, 16, 16);
  AttackSpec spec;
  spec.kind = AttackKind::pixel_edit;
  spec.px_x = 3;
  spec.px_y = 5;
  spec.px_channel = 1;
  const RgbImage out = apply_attack(img, spec);
  std::size_t diffs = 0;
  std::size_t diff_at = 0;
  for (std::size_t t = 0; t < img.px.size(); ++t)
    if (img.px[t] != out.px[t]) {
      ++diffs;
      diff_at = t;
    }
  EXPECT_EQ(diffs, 1u);
  EXPECT_EQ(diff_at, img.index(3, 5, 1));
  const int delta = static_cast<int>(out.px[diff_at]) - static_cast<int>(img.px[diff_at]);
  EXPECT_TRUE(delta == 1 || delta == -1);

  spec.px_value = 200;
  const RgbImage set = apply_attack(img, spec);
  EXPECT_EQ(set.at(3, 5, 1), 200);

  spec.px_x = 99;
  EXPECT_THROW(apply_attack(img, spec), BadParameters);
}

TEST(Attacks, BrightenClampsAtWhite) {
  RgbImage img(4, 4);
  std::fill(img.px.begin(), img.px.end(), 240);
  AttackSpec spec;
  spec.kind = AttackKind::brighten;
  spec.delta = 30;
  const RgbImage out = apply_attack(img, spec);
  for (const std::uint8_t b : out.px) EXPECT_EQ(b, 255);
}

TEST(Attacks, CenterCropZeroesQuarterArea) {
  RgbImage img(16, 16);
  std::fill(img.px.begin(), img.px.end(), 200);
  AttackSpec spec;
  spec.kind = AttackKind::center_crop;
  spec.area_fraction = 0.25;
  const RgbImage out = apply_attack(img, spec);
  std::size_t zeroed = 0;
  for (const std::uint8_t b : out.px)
    if (b == 0) ++zeroed;
  EXPECT_EQ(zeroed, 3u * 8 * 8);  // central 8x8 square
  EXPECT_EQ(out.at(0, 0, 0), 200);
  EXPECT_EQ(out.at(8, 8, 0), 0);

  spec.area_fraction = 1.5;
  EXPECT_THROW(apply_attack(img, spec), BadParameters);
}

TEST(Attacks, RotateMovesContent) {
  const RgbImage img = synthetic_carrier(32, 6);
  AttackSpec spec;
  spec.kind = AttackKind::rotate;
  spec.angle = 3.0;
  const RgbImage out = apply_attack(img, spec);
  EXPECT_NE(out, img);
  // center pixel is (nearly) invariant under rotation about the center
  const int c = 15;  // (31)/2 rounds to 15
  int center_delta = 0;
  for (int ch = 0; ch < 3; ++ch)
    center_delta = std::max(center_delta,
                            std::abs(static_cast<int>(out.at(c, c, ch)) -
                                     static_cast<int>(img.at(c, c, ch))));
  EXPECT_LE(center_delta, 24);  // bilinear blur only, no large displacement

  spec.angle = 0.0;
  EXPECT_EQ(apply_attack(img, spec), img);
}

TEST(Attacks, JpegRoundTripIsLossy) {
  const RgbImage img = synthetic_carrier(32, 7);
  AttackSpec spec;
  spec.kind = AttackKind::jpeg_compress;
  spec.quality = 10;
  const RgbImage out = apply_attack(img, spec);
  EXPECT_NE(out, img);
  EXPECT_EQ(apply_attack(img, spec), out);  // codec round trip is deterministic

  spec.quality = 0;
  EXPECT_THROW(apply_attack(img, spec), BadParameters);
}
