// Dual quaternion color-image model: carrier features fill the three
// imaginary components of the standard part, watermark channels fill the
// dual part.  Real components stay zero.
#pragma once

#include <algorithm>
#include <cmath>

#include "dqzw/dual_quaternion_matrix.hpp"
#include "dqzw/errors.hpp"
#include "dqzw/image.hpp"

namespace dqzw {

// Pure imaginary quaternion matrix with the three feature channels in the
// i, j, k components (rows follow image rows).
inline QuaternionMatrix encode_feature_matrix(const FeatureImage& feature) {
  QuaternionMatrix standard(feature.height, feature.width);
  for (int y = 0; y < feature.height; ++y)
    for (int x = 0; x < feature.width; ++x)
      standard(y, x) = {0.0, feature.at(x, y, 0), feature.at(x, y, 1), feature.at(x, y, 2)};
  return standard;
}

inline QuaternionMatrix encode_channel_matrix(const RgbImage& img) {
  QuaternionMatrix dual(img.height, img.width);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      dual(y, x) = {0.0, static_cast<double>(img.at(x, y, 0)),
                    static_cast<double>(img.at(x, y, 1)),
                    static_cast<double>(img.at(x, y, 2))};
  return dual;
}

inline DualQuaternionMatrix encode_pair(const FeatureImage& feature,
                                        const RgbImage& encrypted_wm) {
  if (feature.width != encrypted_wm.width || feature.height != encrypted_wm.height)
    throw DimensionMismatch("feature and watermark dimensions differ");
  return {encode_feature_matrix(feature), encode_channel_matrix(encrypted_wm)};
}

struct DecodedImage {
  RgbImage image;
  double max_real_residual = 0.0;  // |real components|, ~0 for authentic inputs
};

// Reads the three imaginary components back as channel bytes (round,
// clamp); the real component is only reported as a diagnostic.
inline DecodedImage decode_dual_part(const QuaternionMatrix& dual) {
  DecodedImage out;
  out.image = RgbImage(dual.cols(), dual.rows());
  for (int y = 0; y < dual.rows(); ++y) {
    for (int x = 0; x < dual.cols(); ++x) {
      const Quaternion& q = dual(y, x);
      out.max_real_residual = std::max(out.max_real_residual, std::abs(q.w));
      const double ch[3] = {q.x, q.y, q.z};
      for (int c = 0; c < 3; ++c) {
        const long v = std::lround(ch[c]);
        out.image.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
      }
    }
  }
  return out;
}

}  // namespace dqzw
