// End-to-end zero-watermark generation and verification.
//
// Generation: feature-transform the carrier, Arnold-scramble the watermark,
// bind both into one dual quaternion matrix, factorize, and publish the
// dual parts plus a key file.  Verification: rebuild the standard-part
// factorization from the suspect image alone, combine it with the stored
// dual parts to reconstruct the dual part, decode and descramble, then
// score against the reference watermark.
#pragma once

#include <string>
#include <utility>

#include "dqzw/arnold.hpp"
#include "dqzw/dqlu.hpp"
#include "dqzw/dqqr.hpp"
#include "dqzw/dqsvd.hpp"
#include "dqzw/encode.hpp"
#include "dqzw/errors.hpp"
#include "dqzw/feature.hpp"
#include "dqzw/image_io.hpp"
#include "dqzw/key_file.hpp"
#include "dqzw/metrics.hpp"
#include "dqzw/zero_watermark.hpp"

namespace dqzw {

struct GenerateConfig {
  Method method = Method::lu;
  ArnoldKey arnold;        // n is overwritten with the carrier side
  FeatureParams feature;
  int size = 0;            // > 0: resize the carrier to size x size first
  double factor_tol = -1;  // pivot/rank tolerance; negative selects defaults
  DqsvdOptions svd;
};

struct GenerateResult {
  ZeroWatermark zw;
  KeyFile key;
};

inline GenerateResult generate(const RgbImage& carrier_in, const RgbImage& watermark_in,
                               const GenerateConfig& cfg) {
  GenerateResult out;
  out.key.method = cfg.method;
  out.key.feature = cfg.feature;
  out.key.orig_width = carrier_in.width;
  out.key.orig_height = carrier_in.height;

  RgbImage carrier = carrier_in;
  if (cfg.size > 0 && (carrier.width != cfg.size || carrier.height != cfg.size)) {
    carrier = resize_bicubic(carrier, cfg.size, cfg.size);
    out.key.carrier_resized = true;
  }
  if (!carrier.square())
    throw NotSquare("carrier must be square; pass a target size to resize");
  const int n = carrier.width;

  RgbImage watermark = watermark_in;
  if (watermark.width != n || watermark.height != n) {
    watermark = resize_bicubic(watermark, n, n);
    out.key.watermark_resized = true;
  }

  out.key.arnold = cfg.arnold;
  out.key.arnold.n = n;
  const RgbImage encrypted = arnold_scramble(watermark, out.key.arnold);
  const FeatureImage feature = fft_feature(carrier, cfg.feature);
  const DualQuaternionMatrix bound = encode_pair(feature, encrypted);

  out.zw.method = cfg.method;
  out.zw.m = static_cast<std::uint32_t>(n);
  out.zw.n = static_cast<std::uint32_t>(n);
  const std::string ctx = "generate/" + method_name(cfg.method) + ": ";
  try {
    switch (cfg.method) {
      case Method::lu: {
        const DqluFactors f = dqlu(bound, cfg.factor_tol);
        out.zw.factor_a = f.l.i();
        out.zw.factor_b = f.u.i();
        break;
      }
      case Method::qr: {
        const DqqrFactors f = dqqr(bound, cfg.factor_tol);
        out.zw.factor_a = f.q.i();
        out.zw.factor_b = f.r.i();
        break;
      }
      case Method::svd: {
        const DqsvdFactors f = dqsvd(bound, cfg.svd);
        out.zw.factor_a = f.u.i();
        out.zw.factor_b = f.v.i();
        out.zw.sigma_i.resize(f.sigma.size());
        for (std::size_t t = 0; t < f.sigma.size(); ++t) out.zw.sigma_i[t] = f.sigma[t].i;
        out.key.rank = f.rank;
        out.key.w_u = f.w_u;
        out.key.w_v = f.w_v;
        break;
      }
    }
  } catch (const SingularMinor& e) {
    throw SingularMinor(e.minor_index, ctx);
  } catch (const RankDeficient& e) {
    throw RankDeficient(e.column, ctx);
  } catch (const DegenerateSpectrum& e) {
    throw DegenerateSpectrum(ctx + e.what());
  } catch (const ConvergenceFailure& e) {
    throw ConvergenceFailure(ctx + e.what());
  }
  return out;
}

struct VerifyResult {
  MetricsReport metrics;
  RgbImage recovered;             // descrambled watermark estimate
  double decode_residual = 0.0;   // max |real component| before rounding
};

inline VerifyResult verify(const RgbImage& suspect_in, const ZeroWatermark& zw,
                           const KeyFile& key, const RgbImage& reference_in,
                           double ber_threshold = 0.0) {
  if (zw.method != key.method)
    throw FormatError("zero-watermark and key file disagree on the method");
  const int n = key.arnold.n;
  if (static_cast<int>(zw.m) != n || static_cast<int>(zw.n) != n)
    throw FormatError("zero-watermark dimensions disagree with the key file");

  RgbImage suspect = suspect_in;
  if (key.carrier_resized && (suspect.width != n || suspect.height != n))
    suspect = resize_bicubic(suspect, n, n);
  if (suspect.width != n || suspect.height != n)
    throw DimensionMismatch("suspect dimensions do not match the protected image");

  const FeatureImage feature = fft_feature(suspect, key.feature);
  const QuaternionMatrix a_s = encode_feature_matrix(feature);

  QuaternionMatrix a_i;
  switch (zw.method) {
    case Method::lu: {
      const QluResult f = qlu(a_s);
      a_i = f.l * zw.factor_b + zw.factor_a * f.u;
      break;
    }
    case Method::qr: {
      const QqrResult f = qqr(a_s);
      a_i = f.q * zw.factor_b + zw.factor_a * f.r;
      break;
    }
    case Method::svd: {
      QsvdResult f = qsvd(a_s);
      std::vector<double> sigma_s(f.sigma);
      if (key.w_u.rows() > 0) {
        // Rank-deficient standard part: reapply the key rotations to the
        // trailing columns, exactly as the generation stage built them.
        const int r = key.rank;
        detail::assign_cols(f.u, r, detail::submatrix_cols(f.u, r, n - r) * key.w_u);
        detail::assign_cols(f.v, r, detail::submatrix_cols(f.v, r, n - r) * key.w_v);
        for (int t = r; t < n; ++t) sigma_s[static_cast<std::size_t>(t)] = 0.0;
      }
      a_i = dqsvd_dual_reconstruction(f.u, zw.factor_a, sigma_s, zw.sigma_i, f.v,
                                      zw.factor_b);
      break;
    }
  }

  const DecodedImage decoded = decode_dual_part(a_i);
  VerifyResult out;
  out.decode_residual = decoded.max_real_residual;
  out.recovered = arnold_unscramble(decoded.image, key.arnold);

  RgbImage reference = reference_in;
  if (reference.width != n || reference.height != n) {
    if (!key.watermark_resized)
      throw DimensionMismatch("reference watermark dimensions do not match the key");
    reference = resize_bicubic(reference, n, n);
  }

  out.metrics.psnr = psnr(reference, out.recovered);
  out.metrics.ssim = ssim(reference, out.recovered);
  out.metrics.ber = ber(reference, out.recovered);
  out.metrics.nc = nc(reference, out.recovered);
  out.metrics.authentic = out.metrics.ber <= ber_threshold;
  return out;
}

}  // namespace dqzw
