// Zero-watermark payload and its binary file format.
//
// Layout: magic "DQZW", one version byte, one method byte, two uint32 dims,
// then per-factor blocks.  Each block is a factor tag byte followed by
// uint32 rows/cols and row-major quaternion entries as four IEEE-754
// little-endian doubles, or by a uint32 length and raw doubles for the
// real sigma vector.  Full-precision factors are required for exact
// watermark recovery, so no quantization happens here.
#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "dqzw/errors.hpp"
#include "dqzw/quaternion_matrix.hpp"

namespace dqzw {

enum class Method : std::uint8_t { lu = 1, qr = 2, svd = 3 };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::lu: return "lu";
    case Method::qr: return "qr";
    case Method::svd: return "svd";
  }
  throw BadParameters("unknown method");
}

inline Method method_from_name(const std::string& name) {
  if (name == "lu" || name == "dqlu") return Method::lu;
  if (name == "qr" || name == "dqqr") return Method::qr;
  if (name == "svd" || name == "dqsvd") return Method::svd;
  throw BadParameters("unknown method: " + name);
}

// Dual-part payload per method: LU holds (L_i, U_i), QR holds (Q_i, R_i),
// SVD holds (U_i, V_i) plus the real vector Sigma_i.
struct ZeroWatermark {
  Method method = Method::lu;
  std::uint32_t m = 0, n = 0;
  QuaternionMatrix factor_a;
  QuaternionMatrix factor_b;
  std::vector<double> sigma_i;  // SVD only

  bool operator==(const ZeroWatermark& o) const {
    return method == o.method && m == o.m && n == o.n && factor_a == o.factor_a &&
           factor_b == o.factor_b && sigma_i == o.sigma_i;
  }
};

namespace detail {

constexpr char kZwMagic[4] = {'D', 'Q', 'Z', 'W'};
constexpr std::uint8_t kZwVersion = 1;

constexpr std::uint8_t kTagLuL = 1, kTagLuU = 2;
constexpr std::uint8_t kTagQrQ = 3, kTagQrR = 4;
constexpr std::uint8_t kTagSvdU = 5, kTagSvdV = 6, kTagSvdSigma = 7;

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

inline void put_f64(std::vector<std::uint8_t>& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  for (int t = 0; t < 8; ++t) out.push_back(static_cast<std::uint8_t>((bits >> (8 * t)) & 0xff));
}

struct Reader {
  const std::vector<std::uint8_t>& buf;
  std::size_t pos = 0;

  void need(std::size_t count, const char* what) const {
    if (pos + count > buf.size())
      throw FormatError(std::string("truncated zero-watermark file while reading ") + what, pos);
  }
  std::uint8_t u8(const char* what) {
    need(1, what);
    return buf[pos++];
  }
  std::uint32_t u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int t = 0; t < 4; ++t) v |= static_cast<std::uint32_t>(buf[pos + t]) << (8 * t);
    pos += 4;
    return v;
  }
  double f64(const char* what) {
    need(8, what);
    std::uint64_t bits = 0;
    for (int t = 0; t < 8; ++t) bits |= static_cast<std::uint64_t>(buf[pos + t]) << (8 * t);
    pos += 8;
    double v;
    std::memcpy(&v, &bits, sizeof(v));
    return v;
  }
};

inline void put_matrix(std::vector<std::uint8_t>& out, std::uint8_t tag,
                       const QuaternionMatrix& mat) {
  out.push_back(tag);
  put_u32(out, static_cast<std::uint32_t>(mat.rows()));
  put_u32(out, static_cast<std::uint32_t>(mat.cols()));
  for (const Quaternion& q : mat.data()) {
    put_f64(out, q.w);
    put_f64(out, q.x);
    put_f64(out, q.y);
    put_f64(out, q.z);
  }
}

inline QuaternionMatrix read_matrix(Reader& r, std::uint8_t expected_tag) {
  const std::size_t tag_pos = r.pos;
  const std::uint8_t tag = r.u8("factor tag");
  if (tag != expected_tag)
    throw FormatError("unexpected factor tag " + std::to_string(tag) + ", expected " +
                          std::to_string(expected_tag),
                      tag_pos);
  const std::uint32_t rows = r.u32("factor rows");
  const std::uint32_t cols = r.u32("factor cols");
  if (rows > 1u << 20 || cols > 1u << 20)
    throw FormatError("factor dimensions implausibly large", tag_pos);
  QuaternionMatrix mat(static_cast<int>(rows), static_cast<int>(cols));
  for (Quaternion& q : mat.data()) {
    q.w = r.f64("quaternion entry");
    q.x = r.f64("quaternion entry");
    q.y = r.f64("quaternion entry");
    q.z = r.f64("quaternion entry");
  }
  return mat;
}

}  // namespace detail

inline std::vector<std::uint8_t> serialize(const ZeroWatermark& zw) {
  std::vector<std::uint8_t> out;
  out.insert(out.end(), detail::kZwMagic, detail::kZwMagic + 4);
  out.push_back(detail::kZwVersion);
  out.push_back(static_cast<std::uint8_t>(zw.method));
  detail::put_u32(out, zw.m);
  detail::put_u32(out, zw.n);
  switch (zw.method) {
    case Method::lu:
      detail::put_matrix(out, detail::kTagLuL, zw.factor_a);
      detail::put_matrix(out, detail::kTagLuU, zw.factor_b);
      break;
    case Method::qr:
      detail::put_matrix(out, detail::kTagQrQ, zw.factor_a);
      detail::put_matrix(out, detail::kTagQrR, zw.factor_b);
      break;
    case Method::svd:
      detail::put_matrix(out, detail::kTagSvdU, zw.factor_a);
      detail::put_matrix(out, detail::kTagSvdV, zw.factor_b);
      out.push_back(detail::kTagSvdSigma);
      detail::put_u32(out, static_cast<std::uint32_t>(zw.sigma_i.size()));
      for (double v : zw.sigma_i) detail::put_f64(out, v);
      break;
  }
  return out;
}

inline ZeroWatermark deserialize(const std::vector<std::uint8_t>& bytes) {
  detail::Reader r{bytes};
  r.need(4, "magic");
  if (std::memcmp(bytes.data(), detail::kZwMagic, 4) != 0)
    throw FormatError("bad magic, expected \"DQZW\"", 0);
  r.pos = 4;
  const std::uint8_t version = r.u8("version");
  if (version != detail::kZwVersion)
    throw FormatError("unsupported format version " + std::to_string(version), 4);
  const std::size_t method_pos = r.pos;
  const std::uint8_t method_byte = r.u8("method");
  if (method_byte < 1 || method_byte > 3)
    throw FormatError("unknown method tag " + std::to_string(method_byte), method_pos);

  ZeroWatermark zw;
  zw.method = static_cast<Method>(method_byte);
  zw.m = r.u32("rows");
  zw.n = r.u32("cols");
  switch (zw.method) {
    case Method::lu:
      zw.factor_a = detail::read_matrix(r, detail::kTagLuL);
      zw.factor_b = detail::read_matrix(r, detail::kTagLuU);
      break;
    case Method::qr:
      zw.factor_a = detail::read_matrix(r, detail::kTagQrQ);
      zw.factor_b = detail::read_matrix(r, detail::kTagQrR);
      break;
    case Method::svd: {
      zw.factor_a = detail::read_matrix(r, detail::kTagSvdU);
      zw.factor_b = detail::read_matrix(r, detail::kTagSvdV);
      const std::size_t tag_pos = r.pos;
      if (r.u8("sigma tag") != detail::kTagSvdSigma)
        throw FormatError("expected sigma factor tag", tag_pos);
      const std::uint32_t len = r.u32("sigma length");
      zw.sigma_i.resize(len);
      for (double& v : zw.sigma_i) v = r.f64("sigma entry");
      break;
    }
  }
  if (r.pos != bytes.size())
    throw FormatError("trailing bytes after zero-watermark payload", r.pos);
  return zw;
}

inline void save_zero_watermark(const ZeroWatermark& zw, const std::string& path) {
  const std::vector<std::uint8_t> bytes = serialize(zw);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

inline ZeroWatermark load_zero_watermark(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

}  // namespace dqzw
