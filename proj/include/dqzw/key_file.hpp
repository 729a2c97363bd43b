// Key escrow file (JSON): everything verification needs besides the
// zero-watermark payload — Arnold parameters, feature-transform settings,
// original dimensions, the resize record, and the DQSVD key rotations.
#pragma once

#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "dqzw/arnold.hpp"
#include "dqzw/errors.hpp"
#include "dqzw/feature.hpp"
#include "dqzw/quaternion_matrix.hpp"
#include "dqzw/zero_watermark.hpp"

namespace dqzw {

struct KeyFile {
  int version = 1;
  Method method = Method::lu;
  ArnoldKey arnold;
  FeatureParams feature;
  int orig_width = 0;
  int orig_height = 0;
  bool carrier_resized = false;   // carrier resized to n x n before encoding
  bool watermark_resized = false;  // watermark resized to match the carrier
  std::string resize_filter = "bicubic";
  int rank = 0;                   // appreciable singular values (svd method)
  QuaternionMatrix w_u;           // empty when the standard part is full rank
  QuaternionMatrix w_v;
};

namespace detail {

inline nlohmann::json matrix_to_json(const QuaternionMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) {
      const Quaternion& q = m(r, c);
      row.push_back({q.w, q.x, q.y, q.z});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline QuaternionMatrix matrix_from_json(const nlohmann::json& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m > 0 ? static_cast<int>(rows.at(0).size()) : 0;
  QuaternionMatrix out(m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      const nlohmann::json& q = rows.at(r).at(c);
      out(r, c) = {q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>(),
                   q.at(3).get<double>()};
    }
  return out;
}

}  // namespace detail

inline nlohmann::json key_file_to_json(const KeyFile& key) {
  nlohmann::json j;
  j["format_version"] = key.version;
  j["method"] = method_name(key.method);
  j["arnold"] = {{"a", key.arnold.a}, {"b", key.arnold.b}, {"c", key.arnold.c},
                 {"d", key.arnold.d}, {"k", key.arnold.k}, {"n", key.arnold.n}};
  j["feature"] = {{"transform", key.feature.transform},
                  {"lo", key.feature.lo},
                  {"hi", key.feature.hi}};
  j["original"] = {{"width", key.orig_width}, {"height", key.orig_height}};
  j["resize"] = {{"carrier", key.carrier_resized},
                 {"watermark", key.watermark_resized},
                 {"filter", key.resize_filter}};
  if (key.method == Method::svd) {
    j["svd_keys"] = {{"rank", key.rank}, {"full_rank", key.w_u.rows() == 0}};
    if (key.w_u.rows() > 0) {
      j["svd_keys"]["w_u"] = detail::matrix_to_json(key.w_u);
      j["svd_keys"]["w_v"] = detail::matrix_to_json(key.w_v);
    }
  }
  return j;
}

inline KeyFile key_file_from_json(const nlohmann::json& j) {
  KeyFile key;
  try {
    key.version = j.at("format_version").get<int>();
    if (key.version != 1)
      throw FormatError("unsupported key file version " + std::to_string(key.version));
    key.method = method_from_name(j.at("method").get<std::string>());
    const nlohmann::json& arnold = j.at("arnold");
    key.arnold.a = arnold.at("a").get<std::int64_t>();
    key.arnold.b = arnold.at("b").get<std::int64_t>();
    key.arnold.c = arnold.at("c").get<std::int64_t>();
    key.arnold.d = arnold.at("d").get<std::int64_t>();
    key.arnold.k = arnold.at("k").get<int>();
    key.arnold.n = arnold.at("n").get<int>();
    const nlohmann::json& feature = j.at("feature");
    key.feature.transform = feature.at("transform").get<std::string>();
    key.feature.lo = feature.at("lo").get<double>();
    key.feature.hi = feature.at("hi").get<double>();
    key.orig_width = j.at("original").at("width").get<int>();
    key.orig_height = j.at("original").at("height").get<int>();
    const nlohmann::json& resize = j.at("resize");
    key.carrier_resized = resize.at("carrier").get<bool>();
    key.watermark_resized = resize.at("watermark").get<bool>();
    key.resize_filter = resize.at("filter").get<std::string>();
    if (key.method == Method::svd) {
      const nlohmann::json& keys = j.at("svd_keys");
      key.rank = keys.at("rank").get<int>();
      if (!keys.at("full_rank").get<bool>()) {
        key.w_u = detail::matrix_from_json(keys.at("w_u"));
        key.w_v = detail::matrix_from_json(keys.at("w_v"));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed key file: ") + e.what());
  }
  return key;
}

inline void save_key_file(const KeyFile& key, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << key_file_to_json(key).dump(2) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

inline KeyFile load_key_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("key file is not valid JSON: ") + e.what());
  }
  return key_file_from_json(j);
}

}  // namespace dqzw
