// Image file plumbing behind OpenCV: PNG/BMP loading, PNG saving, the JPEG
// round trip used by the compression attack, and bicubic resizing.  All
// other image processing in the library works on RgbImage directly.
#pragma once

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>
#include <string>
#include <vector>

#include "dqzw/errors.hpp"
#include "dqzw/image.hpp"

namespace dqzw {

namespace detail {

inline RgbImage from_bgr_mat(const cv::Mat& mat) {
  RgbImage img(mat.cols, mat.rows);
  for (int y = 0; y < mat.rows; ++y) {
    const cv::Vec3b* row = mat.ptr<cv::Vec3b>(y);
    for (int x = 0; x < mat.cols; ++x) {
      img.at(x, y, 0) = row[x][2];
      img.at(x, y, 1) = row[x][1];
      img.at(x, y, 2) = row[x][0];
    }
  }
  return img;
}

inline cv::Mat to_bgr_mat(const RgbImage& img) {
  cv::Mat mat(img.height, img.width, CV_8UC3);
  for (int y = 0; y < img.height; ++y) {
    cv::Vec3b* row = mat.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.width; ++x) {
      row[x][2] = img.at(x, y, 0);
      row[x][1] = img.at(x, y, 1);
      row[x][0] = img.at(x, y, 2);
    }
  }
  return mat;
}

}  // namespace detail

// Loads PNG or BMP; grayscale files are replicated across the three
// channels by the color decode.
inline RgbImage load_image(const std::string& path) {
  cv::Mat mat = cv::imread(path, cv::IMREAD_COLOR);
  if (mat.empty()) throw IoError("cannot read image: " + path);
  return detail::from_bgr_mat(mat);
}

inline void save_png(const RgbImage& img, const std::string& path) {
  if (!cv::imwrite(path, detail::to_bgr_mat(img)))
    throw IoError("cannot write image: " + path);
}

// Encode/decode through the JPEG codec at the given quality (1..100).
inline RgbImage jpeg_roundtrip(const RgbImage& img, int quality) {
  std::vector<std::uint8_t> buf;
  const std::vector<int> opts = {cv::IMWRITE_JPEG_QUALITY, quality};
  if (!cv::imencode(".jpg", detail::to_bgr_mat(img), buf, opts))
    throw IoError("jpeg encoding failed");
  cv::Mat decoded = cv::imdecode(buf, cv::IMREAD_COLOR);
  if (decoded.empty()) throw IoError("jpeg decoding failed");
  return detail::from_bgr_mat(decoded);
}

inline RgbImage resize_bicubic(const RgbImage& img, int width, int height) {
  if (width <= 0 || height <= 0) throw BadParameters("resize target must be positive");
  if (width == img.width && height == img.height) return img;
  cv::Mat out;
  cv::resize(detail::to_bgr_mat(img), out, cv::Size(width, height), 0, 0, cv::INTER_CUBIC);
  return detail::from_bgr_mat(out);
}

}  // namespace dqzw
