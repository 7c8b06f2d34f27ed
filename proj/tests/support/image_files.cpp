// Copyright 2026 The solbench Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "support/image_files.hpp"

#include <stdexcept>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace solbench::testing {

namespace {

cv::Mat to_bgr_mat(int height, int width,
                   const std::vector<std::uint8_t>& rgb) {
  if (rgb.size() != static_cast<std::size_t>(height) * width * 3) {
    throw std::logic_error("rgb buffer size mismatch");
  }
  cv::Mat bgr(height, width, CV_8UC3);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const std::size_t base = (static_cast<std::size_t>(y) * width + x) * 3;
      bgr.at<cv::Vec3b>(y, x) = {rgb[base + 2], rgb[base + 1], rgb[base]};
    }
  }
  return bgr;
}

std::vector<std::uint8_t> encode(const std::string& extension,
                                 const cv::Mat& mat) {
  std::vector<std::uint8_t> bytes;
  if (!cv::imencode(extension, mat, bytes)) {
    throw std::runtime_error("image encoding failed");
  }
  return bytes;
}

}  // namespace

void write_rgb_png(const std::string& path, int height, int width,
                   const std::vector<std::uint8_t>& rgb) {
  if (!cv::imwrite(path, to_bgr_mat(height, width, rgb))) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
}

void write_uniform_png(const std::string& path, int height, int width,
                       std::uint8_t value) {
  write_rgb_png(path, height, width,
                std::vector<std::uint8_t>(
                    static_cast<std::size_t>(height) * width * 3, value));
}

std::vector<std::uint8_t> encode_rgb_png(
    int height, int width, const std::vector<std::uint8_t>& rgb) {
  return encode(".png", to_bgr_mat(height, width, rgb));
}

std::vector<std::uint8_t> encode_gray16_png(int height, int width) {
  cv::Mat gray(height, width, CV_16UC1, cv::Scalar(40000));
  return encode(".png", gray);
}

std::vector<std::uint8_t> encode_rgb_jpeg(
    int height, int width, const std::vector<std::uint8_t>& rgb) {
  return encode(".jpg", to_bgr_mat(height, width, rgb));
}

}  // namespace solbench::testing
