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

#include "solbench/image_io.hpp"

#include <fstream>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "solbench/errors.hpp"

namespace solbench {

Image decode_image(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) {
    throw DecodeError("empty image buffer");
  }
  const cv::Mat raw(1, static_cast<int>(bytes.size()), CV_8UC1,
                    const_cast<std::uint8_t*>(bytes.data()));
  cv::Mat decoded;
  try {
    decoded = cv::imdecode(raw, cv::IMREAD_UNCHANGED);
  } catch (const cv::Exception& e) {
    throw DecodeError(std::string("image decode failed: ") + e.what());
  }
  if (decoded.empty()) {
    throw DecodeError("not a well-formed PNG or JPEG stream");
  }
  if (decoded.depth() != CV_8U) {
    throw DecodeError("unsupported bit depth (only 8 bits per channel)");
  }
  const int channels = decoded.channels();
  if (channels != 1 && channels != 3) {
    throw DecodeError("unsupported channel count " + std::to_string(channels) +
                      " (only grayscale and RGB)");
  }

  Image image;
  image.height = decoded.rows;
  image.width = decoded.cols;
  image.channels = channels;
  image.data.resize(static_cast<std::size_t>(decoded.rows) * decoded.cols *
                    channels);
  // OpenCV stores color rows as B,G,R; flip to R,G,B while normalizing.
  std::size_t out = 0;
  for (int y = 0; y < decoded.rows; ++y) {
    const std::uint8_t* row = decoded.ptr<std::uint8_t>(y);
    for (int x = 0; x < decoded.cols; ++x) {
      if (channels == 1) {
        image.data[out++] = row[x] / 255.0;
      } else {
        const std::uint8_t* px = row + 3 * x;
        image.data[out++] = px[2] / 255.0;
        image.data[out++] = px[1] / 255.0;
        image.data[out++] = px[0] / 255.0;
      }
    }
  }
  return image;
}

Image decode_image_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DecodeError("cannot open image file '" + path + "'");
  }
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  try {
    return decode_image(bytes);
  } catch (const DecodeError& e) {
    throw DecodeError("'" + path + "': " + e.what());
  }
}

}  // namespace solbench
