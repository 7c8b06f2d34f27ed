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

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "solbench/errors.hpp"
#include "support/image_files.hpp"
#include "support/temp_dir.hpp"

namespace solbench {
namespace {

TEST(DecodeImageTest, PngRoundTripsExactByteValues) {
  std::vector<std::uint8_t> rgb(2 * 3 * 3);
  for (std::size_t i = 0; i < rgb.size(); ++i) {
    rgb[i] = static_cast<std::uint8_t>(i * 13);
  }
  const std::vector<std::uint8_t> png = testing::encode_rgb_png(2, 3, rgb);
  const Image image = decode_image(png);
  EXPECT_EQ(image.height, 2);
  EXPECT_EQ(image.width, 3);
  EXPECT_EQ(image.channels, 3);
  for (std::size_t i = 0; i < rgb.size(); ++i) {
    EXPECT_EQ(image.data[i], rgb[i] / 255.0) << "byte " << i;
  }
}

TEST(DecodeImageTest, ChannelsComeOutInRgbOrder) {
  // One red pixel: PNG stores it however it likes, the decoded image must
  // present R=1, G=0, B=0.
  const std::vector<std::uint8_t> rgb = {255, 0, 0};
  const Image image = decode_image(testing::encode_rgb_png(1, 1, rgb));
  EXPECT_EQ(image.data[0], 1.0);
  EXPECT_EQ(image.data[1], 0.0);
  EXPECT_EQ(image.data[2], 0.0);
}

TEST(DecodeImageTest, JpegDecodesApproximately) {
  const std::vector<std::uint8_t> rgb(8 * 8 * 3, 128);
  const Image image = decode_image(testing::encode_rgb_jpeg(8, 8, rgb));
  EXPECT_EQ(image.height, 8);
  EXPECT_EQ(image.channels, 3);
  for (double v : image.data) {
    EXPECT_NEAR(v, 128 / 255.0, 0.05);
  }
}

TEST(DecodeImageTest, RejectsMalformedStreams) {
  const std::vector<std::uint8_t> garbage = {'n', 'o', 't', ' ', 'a', 'n',
                                             ' ', 'i', 'm', 'g'};
  EXPECT_THROW(decode_image(garbage), DecodeError);
  EXPECT_THROW(decode_image(std::vector<std::uint8_t>{}), DecodeError);
}

TEST(DecodeImageTest, RejectsSixteenBitPng) {
  const std::vector<std::uint8_t> png = testing::encode_gray16_png(4, 4);
  try {
    decode_image(png);
    FAIL() << "16-bit PNG should be rejected";
  } catch (const DecodeError& e) {
    EXPECT_NE(std::string(e.what()).find("bit depth"), std::string::npos);
  }
}

TEST(DecodeImageFileTest, ReadsFromDisk) {
  testing::ScopedTempDir dir;
  const std::string path = dir.file("img.png");
  testing::write_uniform_png(path, 4, 5, 100);
  const Image image = decode_image_file(path);
  EXPECT_EQ(image.height, 4);
  EXPECT_EQ(image.width, 5);
  for (double v : image.data) EXPECT_EQ(v, 100 / 255.0);
}

TEST(DecodeImageFileTest, ErrorsNameTheFile) {
  try {
    decode_image_file("/nonexistent/img.png");
    FAIL() << "missing file should throw";
  } catch (const DecodeError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/img.png"),
              std::string::npos);
  }
}

}  // namespace
}  // namespace solbench
