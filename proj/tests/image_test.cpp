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

#include "solbench/image.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "solbench/errors.hpp"

namespace solbench {
namespace {

Image random_image(std::mt19937_64& rng, int height = 8, int width = 8) {
  std::uniform_real_distribution<double> value(0.0, 1.0);
  Image image;
  image.height = height;
  image.width = width;
  image.channels = 3;
  image.data.resize(static_cast<std::size_t>(height) * width * 3);
  for (double& v : image.data) v = value(rng);
  return image;
}

TEST(ImageTest, MakeImageValidates) {
  EXPECT_NO_THROW(make_image(2, 3, 3, std::vector<double>(18, 0.5)));
  EXPECT_NO_THROW(make_image(1, 1, 1, {1.0}));
  EXPECT_THROW(make_image(0, 3, 3, {}), ConfigError);
  EXPECT_THROW(make_image(2, 0, 3, {}), ConfigError);
  EXPECT_THROW(make_image(2, 3, 2, std::vector<double>(12, 0.5)), ConfigError);
  EXPECT_THROW(make_image(2, 3, 3, std::vector<double>(17, 0.5)), ConfigError);
  EXPECT_THROW(make_image(1, 1, 1, {1.5}), ConfigError);
  EXPECT_THROW(make_image(1, 1, 1, {-0.1}), ConfigError);
  EXPECT_THROW(make_image(1, 1, 1, {std::nan("")}), ConfigError);
}

TEST(ImageTest, UniformImageFillsValue) {
  const Image image = uniform_image(2, 2, 3, 0.25);
  EXPECT_EQ(image.data.size(), 12u);
  for (double v : image.data) EXPECT_EQ(v, 0.25);
}

TEST(SolarizeThresholdTest, RejectsInvalidThresholds) {
  EXPECT_NO_THROW(SolarizeThreshold(0.0));
  EXPECT_NO_THROW(SolarizeThreshold(1.0));
  EXPECT_NO_THROW(SolarizeThreshold(7.5));
  EXPECT_THROW(SolarizeThreshold(-0.01), ConfigError);
  EXPECT_THROW(SolarizeThreshold(std::nan("")), ConfigError);
  EXPECT_THROW(SolarizeThreshold(std::numeric_limits<double>::infinity()),
               ConfigError);
}

// The transform's definition doubles as its oracle: output v' must equal
// 1 - v exactly when v >= alpha and v exactly otherwise.
TEST(SolarizeTest, SelectiveActionIsExact) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha_dist(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Image image = random_image(rng);
    const double alpha = alpha_dist(rng);
    const Image out = solarize(image, SolarizeThreshold(alpha));
    ASSERT_EQ(out.data.size(), image.data.size());
    for (std::size_t i = 0; i < image.data.size(); ++i) {
      const double v = image.data[i];
      EXPECT_EQ(out.data[i], v >= alpha ? 1.0 - v : v);
    }
  }
}

TEST(SolarizeTest, RangeClosure) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> alpha_dist(0.0, 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    const Image image = random_image(rng);
    const Image out = solarize(image, SolarizeThreshold(alpha_dist(rng)));
    for (double v : out.data) {
      EXPECT_TRUE(v >= 0.0 && v <= 1.0) << v;
    }
  }
}

TEST(SolarizeTest, ThresholdAboveOneIsIdentity) {
  std::mt19937_64 rng(13);
  const Image image = random_image(rng);
  const Image out = solarize(image, SolarizeThreshold(1.0000001));
  EXPECT_EQ(out.data, image.data);
}

TEST(SolarizeTest, ThresholdZeroInvertsEverything) {
  std::mt19937_64 rng(17);
  const Image image = random_image(rng);
  const Image out = solarize(image, SolarizeThreshold(0.0));
  for (std::size_t i = 0; i < image.data.size(); ++i) {
    EXPECT_EQ(out.data[i], 1.0 - image.data[i]);
  }
}

// 1 - (1 - v) == v holds exactly for binary fractions such as k/256, so
// double inversion must round-trip 8-bit-style data bit for bit.
TEST(SolarizeTest, InversionIsAnInvolutionOnRepresentableValues) {
  Image image;
  image.height = 16;
  image.width = 16;
  image.channels = 1;
  image.data.resize(256);
  for (int k = 0; k < 256; ++k) image.data[k] = k / 256.0;
  const SolarizeThreshold invert(0.0);
  const Image twice = solarize(solarize(image, invert), invert);
  EXPECT_EQ(twice.data, image.data);
}

TEST(SolarizeTest, ComparisonIsAtOrAbove) {
  const Image image = make_image(1, 3, 1, {0.2, 0.5, 1.0});
  const Image at_half = solarize(image, SolarizeThreshold(0.5));
  EXPECT_EQ(at_half.data[0], 0.2);  // below threshold: untouched
  EXPECT_EQ(at_half.data[1], 0.5);  // at threshold: inverted, fixed point
  EXPECT_EQ(at_half.data[2], 0.0);  // above threshold: inverted

  // At threshold 1.0 the transform is not yet the identity: the maximal
  // value still inverts.
  const Image at_one = solarize(image, SolarizeThreshold(1.0));
  EXPECT_EQ(at_one.data[0], 0.2);
  EXPECT_EQ(at_one.data[1], 0.5);
  EXPECT_EQ(at_one.data[2], 0.0);
}

TEST(SolarizeTest, InputIsLeftUntouched) {
  const Image image = make_image(1, 2, 1, {0.3, 0.8});
  const std::vector<double> original = image.data;
  solarize(image, SolarizeThreshold(0.0));
  EXPECT_EQ(image.data, original);
}

TEST(SolarizeTest, RejectsInvalidImages) {
  Image image = uniform_image(2, 2, 1, 0.5);
  image.data[0] = 1.5;
  EXPECT_THROW(solarize(image, SolarizeThreshold(0.5)), ConfigError);
}

}  // namespace
}  // namespace solbench
