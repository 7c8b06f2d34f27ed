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

#include "solbench/errors.hpp"

namespace solbench {

void validate_image(const Image& image) {
  if (image.height < 1 || image.width < 1) {
    throw ConfigError("image dimensions must be positive, got " +
                      std::to_string(image.height) + "x" +
                      std::to_string(image.width));
  }
  if (image.channels != 1 && image.channels != 3) {
    throw ConfigError("image must have 1 or 3 channels, got " +
                      std::to_string(image.channels));
  }
  const std::size_t expected = static_cast<std::size_t>(image.height) *
                               image.width * image.channels;
  if (image.data.size() != expected) {
    throw ConfigError("image buffer has " + std::to_string(image.data.size()) +
                      " values, expected " + std::to_string(expected));
  }
  for (double v : image.data) {
    if (!(v >= 0.0 && v <= 1.0)) {  // also catches NaN
      throw ConfigError("image value " + std::to_string(v) +
                        " outside [0, 1]");
    }
  }
}

Image make_image(int height, int width, int channels, std::vector<double> data) {
  Image image{height, width, channels, std::move(data)};
  validate_image(image);
  return image;
}

Image uniform_image(int height, int width, int channels, double value) {
  const std::size_t n =
      static_cast<std::size_t>(height) * width * channels;
  return make_image(height, width, channels, std::vector<double>(n, value));
}

SolarizeThreshold::SolarizeThreshold(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw ConfigError("solarize threshold must be finite and >= 0, got " +
                      std::to_string(alpha));
  }
}

Image solarize(const Image& image, SolarizeThreshold threshold) {
  validate_image(image);
  const double alpha = threshold.alpha();
  Image out{image.height, image.width, image.channels,
            std::vector<double>(image.data.size())};
  for (std::size_t i = 0; i < image.data.size(); ++i) {
    const double v = image.data[i];
    out.data[i] = v >= alpha ? 1.0 - v : v;
  }
  return out;
}

}  // namespace solbench
