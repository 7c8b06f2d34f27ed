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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace solbench {

/// Dense raster with normalized channel values. Data is row-major
/// height x width x channels; every value lies in [0, 1].
struct Image {
  int height = 0;
  int width = 0;
  int channels = 0;      // 1 (grayscale) or 3 (RGB)
  std::vector<double> data;

  std::size_t index(int y, int x, int c) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
  double at(int y, int x, int c) const { return data[index(y, x, c)]; }
  double& at(int y, int x, int c) { return data[index(y, x, c)]; }
};

/// Builds an Image after checking dimensions, buffer length, and the
/// [0, 1] value range. Throws ConfigError on violation.
Image make_image(int height, int width, int channels, std::vector<double> data);

/// Image filled with a single value; handy for synthetic datasets.
Image uniform_image(int height, int width, int channels, double value);

/// Throws ConfigError if the image violates its invariants.
void validate_image(const Image& image);

/// Tone-reversal threshold. Finite and >= 0; any value above 1 leaves
/// every image unchanged (the identity regime).
class SolarizeThreshold {
 public:
  explicit SolarizeThreshold(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// Inverts every value at or above the threshold: v -> 1 - v where
/// v >= alpha, v otherwise. The input is left untouched; the output has
/// identical dimensions and stays inside [0, 1].
Image solarize(const Image& image, SolarizeThreshold threshold);

}  // namespace solbench
