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

#include <array>
#include <string>
#include <vector>

#include "solbench/image.hpp"

namespace solbench {

enum class InputLayout { kChannelsFirst, kChannelsLast };

std::string to_string(InputLayout layout);
InputLayout input_layout_from_string(const std::string& name);

/// Standard ImageNet-style evaluation pipeline: shorter-side resize,
/// center crop, per-channel normalization. Defaults match the common
/// torchvision evaluation protocol; models trained differently override
/// them through a JSON config file.
struct PreprocessConfig {
  int resize_shorter_side = 256;
  int crop_size = 224;
  std::array<double, 3> mean{0.485, 0.456, 0.406};
  std::array<double, 3> std{0.229, 0.224, 0.225};
  InputLayout layout = InputLayout::kChannelsFirst;
};

/// Throws ConfigError on crop > resize or non-positive std values.
void validate(const PreprocessConfig& config);

/// Parses the JSON config format (keys resize_shorter_side, crop_size,
/// mean, std, layout).
PreprocessConfig load_preprocess_config(const std::string& path);
PreprocessConfig preprocess_config_from_json_text(const std::string& text);
std::string preprocess_config_to_json_text(const PreprocessConfig& config);

/// Model input tensor, batch dimension included.
struct Tensor {
  std::vector<int> shape;  // {1,3,H,W} or {1,H,W,3}
  std::vector<float> data;
};

/// Bilinear resample to the exact output size (half-pixel centers).
Image resize_bilinear(const Image& image, int out_height, int out_width);

/// Scales the shorter side to `target` keeping aspect ratio.
Image resize_shorter_side(const Image& image, int target);

/// Central crop of size x size. Throws ConfigError if the image is smaller.
Image center_crop(const Image& image, int size);

/// Full pipeline: resize, crop, normalize (v - mean) / std, lay out per
/// config. Requires a 3-channel image.
Tensor preprocess(const PreprocessConfig& config, const Image& image);

}  // namespace solbench
