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

#include "solbench/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "solbench/errors.hpp"

namespace solbench {

std::string to_string(InputLayout layout) {
  return layout == InputLayout::kChannelsFirst ? "channels-first"
                                               : "channels-last";
}

InputLayout input_layout_from_string(const std::string& name) {
  if (name == "channels-first") return InputLayout::kChannelsFirst;
  if (name == "channels-last") return InputLayout::kChannelsLast;
  throw ConfigError("unknown input layout '" + name +
                    "' (expected channels-first or channels-last)");
}

void validate(const PreprocessConfig& config) {
  if (config.resize_shorter_side < 1) {
    throw ConfigError("resize_shorter_side must be positive");
  }
  if (config.crop_size < 1 || config.crop_size > config.resize_shorter_side) {
    throw ConfigError("crop_size must be in [1, resize_shorter_side]");
  }
  for (double s : config.std) {
    if (!(s > 0.0)) {
      throw ConfigError("std values must be strictly positive");
    }
  }
}

PreprocessConfig preprocess_config_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("preprocess config is not valid JSON: ") +
                      e.what());
  }
  PreprocessConfig config;
  try {
    config.resize_shorter_side = j.at("resize_shorter_side").get<int>();
    config.crop_size = j.at("crop_size").get<int>();
    const auto mean = j.at("mean").get<std::vector<double>>();
    const auto std_ = j.at("std").get<std::vector<double>>();
    if (mean.size() != 3 || std_.size() != 3) {
      throw ConfigError("mean and std must have exactly 3 entries");
    }
    std::copy(mean.begin(), mean.end(), config.mean.begin());
    std::copy(std_.begin(), std_.end(), config.std.begin());
    config.layout = input_layout_from_string(j.at("layout").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad preprocess config: ") + e.what());
  }
  validate(config);
  return config;
}

PreprocessConfig load_preprocess_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open preprocess config '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return preprocess_config_from_json_text(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError("'" + path + "': " + e.what());
  }
}

std::string preprocess_config_to_json_text(const PreprocessConfig& config) {
  nlohmann::json j;
  j["resize_shorter_side"] = config.resize_shorter_side;
  j["crop_size"] = config.crop_size;
  j["mean"] = config.mean;
  j["std"] = config.std;
  j["layout"] = to_string(config.layout);
  return j.dump(2);
}

Image resize_bilinear(const Image& image, int out_height, int out_width) {
  validate_image(image);
  if (out_height < 1 || out_width < 1) {
    throw ConfigError("resize target must be positive");
  }
  if (out_height == image.height && out_width == image.width) {
    return image;
  }
  Image out;
  out.height = out_height;
  out.width = out_width;
  out.channels = image.channels;
  out.data.resize(static_cast<std::size_t>(out_height) * out_width *
                  image.channels);

  const double scale_y = static_cast<double>(image.height) / out_height;
  const double scale_x = static_cast<double>(image.width) / out_width;
  for (int oy = 0; oy < out_height; ++oy) {
    // Half-pixel center convention.
    const double sy = std::clamp((oy + 0.5) * scale_y - 0.5, 0.0,
                                 static_cast<double>(image.height - 1));
    const int y0 = static_cast<int>(std::floor(sy));
    const int y1 = std::min(y0 + 1, image.height - 1);
    const double fy = sy - y0;
    for (int ox = 0; ox < out_width; ++ox) {
      const double sx = std::clamp((ox + 0.5) * scale_x - 0.5, 0.0,
                                   static_cast<double>(image.width - 1));
      const int x0 = static_cast<int>(std::floor(sx));
      const int x1 = std::min(x0 + 1, image.width - 1);
      const double fx = sx - x0;
      for (int c = 0; c < image.channels; ++c) {
        const double top = image.at(y0, x0, c) * (1.0 - fx) +
                           image.at(y0, x1, c) * fx;
        const double bottom = image.at(y1, x0, c) * (1.0 - fx) +
                              image.at(y1, x1, c) * fx;
        double v = top * (1.0 - fy) + bottom * fy;
        out.at(oy, ox, c) = std::clamp(v, 0.0, 1.0);
      }
    }
  }
  return out;
}

Image resize_shorter_side(const Image& image, int target) {
  validate_image(image);
  if (target < 1) {
    throw ConfigError("resize target must be positive");
  }
  int out_h, out_w;
  if (image.height <= image.width) {
    out_h = target;
    out_w = static_cast<int>(std::lround(
        static_cast<double>(image.width) * target / image.height));
  } else {
    out_w = target;
    out_h = static_cast<int>(std::lround(
        static_cast<double>(image.height) * target / image.width));
  }
  out_h = std::max(out_h, 1);
  out_w = std::max(out_w, 1);
  return resize_bilinear(image, out_h, out_w);
}

Image center_crop(const Image& image, int size) {
  validate_image(image);
  if (size < 1 || size > image.height || size > image.width) {
    throw ConfigError("crop size " + std::to_string(size) +
                      " does not fit a " + std::to_string(image.height) + "x" +
                      std::to_string(image.width) + " image");
  }
  const int off_y = (image.height - size) / 2;
  const int off_x = (image.width - size) / 2;
  Image out;
  out.height = size;
  out.width = size;
  out.channels = image.channels;
  out.data.resize(static_cast<std::size_t>(size) * size * image.channels);
  for (int y = 0; y < size; ++y) {
    const std::size_t src =
        image.index(off_y + y, off_x, 0);
    const std::size_t dst = out.index(y, 0, 0);
    std::copy_n(image.data.begin() + src,
                static_cast<std::size_t>(size) * image.channels,
                out.data.begin() + dst);
  }
  return out;
}

Tensor preprocess(const PreprocessConfig& config, const Image& image) {
  validate(config);
  validate_image(image);
  if (image.channels != 3) {
    throw ConfigError("preprocess requires a 3-channel image, got " +
                      std::to_string(image.channels) + " channels");
  }
  const Image resized = resize_shorter_side(image, config.resize_shorter_side);
  const Image cropped = center_crop(resized, config.crop_size);

  const int hw = config.crop_size;
  Tensor tensor;
  tensor.data.resize(static_cast<std::size_t>(hw) * hw * 3);
  if (config.layout == InputLayout::kChannelsFirst) {
    tensor.shape = {1, 3, hw, hw};
    for (int c = 0; c < 3; ++c) {
      const std::size_t plane = static_cast<std::size_t>(c) * hw * hw;
      for (int y = 0; y < hw; ++y) {
        for (int x = 0; x < hw; ++x) {
          tensor.data[plane + static_cast<std::size_t>(y) * hw + x] =
              static_cast<float>((cropped.at(y, x, c) - config.mean[c]) /
                                 config.std[c]);
        }
      }
    }
  } else {
    tensor.shape = {1, hw, hw, 3};
    std::size_t i = 0;
    for (int y = 0; y < hw; ++y) {
      for (int x = 0; x < hw; ++x) {
        for (int c = 0; c < 3; ++c) {
          tensor.data[i++] =
              static_cast<float>((cropped.at(y, x, c) - config.mean[c]) /
                                 config.std[c]);
        }
      }
    }
  }
  return tensor;
}

}  // namespace solbench
