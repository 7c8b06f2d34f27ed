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

#include "solbench/onnx_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include <opencv2/core.hpp>
#include <opencv2/dnn.hpp>

#include "solbench/digest.hpp"
#include "solbench/errors.hpp"

namespace solbench {

namespace {

bool looks_like_probabilities(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) {
    if (v < 0.0 || v > 1.0) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= 1e-3;
}

std::vector<double> softmax(const std::vector<double>& logits) {
  const double max_logit = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - max_logit);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

}  // namespace

struct OnnxClassifier::Net {
  cv::dnn::Net net;
};

OnnxClassifier::OnnxClassifier(const std::string& model_path,
                               PreprocessConfig config)
    : net_(std::make_unique<Net>()), config_(std::move(config)),
      path_(model_path) {
  validate(config_);
  if (!std::filesystem::exists(model_path)) {
    throw ConfigError("model file '" + model_path + "' does not exist");
  }
  try {
    net_->net = cv::dnn::readNetFromONNX(model_path);
  } catch (const cv::Exception& e) {
    throw ConfigError("failed to load model '" + model_path +
                      "': " + e.what());
  }
  digest_ = sha256_file(model_path);

  // Probe once with a zero input: fixes the class count and decides
  // whether the model already ends in a softmax.
  Tensor probe;
  const int hw = config_.crop_size;
  probe.shape = config_.layout == InputLayout::kChannelsFirst
                    ? std::vector<int>{1, 3, hw, hw}
                    : std::vector<int>{1, hw, hw, 3};
  probe.data.assign(static_cast<std::size_t>(hw) * hw * 3, 0.0f);
  const std::vector<double> out = forward(probe);
  if (out.size() < 2) {
    throw std::runtime_error("model '" + model_path + "' emits " +
                             std::to_string(out.size()) +
                             " scores; need at least 2 classes");
  }
  num_classes_ = static_cast<int>(out.size());
  apply_softmax_ = !looks_like_probabilities(out);
}

OnnxClassifier::~OnnxClassifier() = default;

std::vector<double> OnnxClassifier::forward(const Tensor& tensor) const {
  cv::Mat blob(static_cast<int>(tensor.shape.size()), tensor.shape.data(),
               CV_32F, const_cast<float*>(tensor.data.data()));
  cv::Mat result;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    try {
      net_->net.setInput(blob);
      result = net_->net.forward().clone();
    } catch (const cv::Exception& e) {
      throw std::runtime_error("model inference failed: " +
                               std::string(e.what()));
    }
  }
  if (result.type() != CV_32F) {
    result.convertTo(result, CV_32F);
  }
  std::vector<double> values(result.total());
  const float* ptr = result.ptr<float>();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const float v = ptr[i];
    if (!std::isfinite(v)) {
      throw std::runtime_error("model emitted a non-finite score");
    }
    values[i] = static_cast<double>(v);
  }
  return values;
}

Prediction OnnxClassifier::predict(const Image& image) const {
  const Tensor tensor = preprocess(config_, image);
  std::vector<double> scores = forward(tensor);
  if (num_classes_ != 0 &&
      scores.size() != static_cast<std::size_t>(num_classes_)) {
    throw std::runtime_error("model output size changed between calls");
  }
  if (apply_softmax_) {
    scores = softmax(scores);
  } else {
    // Tolerate tiny float drift so the sum invariant holds exactly.
    double sum = 0.0;
    for (double v : scores) sum += v;
    if (sum > 0.0) {
      for (double& v : scores) v /= sum;
    }
  }
  return make_prediction(std::move(scores));
}

std::shared_ptr<Classifier> open_classifier(const std::string& model_spec,
                                            const PreprocessConfig* config) {
  if (model_spec.rfind("synthetic:", 0) == 0) {
    const std::string name = model_spec.substr(10);
    if (name == "brightness") {
      return std::make_shared<BrightnessClassifier>();
    }
    if (name.rfind("brightness-sigmoid:", 0) == 0) {
      const std::string gain_text = name.substr(19);
      try {
        return std::make_shared<CalibratedBrightnessClassifier>(
            std::stod(gain_text));
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception&) {
        throw ConfigError("bad sigmoid gain '" + gain_text + "' in '" +
                          model_spec + "'");
      }
    }
    if (name.rfind("constant:", 0) == 0) {
      const std::string rest = name.substr(9);
      const auto colon = rest.find(':');
      try {
        const int classes = std::stoi(rest.substr(0, colon));
        const int top = colon == std::string::npos
                            ? 0
                            : std::stoi(rest.substr(colon + 1));
        return std::make_shared<ConstantClassifier>(
            ConstantClassifier::ranking_first(classes, top));
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception&) {
        throw ConfigError("bad constant classifier spec '" + model_spec + "'");
      }
    }
    throw ConfigError("unknown synthetic classifier '" + model_spec + "'");
  }
  if (config == nullptr) {
    throw ConfigError("model '" + model_spec +
                      "' requires a preprocess config");
  }
  return std::make_shared<OnnxClassifier>(model_spec, *config);
}

}  // namespace solbench
