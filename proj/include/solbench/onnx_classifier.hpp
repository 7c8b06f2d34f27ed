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

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "solbench/classifier.hpp"
#include "solbench/preprocess.hpp"

namespace solbench {

/// Classifier backed by an ONNX model file: a single image input tensor
/// (1x3xHxW or 1xHxWx3) and a single class-score output. Raw scores are
/// passed through a softmax when the model does not already emit
/// probabilities; the check runs once per model against a zero probe
/// input and is cached. predict() is internally synchronized, so one
/// instance serves any number of workers.
class OnnxClassifier : public Classifier {
 public:
  OnnxClassifier(const std::string& model_path, PreprocessConfig config);
  ~OnnxClassifier() override;

  Prediction predict(const Image& image) const override;
  int num_classes() const override { return num_classes_; }
  std::string identity() const override { return path_; }
  std::string digest() const override { return digest_; }
  const PreprocessConfig* preprocess_config() const override {
    return &config_;
  }

 private:
  std::vector<double> forward(const Tensor& tensor) const;

  struct Net;  // hides cv::dnn from this header
  std::unique_ptr<Net> net_;
  mutable std::mutex mutex_;
  PreprocessConfig config_;
  std::string path_;
  std::string digest_;
  int num_classes_ = 0;
  bool apply_softmax_ = false;
};

/// Opens a classifier from a model spec: a synthetic name
/// ("synthetic:brightness", "synthetic:brightness-sigmoid:GAIN",
/// "synthetic:constant:CLASSES:TOP") or an ONNX file path, which requires
/// a preprocess config.
std::shared_ptr<Classifier> open_classifier(const std::string& model_spec,
                                            const PreprocessConfig* config);

}  // namespace solbench
