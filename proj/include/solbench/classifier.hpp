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
#include <string>
#include <vector>

#include "solbench/image.hpp"
#include "solbench/preprocess.hpp"

namespace solbench {

/// Ranked class scores. Scores are finite, non-negative, and sum to 1
/// within 1e-4; ranking sorts class indices by descending score with ties
/// broken by ascending index, which keeps top-k queries deterministic.
struct Prediction {
  std::vector<double> scores;
  std::vector<int> ranking;
};

/// Validates scores and builds the ranking. Throws ConfigError when the
/// score vector violates the Prediction invariants.
Prediction make_prediction(std::vector<double> scores);

/// True iff label appears among the first k entries of the ranking.
/// Throws ConfigError when k or label is out of range.
bool topk_contains(const Prediction& prediction, int label, int k);

/// Uniform prediction interface over serialized neural models and
/// synthetic analytic classifiers. Implementations are deterministic
/// (identical image, identical prediction) and safe to call from any
/// number of threads concurrently.
class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual Prediction predict(const Image& image) const = 0;
  virtual int num_classes() const = 0;

  /// Model identity: file path or synthetic name.
  virtual std::string identity() const = 0;

  /// Content digest of the model file; for synthetic classifiers, the
  /// digest of the identity string.
  virtual std::string digest() const = 0;

  /// Preprocessing the backend applies, when it applies any.
  virtual const PreprocessConfig* preprocess_config() const { return nullptr; }
};

/// Two-class mock scored directly by mean pixel value: scores are
/// {1 - mean, mean}, so class 1 wins exactly when the mean exceeds 0.5.
/// Its success behavior under solarization has a closed form, which makes
/// it the test oracle of choice.
class BrightnessClassifier : public Classifier {
 public:
  Prediction predict(const Image& image) const override;
  int num_classes() const override { return 2; }
  std::string identity() const override { return "synthetic:brightness"; }
  std::string digest() const override;
};

/// Brightness mock with a calibrated score curve:
/// score(class 1) = sigmoid(gain * (mean - 0.5)). Same decision boundary
/// as BrightnessClassifier, smooth confidence for loss-landscape tests.
class CalibratedBrightnessClassifier : public Classifier {
 public:
  explicit CalibratedBrightnessClassifier(double gain = 10.0);
  Prediction predict(const Image& image) const override;
  int num_classes() const override { return 2; }
  std::string identity() const override;
  std::string digest() const override;
  double gain() const { return gain_; }

 private:
  double gain_;
};

/// Ignores the input and always returns the same scores.
class ConstantClassifier : public Classifier {
 public:
  explicit ConstantClassifier(std::vector<double> scores);

  /// Constant classifier that ranks `top_class` first with probability
  /// `confidence` and spreads the rest uniformly.
  static ConstantClassifier ranking_first(int num_classes, int top_class,
                                          double confidence = 0.9);

  Prediction predict(const Image&) const override { return prediction_; }
  int num_classes() const override {
    return static_cast<int>(prediction_.scores.size());
  }
  std::string identity() const override;
  std::string digest() const override;

 private:
  Prediction prediction_;
};

/// Mean pixel value over all positions and channels.
double mean_pixel(const Image& image);

}  // namespace solbench
