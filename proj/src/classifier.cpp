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

#include "solbench/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "solbench/digest.hpp"
#include "solbench/errors.hpp"
#include "solbench/numformat.hpp"

namespace solbench {

Prediction make_prediction(std::vector<double> scores) {
  if (scores.size() < 2) {
    throw ConfigError("prediction needs at least 2 class scores");
  }
  double sum = 0.0;
  for (double s : scores) {
    if (!std::isfinite(s) || s < 0.0) {
      throw ConfigError("prediction score " + format_double(s) +
                        " is not finite and non-negative");
    }
    sum += s;
  }
  if (std::abs(sum - 1.0) > 1e-4) {
    throw ConfigError("prediction scores sum to " + format_double(sum) +
                      ", expected 1 within 1e-4");
  }
  Prediction p;
  p.ranking.resize(scores.size());
  std::iota(p.ranking.begin(), p.ranking.end(), 0);
  std::stable_sort(p.ranking.begin(), p.ranking.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  p.scores = std::move(scores);
  return p;
}

bool topk_contains(const Prediction& prediction, int label, int k) {
  const int num_classes = static_cast<int>(prediction.scores.size());
  if (k < 1 || k > num_classes) {
    throw ConfigError("k=" + std::to_string(k) + " outside [1, " +
                      std::to_string(num_classes) + "]");
  }
  if (label < 0 || label >= num_classes) {
    throw ConfigError("label " + std::to_string(label) +
                      " outside [0, " + std::to_string(num_classes) + ")");
  }
  const auto end = prediction.ranking.begin() + k;
  return std::find(prediction.ranking.begin(), end, label) != end;
}

double mean_pixel(const Image& image) {
  if (image.data.empty()) return 0.0;
  const double sum =
      std::accumulate(image.data.begin(), image.data.end(), 0.0);
  return sum / static_cast<double>(image.data.size());
}

Prediction BrightnessClassifier::predict(const Image& image) const {
  const double m = mean_pixel(image);
  return make_prediction({1.0 - m, m});
}

std::string BrightnessClassifier::digest() const {
  return sha256_hex(identity());
}

CalibratedBrightnessClassifier::CalibratedBrightnessClassifier(double gain)
    : gain_(gain) {
  if (!std::isfinite(gain) || gain <= 0.0) {
    throw ConfigError("sigmoid gain must be finite and positive");
  }
}

Prediction CalibratedBrightnessClassifier::predict(const Image& image) const {
  const double m = mean_pixel(image);
  const double s = 1.0 / (1.0 + std::exp(-gain_ * (m - 0.5)));
  return make_prediction({1.0 - s, s});
}

std::string CalibratedBrightnessClassifier::identity() const {
  return "synthetic:brightness-sigmoid:" + format_double(gain_);
}

std::string CalibratedBrightnessClassifier::digest() const {
  return sha256_hex(identity());
}

ConstantClassifier::ConstantClassifier(std::vector<double> scores)
    : prediction_(make_prediction(std::move(scores))) {}

ConstantClassifier ConstantClassifier::ranking_first(int num_classes,
                                                     int top_class,
                                                     double confidence) {
  if (num_classes < 2 || top_class < 0 || top_class >= num_classes) {
    throw ConfigError("invalid constant classifier shape");
  }
  if (confidence <= 1.0 / num_classes || confidence > 1.0) {
    throw ConfigError("constant classifier confidence must be in (1/C, 1]");
  }
  std::vector<double> scores(
      num_classes, (1.0 - confidence) / (num_classes - 1));
  scores[top_class] = confidence;
  return ConstantClassifier(std::move(scores));
}

std::string ConstantClassifier::identity() const {
  std::string id = "synthetic:constant:" + std::to_string(num_classes()) + ":" +
                   std::to_string(prediction_.ranking.front());
  return id;
}

std::string ConstantClassifier::digest() const {
  return sha256_hex(identity());
}

}  // namespace solbench
