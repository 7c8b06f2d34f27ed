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

#include "solbench/attack.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "parallel.hpp"
#include "solbench/errors.hpp"
#include "solbench/numformat.hpp"
#include "solbench/rng.hpp"

namespace solbench {

namespace {

void validate_attack_config(const AttackConfig& config, int num_classes) {
  if (config.k < 1 || config.k > num_classes) {
    throw ConfigError("attack k=" + std::to_string(config.k) +
                      " outside [1, " + std::to_string(num_classes) + "]");
  }
  if (config.n < 1) {
    throw ConfigError("attack n=" + std::to_string(config.n) +
                      " must be >= 1");
  }
}

AttackOutcome finalize_outcome(std::string sample_id, bool success,
                               double alpha, int iterations,
                               const Prediction& prediction, int label) {
  const int num_classes = static_cast<int>(prediction.scores.size());
  AttackOutcome outcome;
  outcome.sample_id = std::move(sample_id);
  outcome.success = success;
  outcome.chosen_alpha = alpha;
  outcome.iterations_used = iterations;
  outcome.true_label_score_at_chosen = prediction.scores[label];
  outcome.correct_top1 = topk_contains(prediction, label, 1);
  outcome.correct_top5 =
      topk_contains(prediction, label, std::min(5, num_classes));
  return outcome;
}

}  // namespace

AttackOutcome rand_sol_attack(const Classifier& classifier, const Image& image,
                              int label, const AttackConfig& config,
                              const std::string& sample_id) {
  const int num_classes = classifier.num_classes();
  validate_attack_config(config, num_classes);
  if (label < 0 || label >= num_classes) {
    throw ConfigError("sample '" + sample_id + "': label " +
                      std::to_string(label) + " outside [0, " +
                      std::to_string(num_classes) + ")");
  }

  AlphaStream stream(config.seed, sample_id);
  double best_alpha = 0.0;
  double best_score = std::numeric_limits<double>::infinity();
  Prediction best_prediction;
  for (int i = 1; i <= config.n; ++i) {
    const double alpha = stream.next();
    Prediction prediction;
    try {
      prediction = classifier.predict(solarize(image, SolarizeThreshold(alpha)));
    } catch (const std::exception& e) {
      throw std::runtime_error("sample '" + sample_id +
                               "': prediction failed at alpha=" +
                               format_double(alpha) + ": " + e.what());
    }
    if (!topk_contains(prediction, label, config.k)) {
      return finalize_outcome(sample_id, true, alpha, i, prediction, label);
    }
    // Greedy fallback: keep the draw with the lowest true-label score.
    if (prediction.scores[label] < best_score) {
      best_score = prediction.scores[label];
      best_alpha = alpha;
      best_prediction = std::move(prediction);
    }
  }
  return finalize_outcome(sample_id, false, best_alpha, config.n,
                          best_prediction, label);
}

std::map<int, double> evaluate_clean(const Classifier& classifier,
                                     const SampleSet& samples,
                                     const std::vector<int>& k_values,
                                     const EvalOptions& options) {
  if (samples.size() == 0) {
    throw ConfigError("dataset is empty");
  }
  if (k_values.empty()) {
    throw ConfigError("no k values requested");
  }
  const int num_classes = classifier.num_classes();
  for (int k : k_values) {
    if (k < 1 || k > num_classes) {
      throw ConfigError("k=" + std::to_string(k) + " outside [1, " +
                        std::to_string(num_classes) + "]");
    }
  }

  const std::size_t count = samples.size();
  // correct[i] holds one flag per requested k; unset slots mark errors.
  std::vector<std::optional<std::vector<bool>>> correct(count);
  internal::parallel_for(count, options.workers, [&](std::size_t i) {
    LabeledSample sample;
    try {
      sample = samples.get(i);
    } catch (const std::exception&) {
      if (options.on_error == ErrorPolicy::kSkip) return;
      throw;
    }
    Prediction prediction;
    try {
      prediction = classifier.predict(sample.image);
    } catch (const std::exception& e) {
      if (options.on_error == ErrorPolicy::kSkip) return;
      throw std::runtime_error("sample '" + sample.id +
                               "': prediction failed: " + e.what());
    }
    std::vector<bool> flags(k_values.size());
    for (std::size_t j = 0; j < k_values.size(); ++j) {
      flags[j] = topk_contains(prediction, sample.label, k_values[j]);
    }
    correct[i] = std::move(flags);
  });

  std::size_t evaluated = 0;
  std::vector<std::size_t> hits(k_values.size(), 0);
  for (const auto& flags : correct) {
    if (!flags) continue;
    ++evaluated;
    for (std::size_t j = 0; j < k_values.size(); ++j) {
      if ((*flags)[j]) ++hits[j];
    }
  }
  if (evaluated == 0) {
    throw std::runtime_error("every sample errored; nothing to evaluate");
  }
  std::map<int, double> accuracy;
  for (std::size_t j = 0; j < k_values.size(); ++j) {
    accuracy[k_values[j]] =
        static_cast<double>(hits[j]) / static_cast<double>(evaluated);
  }
  return accuracy;
}

RobustResult evaluate_robust(const Classifier& classifier,
                             const SampleSet& samples,
                             const AttackConfig& config,
                             const EvalOptions& options) {
  if (samples.size() == 0) {
    throw ConfigError("dataset is empty");
  }
  validate_attack_config(config, classifier.num_classes());

  const std::size_t count = samples.size();
  std::vector<std::optional<AttackOutcome>> outcomes(count);
  std::vector<std::optional<std::string>> errors(count);
  internal::parallel_for(count, options.workers, [&](std::size_t i) {
    try {
      const LabeledSample sample = samples.get(i);
      outcomes[i] =
          rand_sol_attack(classifier, sample.image, sample.label, config,
                          sample.id);
    } catch (const std::exception& e) {
      if (options.on_error == ErrorPolicy::kSkip) {
        errors[i] = samples.id(i) + ": " + e.what();
        return;
      }
      throw;
    }
  });

  RobustResult result;
  std::size_t top1 = 0, top5 = 0, evaluated = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) {
      result.errored_samples.push_back(*errors[i]);
      continue;
    }
    if (!outcomes[i]) continue;  // unreachable unless a worker was cancelled
    ++evaluated;
    top1 += outcomes[i]->correct_top1 ? 1 : 0;
    top5 += outcomes[i]->correct_top5 ? 1 : 0;
    result.outcomes.push_back(std::move(*outcomes[i]));
  }
  if (evaluated == 0) {
    throw std::runtime_error("every sample errored; nothing to evaluate");
  }
  result.top1_accuracy = static_cast<double>(top1) / evaluated;
  result.top5_accuracy = static_cast<double>(top5) / evaluated;
  return result;
}

}  // namespace solbench
