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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "solbench/classifier.hpp"
#include "solbench/dataset.hpp"
#include "solbench/image.hpp"

namespace solbench {

/// RandSol-Top{k}-{n}: per-sample greedy random search over the
/// solarization threshold. An attack on one sample succeeds when the true
/// label leaves the model's top-k.
struct AttackConfig {
  int k = 1;               // success criterion: true label leaves top-k
  int n = 10;              // iteration cap per sample
  std::uint64_t seed = 0;  // master seed for the per-sample draw streams
};

struct AttackOutcome {
  std::string sample_id;
  bool success = false;
  double chosen_alpha = 1.0;
  int iterations_used = 0;
  double true_label_score_at_chosen = 0.0;
  bool correct_top1 = false;
  bool correct_top5 = false;
};

enum class ErrorPolicy {
  kAbort,  // first per-sample error fails the run
  kSkip,   // errored samples are recorded and left out of the denominator
};

struct EvalOptions {
  int workers = 0;  // 0 = number of logical processors
  ErrorPolicy on_error = ErrorPolicy::kAbort;
};

/// Draws thresholds i.i.d. uniform on [0,1] from the sample's stream and
/// stops at the first one that pushes the true label out of the top-k.
/// If all n draws fail, reports the greedy-best draw: the one minimizing
/// the true label's score (ties resolved to the earliest draw).
/// correct_top1/correct_top5 are evaluated at the chosen threshold.
/// Classifier errors are rethrown annotated with the sample id and the
/// offending threshold.
AttackOutcome rand_sol_attack(const Classifier& classifier, const Image& image,
                              int label, const AttackConfig& config,
                              const std::string& sample_id);

/// Top-k accuracy on unmodified inputs, one entry per requested k.
std::map<int, double> evaluate_clean(const Classifier& classifier,
                                     const SampleSet& samples,
                                     const std::vector<int>& k_values,
                                     const EvalOptions& options = {});

struct RobustResult {
  double top1_accuracy = 0.0;
  double top5_accuracy = 0.0;
  std::vector<AttackOutcome> outcomes;   // in sample order
  std::vector<std::string> errored_samples;  // "id: message", kSkip only
};

/// Runs rand_sol_attack on every sample and aggregates robust top-1/top-5
/// accuracy. Outcomes are keyed by sample and reduced in manifest order,
/// so results are identical for any worker count.
RobustResult evaluate_robust(const Classifier& classifier,
                             const SampleSet& samples,
                             const AttackConfig& config,
                             const EvalOptions& options = {});

}  // namespace solbench
