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

#include <string>
#include <vector>

#include "solbench/attack.hpp"
#include "solbench/classifier.hpp"
#include "solbench/dataset.hpp"

namespace solbench {

/// Model-independent fixed-threshold attack: every sample is solarized
/// with the same alpha, swept over a grid.
struct SweepResult {
  std::vector<double> alphas;          // ascending, endpoints included
  std::vector<double> top1_accuracy;   // one entry per alpha
  std::vector<double> top5_accuracy;
  double global_min_alpha = 0.0;       // smallest alpha attaining the minimum
  double global_min_accuracy = 0.0;    // minimum of top1_accuracy
};

/// Cross-entropy of the true label as a function of the threshold, for a
/// single sample.
struct LossLandscape {
  std::string sample_id;
  std::vector<double> alphas;
  std::vector<double> losses;  // nats, floored to stay finite
};

/// Scores are floored at this value before the logarithm so landscapes
/// stay finite even when a model assigns an exact zero.
inline constexpr double kScoreFloor = 1e-12;

/// Threshold grid {0, step, 2*step, ...} with 1.0 appended when the step
/// does not land on it. step 0.01 yields exactly 101 points.
std::vector<double> alpha_grid(double step);

/// Evaluates top-1/top-5 accuracy at every grid threshold and locates the
/// global minimum of top-1 accuracy.
SweepResult universal_sweep(const Classifier& classifier,
                            const SampleSet& samples, double step,
                            const EvalOptions& options = {});

/// losses[i] = -log(max(score of the true label at alphas[i], floor)),
/// with grid_points thresholds uniformly spaced on [0, 1] inclusive.
LossLandscape loss_landscape(const Classifier& classifier,
                             const LabeledSample& sample, int grid_points);

}  // namespace solbench
