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

#include "solbench/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "parallel.hpp"
#include "solbench/errors.hpp"
#include "solbench/numformat.hpp"

namespace solbench {

std::vector<double> alpha_grid(double step) {
  if (!(step > 0.0) || step > 1.0) {
    throw ConfigError("sweep step must lie in (0, 1]");
  }
  const int last = static_cast<int>(std::floor(1.0 / step + 1e-9));
  std::vector<double> grid;
  grid.reserve(last + 2);
  for (int i = 0; i <= last; ++i) {
    grid.push_back(std::min(i * step, 1.0));
  }
  if (grid.back() < 1.0 - 1e-12) {
    grid.push_back(1.0);
  }
  grid.back() = 1.0;
  return grid;
}

SweepResult universal_sweep(const Classifier& classifier,
                            const SampleSet& samples, double step,
                            const EvalOptions& options) {
  if (samples.size() == 0) {
    throw ConfigError("dataset is empty");
  }
  const std::vector<double> grid = alpha_grid(step);
  const int num_classes = classifier.num_classes();
  const int k5 = std::min(5, num_classes);
  const std::size_t count = samples.size();

  // Per-sample correctness across the grid; summed in index order after
  // the parallel phase so results do not depend on worker scheduling.
  std::vector<std::vector<unsigned char>> top1(count);
  std::vector<std::vector<unsigned char>> top5(count);
  std::vector<unsigned char> evaluated(count, 0);

  internal::parallel_for(count, options.workers, [&](std::size_t i) {
    LabeledSample sample;
    try {
      sample = samples.get(i);
    } catch (const std::exception&) {
      if (options.on_error == ErrorPolicy::kSkip) return;
      throw;
    }
    std::vector<unsigned char> c1(grid.size()), c5(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
      Prediction prediction;
      try {
        prediction = classifier.predict(
            solarize(sample.image, SolarizeThreshold(grid[g])));
      } catch (const std::exception& e) {
        if (options.on_error == ErrorPolicy::kSkip) return;
        throw std::runtime_error("sample '" + sample.id +
                                 "': prediction failed at alpha=" +
                                 format_double(grid[g]) + ": " + e.what());
      }
      c1[g] = topk_contains(prediction, sample.label, 1) ? 1 : 0;
      c5[g] = topk_contains(prediction, sample.label, k5) ? 1 : 0;
    }
    top1[i] = std::move(c1);
    top5[i] = std::move(c5);
    evaluated[i] = 1;
  });

  std::size_t used = 0;
  std::vector<std::size_t> hits1(grid.size(), 0), hits5(grid.size(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    if (!evaluated[i]) continue;
    ++used;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      hits1[g] += top1[i][g];
      hits5[g] += top5[i][g];
    }
  }
  if (used == 0) {
    throw std::runtime_error("every sample errored; nothing to evaluate");
  }

  SweepResult result;
  result.alphas = grid;
  result.top1_accuracy.resize(grid.size());
  result.top5_accuracy.resize(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    result.top1_accuracy[g] = static_cast<double>(hits1[g]) / used;
    result.top5_accuracy[g] = static_cast<double>(hits5[g]) / used;
  }
  std::size_t min_index = 0;
  for (std::size_t g = 1; g < grid.size(); ++g) {
    if (result.top1_accuracy[g] < result.top1_accuracy[min_index]) {
      min_index = g;  // strict <: ties keep the smallest alpha
    }
  }
  result.global_min_alpha = grid[min_index];
  result.global_min_accuracy = result.top1_accuracy[min_index];
  return result;
}

LossLandscape loss_landscape(const Classifier& classifier,
                             const LabeledSample& sample, int grid_points) {
  if (grid_points < 2) {
    throw ConfigError("landscape grid needs at least 2 points");
  }
  const int num_classes = classifier.num_classes();
  if (sample.label < 0 || sample.label >= num_classes) {
    throw ConfigError("sample '" + sample.id + "': label " +
                      std::to_string(sample.label) + " outside [0, " +
                      std::to_string(num_classes) + ")");
  }
  LossLandscape landscape;
  landscape.sample_id = sample.id;
  landscape.alphas.reserve(grid_points);
  landscape.losses.reserve(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    const double alpha = static_cast<double>(i) / (grid_points - 1);
    Prediction prediction;
    try {
      prediction =
          classifier.predict(solarize(sample.image, SolarizeThreshold(alpha)));
    } catch (const std::exception& e) {
      throw std::runtime_error("sample '" + sample.id +
                               "': prediction failed at alpha=" +
                               format_double(alpha) + ": " + e.what());
    }
    const double score =
        std::max(prediction.scores[sample.label], kScoreFloor);
    landscape.alphas.push_back(alpha);
    landscape.losses.push_back(-std::log(score));
  }
  return landscape;
}

}  // namespace solbench
