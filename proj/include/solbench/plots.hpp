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

#include "solbench/sweep.hpp"

namespace solbench {

/// "alpha,top1,top5" rows, one per grid threshold, shortest round-trip
/// number formatting. These strings match the SVG's data attributes
/// exactly.
std::string sweep_curve_csv(const SweepResult& sweep);

/// Accuracy-vs-threshold line plot with one curve per k.
std::string sweep_curve_svg(const SweepResult& sweep,
                            const std::string& title);

/// "sample_id,alpha,loss" rows grouped per sample, in input order.
std::string landscape_csv(const std::vector<LossLandscape>& landscapes);

/// Loss-vs-threshold plot, one curve per sample. display_names optionally
/// overrides the curve labels (same order); pass {} to use sample ids.
std::string landscape_svg(const std::vector<LossLandscape>& landscapes,
                          const std::string& title,
                          const std::vector<std::string>& display_names = {});

}  // namespace solbench
