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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace solbench {

/// One polyline. An empty color picks the next palette entry.
struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  std::string color;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 640;
  int height = 420;
  std::optional<std::pair<double, double>> y_range;  // default: span the data
};

/// Renders a self-contained SVG 1.1 line plot with axes, ticks, and a
/// legend. Each polyline carries data-name, data-x, and data-y attributes
/// holding the exact plotted values (shortest round-trip formatting,
/// space-separated), so consumers can recover the data without parsing
/// pixel coordinates.
std::string render_line_plot(const PlotSpec& spec,
                             const std::vector<Series>& series);

}  // namespace solbench
