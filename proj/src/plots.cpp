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

#include "solbench/plots.hpp"

#include <sstream>

#include "solbench/errors.hpp"
#include "solbench/numformat.hpp"
#include "solbench/svg_plot.hpp"

namespace solbench {

std::string sweep_curve_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "alpha,top1,top5\n";
  for (std::size_t i = 0; i < sweep.alphas.size(); ++i) {
    out << format_double(sweep.alphas[i]) << ","
        << format_double(sweep.top1_accuracy[i]) << ","
        << format_double(sweep.top5_accuracy[i]) << "\n";
  }
  return out.str();
}

std::string sweep_curve_svg(const SweepResult& sweep,
                            const std::string& title) {
  PlotSpec spec;
  spec.title = title;
  spec.x_label = "alpha";
  spec.y_label = "accuracy";
  spec.y_range = {{0.0, 1.0}};
  std::vector<Series> series(2);
  series[0].name = "top-1";
  series[0].x = sweep.alphas;
  series[0].y = sweep.top1_accuracy;
  series[1].name = "top-5";
  series[1].x = sweep.alphas;
  series[1].y = sweep.top5_accuracy;
  return render_line_plot(spec, series);
}

std::string landscape_csv(const std::vector<LossLandscape>& landscapes) {
  std::ostringstream out;
  out << "sample_id,alpha,loss\n";
  for (const LossLandscape& landscape : landscapes) {
    for (std::size_t i = 0; i < landscape.alphas.size(); ++i) {
      out << landscape.sample_id << "," << format_double(landscape.alphas[i])
          << "," << format_double(landscape.losses[i]) << "\n";
    }
  }
  return out.str();
}

std::string landscape_svg(const std::vector<LossLandscape>& landscapes,
                          const std::string& title,
                          const std::vector<std::string>& display_names) {
  if (!display_names.empty() && display_names.size() != landscapes.size()) {
    throw ConfigError("display name count does not match curve count");
  }
  PlotSpec spec;
  spec.title = title;
  spec.x_label = "alpha";
  spec.y_label = "cross-entropy loss";
  std::vector<Series> series(landscapes.size());
  for (std::size_t i = 0; i < landscapes.size(); ++i) {
    series[i].name =
        display_names.empty() ? landscapes[i].sample_id : display_names[i];
    series[i].x = landscapes[i].alphas;
    series[i].y = landscapes[i].losses;
  }
  return render_line_plot(spec, series);
}

}  // namespace solbench
