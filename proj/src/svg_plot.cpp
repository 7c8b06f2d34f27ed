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

#include "solbench/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "solbench/errors.hpp"
#include "solbench/numformat.hpp"

namespace solbench {

namespace {

constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 16;
constexpr int kMarginTop = 32;
constexpr int kMarginBottom = 48;
constexpr int kTicks = 5;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string xml_escape(const std::string& text) {
  std::string escaped;
  escaped.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': escaped += "&amp;"; break;
      case '<': escaped += "&lt;"; break;
      case '>': escaped += "&gt;"; break;
      case '"': escaped += "&quot;"; break;
      case '\'': escaped += "&apos;"; break;
      default: escaped += c;
    }
  }
  return escaped;
}

// Pixel coordinates; two decimals are plenty at plot resolution. The
// exact values live in the data-x/data-y attributes.
std::string px(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

std::string joined(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_double(values[i]);
  }
  return out;
}

struct Range {
  double lo;
  double hi;
};

Range pad_if_flat(Range range) {
  if (range.hi - range.lo < 1e-12) {
    range.lo -= 0.5;
    range.hi += 0.5;
  }
  return range;
}

}  // namespace

std::string render_line_plot(const PlotSpec& spec,
                             const std::vector<Series>& series) {
  if (series.empty()) {
    throw ConfigError("plot needs at least one series");
  }
  if (spec.width < 160 || spec.height < 120) {
    throw ConfigError("plot canvas too small");
  }
  Range x_range{std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity()};
  Range y_range = x_range;
  for (const Series& s : series) {
    if (s.x.size() != s.y.size()) {
      throw ConfigError("series '" + s.name + "' has mismatched x/y lengths");
    }
    if (s.x.empty()) {
      throw ConfigError("series '" + s.name + "' is empty");
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        throw ConfigError("series '" + s.name + "' has non-finite values");
      }
      x_range.lo = std::min(x_range.lo, s.x[i]);
      x_range.hi = std::max(x_range.hi, s.x[i]);
      y_range.lo = std::min(y_range.lo, s.y[i]);
      y_range.hi = std::max(y_range.hi, s.y[i]);
    }
  }
  if (spec.y_range) {
    y_range = {spec.y_range->first, spec.y_range->second};
    if (!(y_range.lo < y_range.hi)) {
      throw ConfigError("plot y range must be increasing");
    }
  }
  x_range = pad_if_flat(x_range);
  y_range = pad_if_flat(y_range);

  const double plot_w = spec.width - kMarginLeft - kMarginRight;
  const double plot_h = spec.height - kMarginTop - kMarginBottom;
  const auto to_px_x = [&](double v) {
    return kMarginLeft + (v - x_range.lo) / (x_range.hi - x_range.lo) * plot_w;
  };
  const auto to_px_y = [&](double v) {
    return kMarginTop + plot_h -
           (v - y_range.lo) / (y_range.hi - y_range.lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << spec.width << "\" height=\"" << spec.height << "\" viewBox=\"0 0 "
      << spec.width << " " << spec.height << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" fill=\"white\"/>\n";
  if (!spec.title.empty()) {
    svg << "  <text x=\"" << spec.width / 2 << "\" y=\"20\" "
        << "text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"14\" font-weight=\"bold\">" << xml_escape(spec.title)
        << "</text>\n";
  }

  // Grid and ticks.
  for (int t = 0; t <= kTicks; ++t) {
    const double fx = static_cast<double>(t) / kTicks;
    const double xv = x_range.lo + fx * (x_range.hi - x_range.lo);
    const double yv = y_range.lo + fx * (y_range.hi - y_range.lo);
    const double x_px = to_px_x(xv);
    const double y_px = to_px_y(yv);
    svg << "  <line x1=\"" << px(x_px) << "\" y1=\"" << px(kMarginTop)
        << "\" x2=\"" << px(x_px) << "\" y2=\"" << px(kMarginTop + plot_h)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << px(kMarginLeft) << "\" y1=\"" << px(y_px)
        << "\" x2=\"" << px(kMarginLeft + plot_w) << "\" y2=\"" << px(y_px)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    char label[32];
    std::snprintf(label, sizeof(label), "%g", xv);
    svg << "  <text x=\"" << px(x_px) << "\" y=\""
        << px(kMarginTop + plot_h + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << label << "</text>\n";
    std::snprintf(label, sizeof(label), "%g", yv);
    svg << "  <text x=\"" << px(kMarginLeft - 8) << "\" y=\"" << px(y_px + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << label << "</text>\n";
  }

  // Axes.
  svg << "  <rect x=\"" << px(kMarginLeft) << "\" y=\"" << px(kMarginTop)
      << "\" width=\"" << px(plot_w) << "\" height=\"" << px(plot_h)
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  if (!spec.x_label.empty()) {
    svg << "  <text x=\"" << px(kMarginLeft + plot_w / 2) << "\" y=\""
        << px(spec.height - 10)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"12\">" << xml_escape(spec.x_label) << "</text>\n";
  }
  if (!spec.y_label.empty()) {
    svg << "  <text x=\"16\" y=\"" << px(kMarginTop + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"12\" transform=\"rotate(-90 16 "
        << px(kMarginTop + plot_h / 2) << ")\">" << xml_escape(spec.y_label)
        << "</text>\n";
  }

  // Data polylines, clipped to the axes box by construction of the ranges
  // (callers pass y_range when curves may leave the data span).
  for (std::size_t s = 0; s < series.size(); ++s) {
    const Series& line = series[s];
    const std::string color =
        line.color.empty()
            ? kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))]
            : line.color;
    svg << "  <polyline fill=\"none\" stroke=\"" << xml_escape(color)
        << "\" stroke-width=\"1.5\" data-name=\"" << xml_escape(line.name)
        << "\" data-x=\"" << joined(line.x) << "\" data-y=\""
        << joined(line.y) << "\" points=\"";
    for (std::size_t i = 0; i < line.x.size(); ++i) {
      if (i > 0) svg << ' ';
      const double yv =
          std::clamp(line.y[i], y_range.lo, y_range.hi);
      svg << px(to_px_x(line.x[i])) << ',' << px(to_px_y(yv));
    }
    svg << "\"/>\n";
  }

  // Legend, top-right inside the axes box.
  for (std::size_t s = 0; s < series.size(); ++s) {
    const Series& line = series[s];
    const std::string color =
        line.color.empty()
            ? kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))]
            : line.color;
    const double ly = kMarginTop + 14 + 16.0 * s;
    svg << "  <line x1=\"" << px(kMarginLeft + plot_w - 120) << "\" y1=\""
        << px(ly - 4) << "\" x2=\"" << px(kMarginLeft + plot_w - 100)
        << "\" y2=\"" << px(ly - 4) << "\" stroke=\"" << xml_escape(color)
        << "\" stroke-width=\"2\"/>\n";
    svg << "  <text x=\"" << px(kMarginLeft + plot_w - 94) << "\" y=\""
        << px(ly) << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << xml_escape(line.name) << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace solbench
