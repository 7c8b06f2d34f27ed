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

#include "solbench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "solbench/errors.hpp"
#include "solbench/numformat.hpp"

namespace solbench {

namespace {

using nlohmann::json;

void check_unit_interval(double value, const std::string& what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ConfigError(what + " must lie in [0, 1]");
  }
}

json metrics_to_json(const CleanMetrics& metrics) {
  return json{{"top1", metrics.top1}, {"top5", metrics.top5}};
}

json sweep_to_json(const SweepResult& sweep) {
  return json{{"alphas", sweep.alphas},
              {"global_min_accuracy", sweep.global_min_accuracy},
              {"global_min_alpha", sweep.global_min_alpha},
              {"top1_accuracy", sweep.top1_accuracy},
              {"top5_accuracy", sweep.top5_accuracy}};
}

json outcome_to_json(const AttackOutcome& outcome) {
  return json{{"chosen_alpha", outcome.chosen_alpha},
              {"correct_top1", outcome.correct_top1},
              {"correct_top5", outcome.correct_top5},
              {"iterations_used", outcome.iterations_used},
              {"sample_id", outcome.sample_id},
              {"success", outcome.success},
              {"true_label_score_at_chosen",
               outcome.true_label_score_at_chosen}};
}

const json& require(const json& node, const char* key) {
  const auto it = node.find(key);
  if (it == node.end()) {
    throw ConfigError(std::string("report is missing field '") + key + "'");
  }
  return *it;
}

template <typename T>
T field_as(const json& node, const char* key) {
  try {
    return require(node, key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("report field '") + key +
                      "' has the wrong type");
  }
}

CleanMetrics metrics_from_json(const json& node) {
  CleanMetrics metrics;
  metrics.top1 = field_as<double>(node, "top1");
  metrics.top5 = field_as<double>(node, "top5");
  return metrics;
}

SweepResult sweep_from_json(const json& node) {
  SweepResult sweep;
  sweep.alphas = field_as<std::vector<double>>(node, "alphas");
  sweep.global_min_accuracy = field_as<double>(node, "global_min_accuracy");
  sweep.global_min_alpha = field_as<double>(node, "global_min_alpha");
  sweep.top1_accuracy = field_as<std::vector<double>>(node, "top1_accuracy");
  sweep.top5_accuracy = field_as<std::vector<double>>(node, "top5_accuracy");
  return sweep;
}

AttackOutcome outcome_from_json(const json& node) {
  AttackOutcome outcome;
  outcome.chosen_alpha = field_as<double>(node, "chosen_alpha");
  outcome.correct_top1 = field_as<bool>(node, "correct_top1");
  outcome.correct_top5 = field_as<bool>(node, "correct_top5");
  outcome.iterations_used = field_as<int>(node, "iterations_used");
  outcome.sample_id = field_as<std::string>(node, "sample_id");
  outcome.success = field_as<bool>(node, "success");
  outcome.true_label_score_at_chosen =
      field_as<double>(node, "true_label_score_at_chosen");
  return outcome;
}

std::string percent_cell(double fraction) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", fraction * 100.0);
  return buffer;
}

struct SummaryRow {
  std::string model;
  std::optional<double> clean_top1, clean_top5;
  std::optional<double> robust_top1, robust_top5;
  std::optional<double> sweep_min_accuracy, sweep_min_alpha;
  std::map<std::string, double> external;
};

std::vector<SummaryRow> summarize(const std::vector<RunReport>& reports) {
  std::vector<SummaryRow> rows;
  rows.reserve(reports.size());
  for (const RunReport& report : reports) {
    SummaryRow row;
    row.model = report.model_identity;
    if (report.clean) {
      row.clean_top1 = report.clean->top1;
      row.clean_top5 = report.clean->top5;
    }
    if (report.robust) {
      row.robust_top1 = report.robust->top1;
      row.robust_top5 = report.robust->top5;
    }
    if (report.sweep) {
      row.sweep_min_accuracy = report.sweep->global_min_accuracy;
      row.sweep_min_alpha = report.sweep->global_min_alpha;
    }
    row.external = report.external_scores;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> external_keys(const std::vector<SummaryRow>& rows) {
  std::set<std::string> keys;
  for (const SummaryRow& row : rows) {
    for (const auto& [key, value] : row.external) keys.insert(key);
  }
  return {keys.begin(), keys.end()};
}

}  // namespace

void validate_report(const RunReport& report) {
  if (report.tool_version.empty()) {
    throw ConfigError("report has an empty tool_version");
  }
  if (report.timestamp.empty()) {
    throw ConfigError("report has an empty timestamp");
  }
  if (report.model_identity.empty()) {
    throw ConfigError("report has an empty model_identity");
  }
  if (report.attack_config.has_value() == report.sweep_config.has_value()) {
    throw ConfigError(
        "report must carry exactly one of an attack or a sweep config");
  }
  if (report.clean) {
    check_unit_interval(report.clean->top1, "clean top1");
    check_unit_interval(report.clean->top5, "clean top5");
  }
  if (report.robust) {
    check_unit_interval(report.robust->top1, "robust top1");
    check_unit_interval(report.robust->top5, "robust top5");
  }
  if (report.sweep) {
    const SweepResult& sweep = *report.sweep;
    if (sweep.alphas.size() != sweep.top1_accuracy.size() ||
        sweep.alphas.size() != sweep.top5_accuracy.size()) {
      throw ConfigError("sweep curves disagree on length");
    }
    for (double a : sweep.top1_accuracy) check_unit_interval(a, "sweep top1");
    for (double a : sweep.top5_accuracy) check_unit_interval(a, "sweep top5");
    check_unit_interval(sweep.global_min_accuracy, "sweep minimum");
  }
  for (const AttackOutcome& outcome : report.outcomes) {
    check_unit_interval(outcome.true_label_score_at_chosen,
                        "outcome score for '" + outcome.sample_id + "'");
  }
}

std::string format_utc_timestamp(std::int64_t epoch_seconds) {
  const std::time_t t = static_cast<std::time_t>(epoch_seconds);
  std::tm parts{};
  if (gmtime_r(&t, &parts) == nullptr) {
    throw ConfigError("timestamp out of range: " + std::to_string(epoch_seconds));
  }
  char buffer[72];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                parts.tm_year + 1900, parts.tm_mon + 1, parts.tm_mday,
                parts.tm_hour, parts.tm_min, parts.tm_sec);
  return buffer;
}

std::string resolve_timestamp() {
  if (const char* pinned = std::getenv("SOURCE_DATE_EPOCH")) {
    try {
      return format_utc_timestamp(std::stoll(pinned));
    } catch (const std::logic_error&) {
      throw ConfigError(std::string("SOURCE_DATE_EPOCH is not an integer: ") +
                        pinned);
    }
  }
  return format_utc_timestamp(static_cast<std::int64_t>(std::time(nullptr)));
}

std::string serialize_report(const RunReport& report) {
  validate_report(report);
  json config;
  if (report.attack_config) {
    config = json{{"k", report.attack_config->k},
                  {"kind", "attack"},
                  {"n", report.attack_config->n},
                  {"seed", report.attack_config->seed}};
  } else {
    config = json{{"kind", "sweep"},
                  {"seed", report.sweep_config->seed},
                  {"step", report.sweep_config->step}};
  }
  json root{{"config", std::move(config)},
            {"errored_samples", report.errored_samples},
            {"external_scores", report.external_scores},
            {"manifest_hash", report.manifest_hash},
            {"model_digest", report.model_digest},
            {"model_identity", report.model_identity},
            {"timestamp", report.timestamp},
            {"tool_version", report.tool_version}};
  root["clean"] = report.clean ? metrics_to_json(*report.clean) : json();
  root["robust"] = report.robust ? metrics_to_json(*report.robust) : json();
  root["sweep"] = report.sweep ? sweep_to_json(*report.sweep) : json();
  root["preprocess"] =
      report.preprocess
          ? json::parse(preprocess_config_to_json_text(*report.preprocess))
          : json();
  json outcomes = json::array();
  for (const AttackOutcome& outcome : report.outcomes) {
    outcomes.push_back(outcome_to_json(outcome));
  }
  root["outcomes"] = std::move(outcomes);
  return root.dump(2) + "\n";
}

RunReport parse_report(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("report root must be a JSON object");
  }

  RunReport report;
  report.tool_version = field_as<std::string>(root, "tool_version");
  report.timestamp = field_as<std::string>(root, "timestamp");
  report.model_identity = field_as<std::string>(root, "model_identity");
  report.model_digest = field_as<std::string>(root, "model_digest");
  report.manifest_hash = field_as<std::string>(root, "manifest_hash");

  const json& config = require(root, "config");
  const std::string kind = field_as<std::string>(config, "kind");
  if (kind == "attack") {
    AttackConfig attack;
    attack.k = field_as<int>(config, "k");
    attack.n = field_as<int>(config, "n");
    attack.seed = field_as<std::uint64_t>(config, "seed");
    report.attack_config = attack;
  } else if (kind == "sweep") {
    SweepConfig sweep;
    sweep.step = field_as<double>(config, "step");
    sweep.seed = field_as<std::uint64_t>(config, "seed");
    report.sweep_config = sweep;
  } else {
    throw ConfigError("unknown run kind '" + kind + "'");
  }

  const json& preprocess = require(root, "preprocess");
  if (!preprocess.is_null()) {
    report.preprocess = preprocess_config_from_json_text(preprocess.dump());
  }
  const json& clean = require(root, "clean");
  if (!clean.is_null()) report.clean = metrics_from_json(clean);
  const json& robust = require(root, "robust");
  if (!robust.is_null()) report.robust = metrics_from_json(robust);
  const json& sweep = require(root, "sweep");
  if (!sweep.is_null()) report.sweep = sweep_from_json(sweep);

  const json& outcomes = require(root, "outcomes");
  if (!outcomes.is_array()) {
    throw ConfigError("report field 'outcomes' has the wrong type");
  }
  for (const json& node : outcomes) {
    report.outcomes.push_back(outcome_from_json(node));
  }
  report.errored_samples =
      field_as<std::vector<std::string>>(root, "errored_samples");
  report.external_scores =
      field_as<std::map<std::string, double>>(root, "external_scores");

  validate_report(report);
  return report;
}

void write_report_file(const RunReport& report, const std::string& path,
                       bool overwrite) {
  if (!overwrite && std::filesystem::exists(path)) {
    throw ConfigError("refusing to overwrite existing report '" + path +
                      "' (pass --overwrite to replace it)");
  }
  const std::string text = serialize_report(report);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing report to '" + path + "'");
  }
}

RunReport load_report_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read report '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_report(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError("report '" + path + "': " + e.what());
  }
}

std::string render_report_table(const std::vector<RunReport>& reports) {
  const std::vector<SummaryRow> rows = summarize(reports);
  const std::vector<std::string> extra = external_keys(rows);

  const bool any_clean = std::any_of(rows.begin(), rows.end(), [](auto& r) {
    return r.clean_top1.has_value();
  });
  const bool any_robust = std::any_of(rows.begin(), rows.end(), [](auto& r) {
    return r.robust_top1.has_value();
  });
  const bool any_sweep = std::any_of(rows.begin(), rows.end(), [](auto& r) {
    return r.sweep_min_accuracy.has_value();
  });

  std::vector<std::string> header{"Model"};
  if (any_clean) {
    header.push_back("Clean Top1");
    header.push_back("Clean Top5");
  }
  if (any_robust) {
    header.push_back("R.S. Top1");
    header.push_back("R.S. Top5");
  }
  if (any_sweep) {
    header.push_back("Min Acc");
    header.push_back("Min Alpha");
  }
  for (const std::string& key : extra) header.push_back(key);

  std::vector<std::vector<std::string>> cells;
  cells.push_back(header);
  for (const SummaryRow& row : rows) {
    std::vector<std::string> line{row.model};
    const auto push_pct = [&line](const std::optional<double>& v) {
      line.push_back(v ? percent_cell(*v) : "-");
    };
    if (any_clean) {
      push_pct(row.clean_top1);
      push_pct(row.clean_top5);
    }
    if (any_robust) {
      push_pct(row.robust_top1);
      push_pct(row.robust_top5);
    }
    if (any_sweep) {
      push_pct(row.sweep_min_accuracy);
      line.push_back(row.sweep_min_alpha ? format_double(*row.sweep_min_alpha)
                                         : "-");
    }
    for (const std::string& key : extra) {
      const auto it = row.external.find(key);
      line.push_back(it != row.external.end() ? format_double(it->second)
                                              : "-");
    }
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      widths[c] = std::max(widths[c], line[c].size());
    }
  }

  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (c > 0) out << "  ";
      const std::string& cell = cells[r][c];
      if (c == 0) {
        out << cell << std::string(widths[c] - cell.size(), ' ');
      } else {
        out << std::string(widths[c] - cell.size(), ' ') << cell;
      }
    }
    out << "\n";
    if (r == 0) {
      for (std::size_t c = 0; c < widths.size(); ++c) {
        if (c > 0) out << "  ";
        out << std::string(widths[c], '-');
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string render_report_csv(const std::vector<RunReport>& reports) {
  const std::vector<SummaryRow> rows = summarize(reports);
  const std::vector<std::string> extra = external_keys(rows);

  std::ostringstream out;
  out << "model,clean_top1,clean_top5,robust_top1,robust_top5,"
         "sweep_min_accuracy,sweep_min_alpha";
  for (const std::string& key : extra) out << "," << key;
  out << "\n";
  const auto cell = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  for (const SummaryRow& row : rows) {
    out << row.model << "," << cell(row.clean_top1) << ","
        << cell(row.clean_top5) << "," << cell(row.robust_top1) << ","
        << cell(row.robust_top5) << "," << cell(row.sweep_min_accuracy) << ","
        << cell(row.sweep_min_alpha);
    for (const std::string& key : extra) {
      const auto it = row.external.find(key);
      out << ",";
      if (it != row.external.end()) out << format_double(it->second);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace solbench
