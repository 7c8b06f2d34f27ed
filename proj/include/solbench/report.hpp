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
#include <optional>
#include <string>
#include <vector>

#include "solbench/attack.hpp"
#include "solbench/preprocess.hpp"
#include "solbench/sweep.hpp"

namespace solbench {

struct CleanMetrics {
  double top1 = 0.0;
  double top5 = 0.0;
};

struct SweepConfig {
  double step = 0.01;
  std::uint64_t seed = 0;  // recorded for provenance; the sweep itself is
                           // deterministic
};

/// Persisted record of one attack or sweep run. Serialization is canonical
/// (sorted keys, fixed indentation, shortest round-trip numbers), so
/// serialize -> parse -> serialize is byte-identical and equal reports
/// compare equal as files.
struct RunReport {
  std::string tool_version;
  std::string timestamp;  // ISO-8601 UTC, e.g. 2026-03-01T12:00:00Z
  std::string model_identity;
  std::string model_digest;
  std::optional<PreprocessConfig> preprocess;
  std::string manifest_hash;

  // Exactly one of the two configs is present and selects the run kind.
  std::optional<AttackConfig> attack_config;
  std::optional<SweepConfig> sweep_config;

  std::optional<CleanMetrics> clean;
  std::optional<CleanMetrics> robust;
  std::optional<SweepResult> sweep;
  std::vector<AttackOutcome> outcomes;
  std::vector<std::string> errored_samples;
  std::map<std::string, double> external_scores;
};

/// Throws ConfigError unless exactly one config is present, provenance
/// fields are filled in, and every accuracy lies in [0, 1].
void validate_report(const RunReport& report);

/// Formats epoch seconds as an ISO-8601 UTC timestamp.
std::string format_utc_timestamp(std::int64_t epoch_seconds);

/// Current UTC time, or SOURCE_DATE_EPOCH when that variable is set, so
/// runs can be made byte-for-byte reproducible.
std::string resolve_timestamp();

/// Canonical JSON, terminated with a newline.
std::string serialize_report(const RunReport& report);

/// Inverse of serialize_report. Throws ConfigError on malformed input.
RunReport parse_report(const std::string& text);

/// Writes the serialized report. Existing files are never mutated: the
/// call throws ConfigError unless overwrite is set.
void write_report_file(const RunReport& report, const std::string& path,
                       bool overwrite = false);

/// Reads and parses a report file. Errors name the file.
RunReport load_report_file(const std::string& path);

/// Aligned plain-text summary, one row per report. Columns cover clean and
/// attacked accuracy, the sweep minimum, and any external score keys that
/// appear in the inputs; accuracies render as percentages.
std::string render_report_table(const std::vector<RunReport>& reports);

/// Same summary as CSV, accuracies as fractions in [0, 1]. Missing values
/// render as empty cells.
std::string render_report_csv(const std::vector<RunReport>& reports);

}  // namespace solbench
