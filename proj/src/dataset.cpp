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

#include "solbench/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "solbench/digest.hpp"
#include "solbench/errors.hpp"
#include "solbench/image_io.hpp"

namespace solbench {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // Trim surrounding whitespace; paths with embedded commas are not
    // supported by this format.
    const auto begin = field.find_first_not_of(" \t\r");
    const auto end = field.find_last_not_of(" \t\r");
    fields.push_back(begin == std::string::npos
                         ? std::string()
                         : field.substr(begin, end - begin + 1));
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

bool is_header(const std::vector<std::string>& fields) {
  if (fields.empty()) return false;
  const std::string& last = fields.back();
  return last == "label";
}

int parse_label(const std::string& text, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const int label = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return label;
  } catch (const std::exception&) {
    throw ConfigError("manifest line " + std::to_string(line_no) +
                      ": label '" + text + "' is not an integer");
  }
}

}  // namespace

Manifest manifest_from_csv_text(const std::string& text,
                                int expected_class_count) {
  Manifest manifest;
  manifest.content_hash = sha256_hex(text);

  std::stringstream ss(text);
  std::string line;
  std::size_t line_no = 0;
  bool first_data_line = true;
  std::unordered_set<std::string> seen_ids;
  int max_label = -1;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (first_data_line && is_header(fields)) {
      first_data_line = false;
      continue;
    }
    first_data_line = false;

    ManifestEntry entry;
    if (fields.size() == 3) {
      entry.sample_id = fields[0];
      entry.path = fields[1];
      entry.label = parse_label(fields[2], line_no);
    } else if (fields.size() == 2) {
      entry.path = fields[0];
      entry.sample_id = fields[0];
      entry.label = parse_label(fields[1], line_no);
    } else {
      throw ConfigError("manifest line " + std::to_string(line_no) +
                        ": expected 2 or 3 columns, got " +
                        std::to_string(fields.size()));
    }
    if (entry.sample_id.empty() || entry.path.empty()) {
      throw ConfigError("manifest line " + std::to_string(line_no) +
                        ": empty id or path");
    }
    if (!seen_ids.insert(entry.sample_id).second) {
      throw ConfigError("duplicate sample id '" + entry.sample_id +
                        "' at manifest line " + std::to_string(line_no));
    }
    if (entry.label < 0 ||
        (expected_class_count > 0 && entry.label >= expected_class_count)) {
      throw ConfigError("manifest line " + std::to_string(line_no) +
                        ": label " + std::to_string(entry.label) +
                        " out of range [0, " +
                        std::to_string(expected_class_count) + ")");
    }
    max_label = std::max(max_label, entry.label);
    manifest.entries.push_back(std::move(entry));
  }
  if (manifest.entries.empty()) {
    throw ConfigError("manifest has no entries");
  }
  manifest.class_count =
      expected_class_count > 0 ? expected_class_count : max_label + 1;
  return manifest;
}

Manifest load_manifest(const std::string& path, int expected_class_count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open manifest '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return manifest_from_csv_text(buf.str(), expected_class_count);
  } catch (const ConfigError& e) {
    throw ConfigError("'" + path + "': " + e.what());
  }
}

ManifestSampleSet::ManifestSampleSet(Manifest manifest, std::string base_dir)
    : manifest_(std::move(manifest)), base_dir_(std::move(base_dir)) {}

LabeledSample ManifestSampleSet::get(std::size_t index) const {
  const ManifestEntry& entry = manifest_.entries.at(index);
  std::filesystem::path path(entry.path);
  if (path.is_relative() && !base_dir_.empty()) {
    path = std::filesystem::path(base_dir_) / path;
  }
  try {
    return LabeledSample{entry.sample_id, decode_image_file(path.string()),
                         entry.label};
  } catch (const DecodeError& e) {
    throw DecodeError("sample '" + entry.sample_id + "': " + e.what());
  }
}

std::map<int, std::string> load_class_names(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open class-name map '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("'" + path + "' must be a JSON object");
  }
  std::map<int, std::string> names;
  for (const auto& [key, value] : j.items()) {
    try {
      names[std::stoi(key)] = value.get<std::string>();
    } catch (const std::exception&) {
      throw ConfigError("'" + path + "': bad class-name entry '" + key + "'");
    }
  }
  return names;
}

}  // namespace solbench
