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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "solbench/image.hpp"

namespace solbench {

struct ManifestEntry {
  std::string sample_id;
  std::string path;
  int label = 0;
};

/// Hashed CSV listing of the evaluation dataset. Sample ids are unique and
/// iteration order is the file order, on every run.
struct Manifest {
  std::vector<ManifestEntry> entries;
  int class_count = 0;
  std::string content_hash;  // sha256 of the raw manifest bytes
};

/// Parses the manifest CSV: columns id,path,label (header optional, id
/// column optional; the path doubles as the id when absent). When
/// expected_class_count is positive, labels must lie in [0, count);
/// otherwise the count is inferred as max(label) + 1. Missing image files
/// are not checked here; decoding happens lazily.
Manifest load_manifest(const std::string& path, int expected_class_count = 0);
Manifest manifest_from_csv_text(const std::string& text,
                                int expected_class_count = 0);

struct LabeledSample {
  std::string id;
  Image image;
  int label = 0;
};

/// Random-access view of labeled samples. get() is safe to call from any
/// number of threads; index order equals manifest order.
class SampleSet {
 public:
  virtual ~SampleSet() = default;
  virtual std::size_t size() const = 0;
  virtual LabeledSample get(std::size_t index) const = 0;
  virtual std::string id(std::size_t index) const = 0;
};

/// Decodes images from disk on demand. Relative manifest paths resolve
/// against base_dir. Decode failures name the sample and file.
class ManifestSampleSet : public SampleSet {
 public:
  ManifestSampleSet(Manifest manifest, std::string base_dir = "");
  std::size_t size() const override { return manifest_.entries.size(); }
  LabeledSample get(std::size_t index) const override;
  std::string id(std::size_t index) const override {
    return manifest_.entries.at(index).sample_id;
  }
  const Manifest& manifest() const { return manifest_; }

 private:
  Manifest manifest_;
  std::string base_dir_;
};

/// In-memory sample set for synthetic data and pre-transformed copies.
class MemorySampleSet : public SampleSet {
 public:
  explicit MemorySampleSet(std::vector<LabeledSample> samples)
      : samples_(std::move(samples)) {}
  std::size_t size() const override { return samples_.size(); }
  LabeledSample get(std::size_t index) const override {
    return samples_.at(index);
  }
  std::string id(std::size_t index) const override {
    return samples_.at(index).id;
  }

 private:
  std::vector<LabeledSample> samples_;
};

/// Optional class-name map: JSON object {"0": "tench", ...}.
std::map<int, std::string> load_class_names(const std::string& path);

}  // namespace solbench
