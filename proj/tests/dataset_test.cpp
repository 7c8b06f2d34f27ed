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

#include <gtest/gtest.h>

#include "solbench/digest.hpp"
#include "solbench/errors.hpp"
#include "support/image_files.hpp"
#include "support/onnx_model_builder.hpp"
#include "support/temp_dir.hpp"

namespace solbench {
namespace {

TEST(ManifestTest, ParsesThreeColumnCsvWithHeader) {
  const std::string csv = "id,path,label\nimg1,images/a.png,3\nimg2,b.png,0\n";
  const Manifest manifest = manifest_from_csv_text(csv);
  ASSERT_EQ(manifest.entries.size(), 2u);
  EXPECT_EQ(manifest.entries[0].sample_id, "img1");
  EXPECT_EQ(manifest.entries[0].path, "images/a.png");
  EXPECT_EQ(manifest.entries[0].label, 3);
  EXPECT_EQ(manifest.class_count, 4);  // inferred max label + 1
  EXPECT_EQ(manifest.content_hash, sha256_hex(csv));
}

TEST(ManifestTest, TwoColumnFormUsesPathAsId) {
  const Manifest manifest =
      manifest_from_csv_text("path,label\na.png,1\nb.png,0\n");
  EXPECT_EQ(manifest.entries[0].sample_id, "a.png");
  EXPECT_EQ(manifest.entries[0].path, "a.png");
}

TEST(ManifestTest, HeaderIsOptional) {
  const Manifest manifest = manifest_from_csv_text("x,a.png,1\n");
  ASSERT_EQ(manifest.entries.size(), 1u);
  EXPECT_EQ(manifest.entries[0].sample_id, "x");
}

TEST(ManifestTest, HandlesCrlfAndPadding) {
  const Manifest manifest =
      manifest_from_csv_text("id,path,label\r\n x , a.png , 2 \r\n");
  EXPECT_EQ(manifest.entries[0].sample_id, "x");
  EXPECT_EQ(manifest.entries[0].path, "a.png");
  EXPECT_EQ(manifest.entries[0].label, 2);
}

TEST(ManifestTest, SkipsBlankLines) {
  const Manifest manifest = manifest_from_csv_text("a.png,0\n\n\nb.png,1\n");
  EXPECT_EQ(manifest.entries.size(), 2u);
}

TEST(ManifestTest, RejectsBadInput) {
  EXPECT_THROW(manifest_from_csv_text(""), ConfigError);
  EXPECT_THROW(manifest_from_csv_text("id,path,label\n"), ConfigError);
  EXPECT_THROW(manifest_from_csv_text("only-one-column\n"), ConfigError);
  EXPECT_THROW(manifest_from_csv_text("a,b,c,d\n"), ConfigError);
  EXPECT_THROW(manifest_from_csv_text("a.png,notanumber\n"), ConfigError);
  EXPECT_THROW(manifest_from_csv_text("a.png,1.5\n"), ConfigError);
  EXPECT_THROW(manifest_from_csv_text("a.png,-1\n"), ConfigError);
  EXPECT_THROW(manifest_from_csv_text("x,a.png,1\nx,b.png,0\n"), ConfigError);
  EXPECT_THROW(manifest_from_csv_text(",a.png,1\n"), ConfigError);
}

TEST(ManifestTest, ValidatesAgainstExpectedClassCount) {
  EXPECT_NO_THROW(manifest_from_csv_text("a.png,1\n", 2));
  EXPECT_THROW(manifest_from_csv_text("a.png,2\n", 2), ConfigError);
  EXPECT_EQ(manifest_from_csv_text("a.png,0\n", 10).class_count, 10);
}

TEST(ManifestTest, LoadNamesTheFile) {
  try {
    load_manifest("/nonexistent/m.csv");
    FAIL() << "missing manifest should throw";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/m.csv"),
              std::string::npos);
  }
}

TEST(ManifestSampleSetTest, ResolvesRelativePathsAndDecodes) {
  testing::ScopedTempDir dir;
  testing::write_uniform_png(dir.file("bright.png"), 4, 4, 200);
  testing::write_uniform_png(dir.file("dark.png"), 4, 4, 30);
  const Manifest manifest = manifest_from_csv_text(
      "id,path,label\nbright,bright.png,1\ndark,dark.png,0\n");
  const ManifestSampleSet samples(manifest, dir.path().string());
  ASSERT_EQ(samples.size(), 2u);
  EXPECT_EQ(samples.id(0), "bright");
  const LabeledSample sample = samples.get(0);
  EXPECT_EQ(sample.label, 1);
  EXPECT_EQ(sample.image.data[0], 200 / 255.0);
  EXPECT_EQ(samples.get(1).image.data[0], 30 / 255.0);
}

TEST(ManifestSampleSetTest, DecodeErrorsNameTheSample) {
  const Manifest manifest = manifest_from_csv_text("ghost,missing.png,0\n");
  const ManifestSampleSet samples(manifest, "/nonexistent");
  try {
    samples.get(0);
    FAIL() << "missing image should throw";
  } catch (const DecodeError& e) {
    EXPECT_NE(std::string(e.what()).find("ghost"), std::string::npos);
  }
}

TEST(MemorySampleSetTest, ServesStoredSamples) {
  std::vector<LabeledSample> data;
  data.push_back({"s0", uniform_image(2, 2, 1, 0.1), 0});
  data.push_back({"s1", uniform_image(2, 2, 1, 0.9), 1});
  const MemorySampleSet samples(std::move(data));
  EXPECT_EQ(samples.size(), 2u);
  EXPECT_EQ(samples.id(1), "s1");
  EXPECT_EQ(samples.get(1).label, 1);
}

TEST(ClassNamesTest, LoadsAndValidates) {
  testing::ScopedTempDir dir;
  const std::string good = dir.file("names.json");
  testing::write_binary_file(good, R"({"0": "tench", "1": "goldfish"})");
  const auto names = load_class_names(good);
  EXPECT_EQ(names.at(0), "tench");
  EXPECT_EQ(names.at(1), "goldfish");

  const std::string bad_key = dir.file("bad_key.json");
  testing::write_binary_file(bad_key, R"({"zero": "tench"})");
  EXPECT_THROW(load_class_names(bad_key), ConfigError);

  const std::string not_object = dir.file("arr.json");
  testing::write_binary_file(not_object, R"(["tench"])");
  EXPECT_THROW(load_class_names(not_object), ConfigError);

  EXPECT_THROW(load_class_names(dir.file("missing.json")), ConfigError);
}

}  // namespace
}  // namespace solbench
