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

#include <cstdlib>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "solbench/digest.hpp"
#include "solbench/numformat.hpp"
#include "solbench/rng.hpp"
#include "support/onnx_model_builder.hpp"
#include "support/temp_dir.hpp"

namespace solbench {
namespace {

TEST(FormatDoubleTest, RoundTripsExactly) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double value = dist(rng);
    const std::string text = format_double(value);
    EXPECT_EQ(std::strtod(text.c_str(), nullptr), value) << text;
  }
}

TEST(FormatDoubleTest, UsesShortestForm) {
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(0.25), "0.25");
  EXPECT_EQ(format_double(-2.5), "-2.5");
}

// Public test vectors for SHA-256 (FIPS 180-2 examples).
TEST(DigestTest, KnownVectors) {
  EXPECT_EQ(
      sha256_hex(""),
      "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(
      sha256_hex("abc"),
      "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(DigestTest, FileDigestMatchesContentDigest) {
  testing::ScopedTempDir dir;
  const std::string path = dir.file("blob.bin");
  const std::string content = "solarization benchmark\n";
  testing::write_binary_file(path, content);
  EXPECT_EQ(sha256_file(path), sha256_hex(content));
}

TEST(DigestTest, MissingFileThrows) {
  EXPECT_THROW(sha256_file("/nonexistent/blob.bin"), std::runtime_error);
}

TEST(AlphaStreamTest, DrawsLieInUnitInterval) {
  AlphaStream stream(42, "sample-1");
  for (int i = 0; i < 10000; ++i) {
    const double draw = stream.next();
    ASSERT_TRUE(draw >= 0.0 && draw < 1.0) << draw;
  }
}

TEST(AlphaStreamTest, DeterministicPerSampleAndSeed) {
  AlphaStream a(42, "sample-1");
  AlphaStream b(42, "sample-1");
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next(), b.next());
  }
}

TEST(AlphaStreamTest, StreamsDifferAcrossSamplesAndSeeds) {
  AlphaStream base(42, "sample-1");
  AlphaStream other_sample(42, "sample-2");
  AlphaStream other_seed(43, "sample-1");
  int same_sample = 0, same_seed = 0;
  for (int i = 0; i < 64; ++i) {
    const double draw = base.next();
    if (draw == other_sample.next()) ++same_sample;
    if (draw == other_seed.next()) ++same_seed;
  }
  EXPECT_EQ(same_sample, 0);
  EXPECT_EQ(same_seed, 0);
}

TEST(AlphaStreamTest, SeedMixingAvoidsTrivialCollisions) {
  // Ids that differ only in a suffix and nearby master seeds must land in
  // clearly distinct streams.
  std::set<std::uint64_t> seeds;
  for (int s = 0; s < 16; ++s) {
    for (int i = 0; i < 16; ++i) {
      seeds.insert(sample_stream_seed(s, "img_" + std::to_string(i)));
    }
  }
  EXPECT_EQ(seeds.size(), 256u);
}

}  // namespace
}  // namespace solbench
