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

#include "solbench/onnx_classifier.hpp"

#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "solbench/errors.hpp"
#include "solbench/image.hpp"
#include "solbench/preprocess.hpp"
#include "support/onnx_model_builder.hpp"
#include "support/temp_dir.hpp"

namespace solbench {
namespace {

constexpr int kSide = 4;
constexpr int kInFeatures = 3 * kSide * kSide;
constexpr int kOutFeatures = 3;

testing::LinearModelSpec make_spec(bool softmax, bool channels_last = false) {
  testing::LinearModelSpec spec;
  spec.input_dims = channels_last
                        ? std::vector<std::int64_t>{1, kSide, kSide, 3}
                        : std::vector<std::int64_t>{1, 3, kSide, kSide};
  spec.out_features = kOutFeatures;
  spec.weights.resize(kInFeatures * kOutFeatures);
  for (int o = 0; o < kOutFeatures; ++o) {
    for (int i = 0; i < kInFeatures; ++i) {
      spec.weights[o * kInFeatures + i] =
          static_cast<float>((o * 31 + i * 7) % 11 - 5) / 10.0f;
    }
  }
  spec.bias = {0.05f, -0.1f, 0.2f};
  spec.softmax = softmax;
  return spec;
}

std::string write_model(const testing::ScopedTempDir& dir,
                        const testing::LinearModelSpec& spec,
                        const std::string& name) {
  const std::string path = dir.file(name);
  testing::write_binary_file(path, testing::build_linear_onnx(spec));
  return path;
}

PreprocessConfig identity_config(InputLayout layout) {
  PreprocessConfig config;
  config.resize_shorter_side = kSide;
  config.crop_size = kSide;
  config.mean = {0.0, 0.0, 0.0};
  config.std = {1.0, 1.0, 1.0};
  config.layout = layout;
  return config;
}

Image pattern_image() {
  Image image;
  image.height = kSide;
  image.width = kSide;
  image.channels = 3;
  image.data.resize(kInFeatures);
  for (std::size_t i = 0; i < image.data.size(); ++i) {
    image.data[i] = static_cast<double>((i * 5) % 256) / 255.0;
  }
  return image;
}

// Closed-form scores for the spec applied to a preprocessed tensor; all
// arithmetic mirrors a float Gemm evaluated in double.
std::vector<double> expected_logits(const testing::LinearModelSpec& spec,
                                    const Tensor& tensor) {
  std::vector<double> logits(spec.out_features);
  for (int o = 0; o < spec.out_features; ++o) {
    double acc = spec.bias[o];
    for (int i = 0; i < kInFeatures; ++i) {
      acc += static_cast<double>(spec.weights[o * kInFeatures + i]) *
             static_cast<double>(tensor.data[i]);
    }
    logits[o] = acc;
  }
  return logits;
}

std::vector<double> softmax(std::vector<double> values) {
  double max_value = values[0];
  for (double v : values) max_value = std::max(max_value, v);
  double sum = 0.0;
  for (double& v : values) {
    v = std::exp(v - max_value);
    sum += v;
  }
  for (double& v : values) v /= sum;
  return values;
}

TEST(OnnxClassifierTest, LoadsModelAndCountsClasses) {
  testing::ScopedTempDir dir;
  const std::string path = write_model(dir, make_spec(false), "m.onnx");
  const OnnxClassifier classifier(path, identity_config(InputLayout::kChannelsFirst));
  EXPECT_EQ(classifier.num_classes(), kOutFeatures);
  EXPECT_EQ(classifier.identity(), path);
  EXPECT_EQ(classifier.digest().size(), 64u);
  ASSERT_NE(classifier.preprocess_config(), nullptr);
  EXPECT_EQ(classifier.preprocess_config()->crop_size, kSide);
}

TEST(OnnxClassifierTest, RawScoreModelGetsSoftmaxed) {
  testing::ScopedTempDir dir;
  const testing::LinearModelSpec spec = make_spec(false);
  const std::string path = write_model(dir, spec, "m.onnx");
  const PreprocessConfig config = identity_config(InputLayout::kChannelsFirst);
  const OnnxClassifier classifier(path, config);

  const Image image = pattern_image();
  const std::vector<double> expected =
      softmax(expected_logits(spec, preprocess(config, image)));
  const Prediction prediction = classifier.predict(image);
  ASSERT_EQ(prediction.scores.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(prediction.scores[i], expected[i], 1e-5) << "class " << i;
  }
}

TEST(OnnxClassifierTest, ProbabilityModelIsNotSoftmaxedTwice) {
  testing::ScopedTempDir dir;
  const testing::LinearModelSpec spec = make_spec(true);
  const std::string path = write_model(dir, spec, "m.onnx");
  const PreprocessConfig config = identity_config(InputLayout::kChannelsFirst);
  const OnnxClassifier classifier(path, config);

  const Image image = pattern_image();
  const std::vector<double> expected =
      softmax(expected_logits(spec, preprocess(config, image)));
  const Prediction prediction = classifier.predict(image);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(prediction.scores[i], expected[i], 1e-5) << "class " << i;
  }
}

TEST(OnnxClassifierTest, ChannelsLastLayout) {
  testing::ScopedTempDir dir;
  const testing::LinearModelSpec spec = make_spec(false, true);
  const std::string path = write_model(dir, spec, "m.onnx");
  const PreprocessConfig config = identity_config(InputLayout::kChannelsLast);
  const OnnxClassifier classifier(path, config);

  const Image image = pattern_image();
  const std::vector<double> expected =
      softmax(expected_logits(spec, preprocess(config, image)));
  const Prediction prediction = classifier.predict(image);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(prediction.scores[i], expected[i], 1e-5) << "class " << i;
  }
}

TEST(OnnxClassifierTest, PredictIsThreadSafe) {
  testing::ScopedTempDir dir;
  const std::string path = write_model(dir, make_spec(false), "m.onnx");
  const OnnxClassifier classifier(path, identity_config(InputLayout::kChannelsFirst));

  std::vector<Image> images;
  for (int i = 0; i < 16; ++i) {
    images.push_back(uniform_image(kSide, kSide, 3, i / 16.0));
  }
  std::vector<Prediction> serial;
  serial.reserve(images.size());
  for (const Image& image : images) serial.push_back(classifier.predict(image));

  std::vector<std::vector<Prediction>> parallel(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < images.size(); ++i) {
        parallel[t].push_back(classifier.predict(images[i]));
      }
    });
  }
  for (std::thread& thread : threads) thread.join();
  for (const auto& results : parallel) {
    ASSERT_EQ(results.size(), serial.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
      EXPECT_EQ(results[i].scores, serial[i].scores);
      EXPECT_EQ(results[i].ranking, serial[i].ranking);
    }
  }
}

TEST(OnnxClassifierTest, MissingFileIsConfigError) {
  EXPECT_THROW(
      OnnxClassifier("/nonexistent/model.onnx",
                     identity_config(InputLayout::kChannelsFirst)),
      ConfigError);
}

TEST(OnnxClassifierTest, MalformedFileIsConfigError) {
  testing::ScopedTempDir dir;
  const std::string path = dir.file("garbage.onnx");
  testing::write_binary_file(path, "this is not a model");
  EXPECT_THROW(
      OnnxClassifier(path, identity_config(InputLayout::kChannelsFirst)),
      ConfigError);
}

TEST(OpenClassifierTest, SyntheticSpecs) {
  EXPECT_EQ(open_classifier("synthetic:brightness", nullptr)->num_classes(), 2);
  EXPECT_EQ(
      open_classifier("synthetic:brightness-sigmoid:4", nullptr)->identity(),
      "synthetic:brightness-sigmoid:4");
  EXPECT_EQ(open_classifier("synthetic:constant:7:3", nullptr)->num_classes(),
            7);
  EXPECT_THROW(open_classifier("synthetic:unknown", nullptr), ConfigError);
  EXPECT_THROW(open_classifier("synthetic:brightness-sigmoid:-1", nullptr),
               ConfigError);
  EXPECT_THROW(open_classifier("synthetic:constant:bad", nullptr),
               ConfigError);
}

TEST(OpenClassifierTest, ModelFileNeedsPreprocessConfig) {
  EXPECT_THROW(open_classifier("model.onnx", nullptr), ConfigError);
}

TEST(OpenClassifierTest, OpensOnnxFiles) {
  testing::ScopedTempDir dir;
  const std::string path = write_model(dir, make_spec(false), "m.onnx");
  const PreprocessConfig config = identity_config(InputLayout::kChannelsFirst);
  const auto classifier = open_classifier(path, &config);
  EXPECT_EQ(classifier->num_classes(), kOutFeatures);
}

}  // namespace
}  // namespace solbench
