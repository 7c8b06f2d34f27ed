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
#include <random>
#include <string_view>

namespace solbench {

/// Stable 64-bit stream seed for one sample: FNV-1a over the sample id
/// mixed with the master seed through splitmix64. Independent of platform
/// and of the order samples are processed in.
std::uint64_t sample_stream_seed(std::uint64_t master_seed,
                                 std::string_view sample_id);

/// Per-sample stream of uniform draws on [0, 1). Draw i is a pure function
/// of (master_seed, sample_id, i), so a longer run replays a shorter run's
/// prefix exactly.
class AlphaStream {
 public:
  AlphaStream(std::uint64_t master_seed, std::string_view sample_id)
      : rng_(sample_stream_seed(master_seed, sample_id)) {}

  double next() {
    // Top 53 bits of the generator output, scaled to [0, 1).
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace solbench
