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
#include <span>
#include <string>

#include "solbench/image.hpp"

namespace solbench {

/// Decodes an 8-bit PNG or JPEG buffer. Channel value u maps to u/255;
/// color images come out in R,G,B order. Throws DecodeError on malformed
/// input and on unsupported bit depths or channel layouts.
Image decode_image(std::span<const std::uint8_t> bytes);

/// Reads and decodes a file, naming it in every error message.
Image decode_image_file(const std::string& path);

}  // namespace solbench
