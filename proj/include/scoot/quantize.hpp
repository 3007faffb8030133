// Copyright 2026 The Scoot Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCOOT_QUANTIZE_HPP_
#define SCOOT_QUANTIZE_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "scoot/error.hpp"
#include "scoot/image.hpp"

namespace scoot {

// Tone quantization: uniform binning of [0, 255] into `levels` equal-width
// bins, grade(p) = floor(p * levels / 256) + 1. Grades run 1..levels.
// Levels beyond 256 are rejected: an 8-bit input cannot populate them.
inline QuantizedImage quantize(const GrayImage& img, int levels) {
  if (levels < 2) {
    throw InvalidParameter("quantize: levels must be >= 2, got " +
                           std::to_string(levels));
  }
  if (levels > 256) {
    throw InvalidParameter("quantize: levels must be <= 256 for 8-bit input");
  }
  std::vector<std::uint16_t> grades(img.pixels().size());
  for (std::size_t i = 0; i < grades.size(); ++i) {
    const int g = static_cast<int>(img.pixels()[i]) * levels / 256 + 1;
    grades[i] = static_cast<std::uint16_t>(std::clamp(g, 1, levels));
  }
  return QuantizedImage(img.width(), img.height(), levels, std::move(grades));
}

}  // namespace scoot

#endif  // SCOOT_QUANTIZE_HPP_
