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

#ifndef SCOOT_SCORE_HPP_
#define SCOOT_SCORE_HPP_

#include <cmath>
#include <string>

#include "scoot/config.hpp"
#include "scoot/error.hpp"
#include "scoot/features.hpp"
#include "scoot/image.hpp"
#include "scoot/quantize.hpp"
#include "scoot/transforms.hpp"

namespace scoot {

// Perceptual similarity of two sketches: 1 / (1 + ||psi_x - psi_y||_2) over
// the direction-averaged block feature vectors, in (0, 1]. Exactly 1 iff the
// feature vectors coincide; symmetric for same-size inputs. When the
// dimensions differ, x (the synthetic sketch) is resized to y's dimensions
// by nearest-neighbor before quantization.
inline double scoot_score(const GrayImage& x, const GrayImage& y,
                          const ScootConfig& cfg = {}) {
  cfg.validate();
  auto check_size = [&cfg](const GrayImage& img, const char* which) {
    if (img.width() < cfg.grid_k || img.height() < cfg.grid_k) {
      throw InvalidParameter(std::string("scoot_score: ") + which + " image " +
                             std::to_string(img.width()) + "x" +
                             std::to_string(img.height()) +
                             " is smaller than the grid k=" +
                             std::to_string(cfg.grid_k));
    }
  };
  check_size(x, "first");
  check_size(y, "second");

  const GrayImage* xp = &x;
  GrayImage resized;
  if (x.width() != y.width() || x.height() != y.height()) {
    resized = resize_nearest(x, y.width(), y.height());
    xp = &resized;
  }

  const FeatureVector fx = direction_average(quantize(*xp, cfg.levels), cfg);
  const FeatureVector fy = direction_average(quantize(y, cfg.levels), cfg);

  double sq = 0.0;
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const double d = fx[i] - fy[i];
    sq += d * d;
  }
  return 1.0 / (1.0 + std::sqrt(sq));
}

}  // namespace scoot

#endif  // SCOOT_SCORE_HPP_
