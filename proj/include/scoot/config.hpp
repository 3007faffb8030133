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

#ifndef SCOOT_CONFIG_HPP_
#define SCOOT_CONFIG_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scoot/error.hpp"
#include "scoot/image.hpp"
#include "scoot/statistics.hpp"

namespace scoot {

// Default probe offsets: down, down-left, left, up-left. With symmetric
// accumulation these four cover all eight unit-distance neighbors.
inline std::vector<Direction> default_directions() {
  return {{0, 1}, {-1, 1}, {-1, 0}, {-1, -1}};
}

// All eight unit-distance neighbor offsets.
inline std::vector<Direction> all_unit_directions() {
  return {{0, 1},  {-1, 1}, {-1, 0}, {-1, -1},
          {0, -1}, {1, -1}, {1, 0},  {1, 1}};
}

// Parameters of the metric. Defaults are the recommended operating point:
// a 4x4 block grid, 6 tone grades, four probe orientations, and the
// contrast+energy statistic pair.
struct ScootConfig {
  int grid_k = 4;
  int levels = 6;
  std::vector<Direction> directions = default_directions();
  std::vector<Statistic> stats{Statistic::kContrast, Statistic::kEnergy};

  // Throws InvalidParameter on any violated field constraint.
  void validate() const {
    if (grid_k < 1) {
      throw InvalidParameter("config: grid_k must be >= 1, got " +
                             std::to_string(grid_k));
    }
    if (levels < 2 || levels > 256) {
      throw InvalidParameter("config: levels must be in 2..256, got " +
                             std::to_string(levels));
    }
    if (directions.empty()) {
      throw InvalidParameter("config: need at least one direction");
    }
    for (const Direction& d : directions) {
      if (d.dx == 0 && d.dy == 0) {
        throw InvalidParameter("config: direction (0, 0) is not a valid offset");
      }
    }
    if (stats.empty()) {
      throw InvalidParameter("config: need at least one statistic");
    }
    for (std::size_t i = 0; i < stats.size(); ++i) {
      for (std::size_t j = i + 1; j < stats.size(); ++j) {
        if (stats[i] == stats[j]) {
          throw InvalidParameter("config: duplicate statistic in subset");
        }
      }
    }
  }

  // The configured subset in the pinned homogeneity, contrast, energy order.
  // Feature layouts depend only on the subset, never on the order the caller
  // listed it in, so serialized vectors stay comparable across runs.
  std::vector<Statistic> canonical_stats() const {
    static constexpr std::array<Statistic, 3> kOrder = {
        Statistic::kHomogeneity, Statistic::kContrast, Statistic::kEnergy};
    std::vector<Statistic> out;
    for (Statistic s : kOrder) {
      for (Statistic have : stats) {
        if (have == s) {
          out.push_back(s);
          break;
        }
      }
    }
    return out;
  }

  // |stats| * k^2, the length of every feature vector under this config.
  std::size_t feature_length() const {
    return canonical_stats().size() * static_cast<std::size_t>(grid_k) *
           grid_k;
  }
};

// Parses a statistic subset from letters, e.g. "CE", "hec". Order in the
// string is irrelevant (the canonical order is pinned); duplicates are
// rejected.
inline std::vector<Statistic> parse_stats(std::string_view letters) {
  std::vector<Statistic> out;
  for (char c : letters) {
    Statistic s;
    switch (c) {
      case 'H':
      case 'h':
        s = Statistic::kHomogeneity;
        break;
      case 'C':
      case 'c':
        s = Statistic::kContrast;
        break;
      case 'E':
      case 'e':
        s = Statistic::kEnergy;
        break;
      default:
        throw InvalidParameter(std::string("unknown statistic letter '") + c +
                               "' (expected H, C or E)");
    }
    for (Statistic have : out) {
      if (have == s) {
        throw InvalidParameter(std::string("duplicate statistic letter '") +
                               c + "'");
      }
    }
    out.push_back(s);
  }
  if (out.empty()) {
    throw InvalidParameter("statistic subset must not be empty");
  }
  return out;
}

// Canonical letters for a statistic subset, e.g. "CE".
inline std::string stats_letters(const std::vector<Statistic>& stats) {
  ScootConfig tmp;
  tmp.stats = stats;
  std::string out;
  for (Statistic s : tmp.canonical_stats()) {
    switch (s) {
      case Statistic::kHomogeneity:
        out += 'H';
        break;
      case Statistic::kContrast:
        out += 'C';
        break;
      case Statistic::kEnergy:
        out += 'E';
        break;
    }
  }
  return out;
}

}  // namespace scoot

#endif  // SCOOT_CONFIG_HPP_
