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

#ifndef SCOOT_FEATURES_HPP_
#define SCOOT_FEATURES_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "scoot/config.hpp"
#include "scoot/cooccurrence.hpp"
#include "scoot/error.hpp"
#include "scoot/image.hpp"
#include "scoot/statistics.hpp"

namespace scoot {

using FeatureVector = std::vector<double>;

// Cuts q into a k x k grid, returned in row-major block order. Block (r, c)
// spans rows [r*H/k, (r+1)*H/k) and columns [c*W/k, (c+1)*W/k) with integer
// floor boundaries: the blocks tile the image exactly and their sizes differ
// by at most one pixel.
inline std::vector<QuantizedImage> split_blocks(const QuantizedImage& q,
                                                int k) {
  if (k < 1) {
    throw InvalidParameter("split_blocks: k must be >= 1, got " +
                           std::to_string(k));
  }
  const int w = q.width();
  const int h = q.height();
  if (w < k || h < k) {
    throw InvalidParameter("split_blocks: image " + std::to_string(w) + "x" +
                           std::to_string(h) + " is smaller than the " +
                           std::to_string(k) + "x" + std::to_string(k) +
                           " grid");
  }
  std::vector<QuantizedImage> blocks;
  blocks.reserve(static_cast<std::size_t>(k) * k);
  for (int r = 0; r < k; ++r) {
    const int y0 = static_cast<int>(static_cast<std::int64_t>(r) * h / k);
    const int y1 = static_cast<int>(static_cast<std::int64_t>(r + 1) * h / k);
    for (int c = 0; c < k; ++c) {
      const int x0 = static_cast<int>(static_cast<std::int64_t>(c) * w / k);
      const int x1 =
          static_cast<int>(static_cast<std::int64_t>(c + 1) * w / k);
      std::vector<std::uint16_t> grades;
      grades.reserve(static_cast<std::size_t>(x1 - x0) * (y1 - y0));
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          grades.push_back(q.grade(x, y));
        }
      }
      blocks.emplace_back(x1 - x0, y1 - y0, q.levels(), std::move(grades));
    }
  }
  return blocks;
}

namespace detail {

// Per-block statistics over a reused scratch matrix. Small matrices take a
// dense pass; when levels^2 dwarfs the block's pixel count (deep-quantization
// sweeps) the engine tracks touched cells instead, skipping the zeroing and
// scanning of a mostly-empty matrix. Both paths are bit-identical to
// evaluate(normalize(co_occurrence(block, d, true)), s): zero cells
// contribute exactly nothing to each statistic, nonzero cells are visited in
// the same row-major order as the dense loops, and the integral count total
// is exact under any summation order.
class BlockStatsEngine {
 public:
  explicit BlockStatsEngine(int levels)
      : levels_(levels),
        cells_(static_cast<std::size_t>(levels) * levels, 0.0) {}

  void append_stats(const QuantizedImage& block, Direction d,
                    const std::vector<Statistic>& stats, FeatureVector& out) {
    const std::size_t pixels =
        static_cast<std::size_t>(block.width()) * block.height();
    if (4 * pixels >= cells_.size()) {
      dense_stats(block, d, stats, out);
    } else {
      sparse_stats(block, d, stats, out);
    }
  }

 private:
  void dense_stats(const QuantizedImage& block, Direction d,
                   const std::vector<Statistic>& stats, FeatureVector& out) {
    accumulate(block, d, [this](std::size_t idx) { cells_[idx] += 1.0; });
    double total = 0.0;
    for (double c : cells_) total += c;
    if (total == 0.0) {  // no valid pairs: every statistic is 0
      out.insert(out.end(), stats.size(), 0.0);
      return;
    }
    const int n = levels_;
    for (Statistic s : stats) {
      double sum = 0.0;
      std::size_t idx = 0;
      switch (s) {
        case Statistic::kHomogeneity:
          for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j, ++idx) {
              sum += (cells_[idx] / total) / (1.0 + std::abs(i - j));
            }
          }
          break;
        case Statistic::kContrast:
          for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j, ++idx) {
              const double gap = i - j;
              sum += gap * gap * (cells_[idx] / total);
            }
          }
          break;
        case Statistic::kEnergy:
          for (double c : cells_) {
            const double v = c / total;
            sum += v * v;
          }
          break;
      }
      out.push_back(sum);
    }
    std::fill(cells_.begin(), cells_.end(), 0.0);
  }

  void sparse_stats(const QuantizedImage& block, Direction d,
                    const std::vector<Statistic>& stats, FeatureVector& out) {
    accumulate(block, d, [this](std::size_t idx) {
      if (cells_[idx] == 0.0) touched_.push_back(idx);
      cells_[idx] += 1.0;
    });
    if (touched_.empty()) {
      out.insert(out.end(), stats.size(), 0.0);
      return;
    }
    std::sort(touched_.begin(), touched_.end());
    double total = 0.0;
    for (std::size_t idx : touched_) total += cells_[idx];
    normalized_.clear();
    for (std::size_t idx : touched_) normalized_.push_back(cells_[idx] / total);

    for (Statistic s : stats) {
      double sum = 0.0;
      switch (s) {
        case Statistic::kHomogeneity:
          for (std::size_t t = 0; t < touched_.size(); ++t) {
            sum += normalized_[t] / (1.0 + grade_gap(touched_[t]));
          }
          break;
        case Statistic::kContrast:
          for (std::size_t t = 0; t < touched_.size(); ++t) {
            const double gap = grade_gap(touched_[t]);
            sum += gap * gap * normalized_[t];
          }
          break;
        case Statistic::kEnergy:
          for (double v : normalized_) sum += v * v;
          break;
      }
      out.push_back(sum);
    }
    for (std::size_t idx : touched_) cells_[idx] = 0.0;
    touched_.clear();
  }

  template <typename Bump>
  void accumulate(const QuantizedImage& block, Direction d, Bump&& bump) {
    const int w = block.width();
    const int h = block.height();
    for (int y = 0; y < h; ++y) {
      const int py = y + d.dy;
      if (py < 0 || py >= h) continue;
      for (int x = 0; x < w; ++x) {
        const int px = x + d.dx;
        if (px < 0 || px >= w) continue;
        const int a = block.grade(x, y);
        const int b = block.grade(px, py);
        bump(cell_index(a, b));
        bump(cell_index(b, a));
      }
    }
  }

  std::size_t cell_index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * levels_ + (j - 1);
  }

  double grade_gap(std::size_t idx) const {
    const int i = static_cast<int>(idx / levels_);
    const int j = static_cast<int>(idx % levels_);
    return std::abs(i - j);
  }

  int levels_;
  std::vector<double> cells_;
  std::vector<std::size_t> touched_;
  std::vector<double> normalized_;
};

inline FeatureVector blocks_feature_vector(
    const std::vector<QuantizedImage>& blocks,
    const std::vector<Statistic>& stats, Direction d,
    BlockStatsEngine& engine) {
  FeatureVector out;
  out.reserve(blocks.size() * stats.size());
  for (const QuantizedImage& block : blocks) {
    engine.append_stats(block, d, stats, out);
  }
  return out;
}

}  // namespace detail

// Per-block statistics at a single probe offset, concatenated block-major
// with the statistic index minor. Each block gets a symmetric co-occurrence
// matrix, normalized, then the configured statistics in canonical order.
// A block with no valid pixel pairs contributes 0 for every statistic.
inline FeatureVector feature_vector(const QuantizedImage& q,
                                    const ScootConfig& cfg, Direction d) {
  cfg.validate();
  detail::BlockStatsEngine engine(q.levels());
  return detail::blocks_feature_vector(split_blocks(q, cfg.grid_k),
                                       cfg.canonical_stats(), d, engine);
}

// Element-wise mean of feature_vector over cfg.directions. The image is cut
// into blocks once and every orientation is probed over the same cuts.
inline FeatureVector direction_average(const QuantizedImage& q,
                                       const ScootConfig& cfg) {
  cfg.validate();
  const std::vector<QuantizedImage> blocks = split_blocks(q, cfg.grid_k);
  const std::vector<Statistic> stats = cfg.canonical_stats();
  detail::BlockStatsEngine engine(q.levels());
  FeatureVector mean = detail::blocks_feature_vector(
      blocks, stats, cfg.directions.front(), engine);
  for (std::size_t i = 1; i < cfg.directions.size(); ++i) {
    const FeatureVector next =
        detail::blocks_feature_vector(blocks, stats, cfg.directions[i], engine);
    for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += next[j];
  }
  const double t = static_cast<double>(cfg.directions.size());
  for (double& v : mean) v /= t;
  return mean;
}

}  // namespace scoot

#endif  // SCOOT_FEATURES_HPP_
