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

#ifndef SCOOT_COOCCURRENCE_HPP_
#define SCOOT_COOCCURRENCE_HPP_

#include <numeric>
#include <string>
#include <vector>

#include "scoot/error.hpp"
#include "scoot/image.hpp"

namespace scoot {

// Co-occurrence matrix over tone grades. Cells hold pair frequencies: raw
// integral counts after accumulation, a unit-mass distribution after
// normalize(). Indices are 1-based grades to match the 1..N_l grade range.
class CoMatrix {
 public:
  explicit CoMatrix(int levels)
      : levels_(levels),
        cells_(static_cast<std::size_t>(levels) * levels, 0.0) {
    if (levels < 2) {
      throw InvalidParameter("CoMatrix: levels must be >= 2, got " +
                             std::to_string(levels));
    }
  }

  int levels() const { return levels_; }

  double at(int i, int j) const { return cells_[index(i, j)]; }
  double& at(int i, int j) { return cells_[index(i, j)]; }

  double total() const {
    return std::accumulate(cells_.begin(), cells_.end(), 0.0);
  }

  // True after normalize() found no mass to distribute. A degenerate matrix
  // stays all-zero and every statistic of it evaluates to 0.
  bool degenerate() const { return degenerate_; }

  const std::vector<double>& cells() const { return cells_; }

  friend bool operator==(const CoMatrix&, const CoMatrix&) = default;

 private:
  friend CoMatrix normalize(const CoMatrix& m);

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * levels_ + (j - 1);
  }

  int levels_ = 0;
  std::vector<double> cells_;
  bool degenerate_ = false;
};

// Raw pair counts of grade co-occurrence at offset d. Pixel (x, y)
// contributes when its partner (x + dx, y + dy) lies inside the image;
// out-of-bounds partners are skipped, no padding. With `symmetric` the
// transposed cell is incremented as well, which makes opposite offsets
// produce identical matrices.
inline CoMatrix co_occurrence(const QuantizedImage& q, Direction d,
                              bool symmetric = true) {
  if (d.dx == 0 && d.dy == 0) {
    throw InvalidParameter("co_occurrence: offset must be non-zero");
  }
  CoMatrix m(q.levels());
  const int w = q.width();
  const int h = q.height();
  for (int y = 0; y < h; ++y) {
    const int py = y + d.dy;
    if (py < 0 || py >= h) continue;
    for (int x = 0; x < w; ++x) {
      const int px = x + d.dx;
      if (px < 0 || px >= w) continue;
      const int a = q.grade(x, y);
      const int b = q.grade(px, py);
      m.at(a, b) += 1.0;
      if (symmetric) m.at(b, a) += 1.0;
    }
  }
  return m;
}

// Scales the matrix to unit mass. A matrix with no counted pairs has no
// distribution to speak of: it is returned unchanged with the degenerate
// flag set.
inline CoMatrix normalize(const CoMatrix& m) {
  CoMatrix out = m;
  const double total = m.total();
  if (total == 0.0) {
    out.degenerate_ = true;
    return out;
  }
  for (double& c : out.cells_) c /= total;
  return out;
}

}  // namespace scoot

#endif  // SCOOT_COOCCURRENCE_HPP_
