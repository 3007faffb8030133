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

#ifndef SCOOT_STATISTICS_HPP_
#define SCOOT_STATISTICS_HPP_

#include <cmath>
#include <cstdlib>

#include "scoot/cooccurrence.hpp"

namespace scoot {

// The three per-matrix texture statistics. Each expects a normalized
// (unit-mass) matrix; on a degenerate all-zero matrix each sums to 0.

enum class Statistic { kHomogeneity, kContrast, kEnergy };

// Mass weighted by closeness to the diagonal: sum m(i,j) / (1 + |i-j|).
// 1 when every counted pair shares a grade, smaller as mass moves off it.
inline double homogeneity(const CoMatrix& m) {
  double sum = 0.0;
  const int n = m.levels();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      sum += m.at(i, j) / (1.0 + std::abs(i - j));
    }
  }
  return sum;
}

// Expected squared grade difference: sum |i-j|^2 m(i,j). 0 exactly for a
// constant-tone input, at most (levels - 1)^2.
inline double contrast(const CoMatrix& m) {
  double sum = 0.0;
  const int n = m.levels();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double d = i - j;
      sum += d * d * m.at(i, j);
    }
  }
  return sum;
}

// Textural uniformity: sum m(i,j)^2, in [0, 1]. Reaches 1 iff all mass sits
// in a single cell, i.e. one grade pair dominates the patch.
inline double energy(const CoMatrix& m) {
  double sum = 0.0;
  for (double c : m.cells()) sum += c * c;
  return sum;
}

inline double evaluate(const CoMatrix& m, Statistic s) {
  switch (s) {
    case Statistic::kHomogeneity:
      return homogeneity(m);
    case Statistic::kContrast:
      return contrast(m);
    case Statistic::kEnergy:
      return energy(m);
  }
  return 0.0;  // unreachable
}

}  // namespace scoot

#endif  // SCOOT_STATISTICS_HPP_
