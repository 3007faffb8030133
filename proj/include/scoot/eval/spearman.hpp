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

#ifndef SCOOT_EVAL_SPEARMAN_HPP_
#define SCOOT_EVAL_SPEARMAN_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "scoot/error.hpp"

namespace scoot::eval {

// 1-based ranks; tied values share the average of their rank range, the
// standard treatment that keeps rank sums exact under duplicates.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] < values[b];
                   });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = static_cast<double>(i + j + 2) / 2.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

// Rank-stability statistic theta = 1 - rho in [0, 2], where rho is
// Spearman's rank correlation between the two score lists: 0 for identical
// rankings, 2 for exactly reversed ones.
//
// Ranks are multiples of 1/2 with moderate magnitude, so all rank arithmetic
// below is exact in doubles; the two extreme cases are detected through the
// Cauchy-Schwarz equality |cov| = var and returned exactly.
inline double spearman_theta(const std::vector<double>& a,
                             const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw InvalidParameter("spearman_theta: score lists differ in length");
  }
  if (a.size() < 2) {
    throw InvalidParameter("spearman_theta: need at least two scores");
  }
  const std::vector<double> ra = average_ranks(a);
  const std::vector<double> rb = average_ranks(b);
  const double mean = static_cast<double>(a.size() + 1) / 2.0;

  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) {
    throw DegenerateRanking(
        "spearman_theta: all scores tied in one list; ranking undefined");
  }
  if (cov == var_a && cov == var_b) return 0.0;
  if (-cov == var_a && -cov == var_b) return 2.0;
  return 1.0 - cov / std::sqrt(var_a * var_b);
}

}  // namespace scoot::eval

#endif  // SCOOT_EVAL_SPEARMAN_HPP_
