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

#ifndef SCOOT_EVAL_JUDGMENT_HPP_
#define SCOOT_EVAL_JUDGMENT_HPP_

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "scoot/error.hpp"
#include "scoot/eval/meta_measures.hpp"
#include "scoot/image.hpp"
#include "scoot/parallel.hpp"

namespace scoot::eval {

// One two-alternative forced-choice record: a viewer judged sketch s_q the
// closer of (s0, s1) to the reference.
struct Triplet {
  GrayImage reference;
  GrayImage s0;
  GrayImage s1;
  int q = 0;  // 0 or 1
};

struct JudgmentItem {
  double s0_score = std::numeric_limits<double>::quiet_NaN();
  double s1_score = std::numeric_limits<double>::quiet_NaN();
  double agreement = 0.0;  // 1, 0, or 0.5 on an exact score tie
};

struct JudgmentResult {
  double rate = std::numeric_limits<double>::quiet_NaN();
  std::vector<JudgmentItem> per_triplet;
};

// Agreement of the metric's forced choice (argmax of the two scores against
// the reference) with the recorded human choice, averaged over triplets.
// An exact score tie counts as half agreement.
inline JudgmentResult run_judgment(std::span<const Triplet> triplets,
                                   const MetricFn& metric, unsigned jobs = 1) {
  if (triplets.empty()) {
    throw InvalidParameter("run_judgment: need at least one triplet");
  }
  for (std::size_t i = 0; i < triplets.size(); ++i) {
    if (triplets[i].q != 0 && triplets[i].q != 1) {
      throw InvalidParameter("run_judgment: triplet " + std::to_string(i) +
                             " has q=" + std::to_string(triplets[i].q) +
                             ", expected 0 or 1");
    }
  }

  JudgmentResult result;
  result.per_triplet.resize(triplets.size());
  parallel_for(triplets.size(), jobs, [&](std::size_t i) {
    const Triplet& t = triplets[i];
    JudgmentItem& item = result.per_triplet[i];
    item.s0_score = metric(t.s0, t.reference);
    item.s1_score = metric(t.s1, t.reference);
    if (item.s0_score == item.s1_score) {
      item.agreement = 0.5;
    } else {
      const int choice = item.s1_score > item.s0_score ? 1 : 0;
      item.agreement = choice == t.q ? 1.0 : 0.0;
    }
  });

  double sum = 0.0;
  for (const JudgmentItem& item : result.per_triplet) sum += item.agreement;
  result.rate = sum / static_cast<double>(triplets.size());
  return result;
}

}  // namespace scoot::eval

#endif  // SCOOT_EVAL_JUDGMENT_HPP_
