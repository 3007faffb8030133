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

#ifndef SCOOT_EVAL_META_MEASURES_HPP_
#define SCOOT_EVAL_META_MEASURES_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scoot/error.hpp"
#include "scoot/eval/spearman.hpp"
#include "scoot/image.hpp"
#include "scoot/parallel.hpp"
#include "scoot/transforms.hpp"

namespace scoot::eval {

// A similarity metric under test: metric(candidate, reference) -> score,
// higher meaning more similar. Must be deterministic and safe to call from
// multiple threads.
using MetricFn =
    std::function<double(const GrayImage& candidate, const GrayImage& reference)>;

// A reference sketch bound to the competing synthetic sketches ranked
// against it. Needs at least two candidates with unique algorithm ids.
struct RankedSet {
  GrayImage reference;
  std::vector<std::pair<std::string, GrayImage>> candidates;
};

inline void validate_ranked_set(const RankedSet& set) {
  if (set.candidates.size() < 2) {
    throw InvalidParameter("ranked set needs at least two candidates, got " +
                           std::to_string(set.candidates.size()));
  }
  for (std::size_t i = 0; i < set.candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < set.candidates.size(); ++j) {
      if (set.candidates[i].first == set.candidates[j].first) {
        throw InvalidParameter("ranked set has duplicate algorithm id '" +
                               set.candidates[i].first + "'");
      }
    }
  }
}

// Per-set outcome of a rank-stability run. A set is degenerate when one of
// its two score lists has zero rank variance (all candidates tied); such
// sets carry no ranking signal and are excluded from the mean.
struct SetOutcome {
  double theta = std::numeric_limits<double>::quiet_NaN();
  bool degenerate = false;
};

struct MetaRunResult {
  // Mean theta over non-degenerate sets; NaN if every set was degenerate.
  double mean_theta = std::numeric_limits<double>::quiet_NaN();
  std::vector<SetOutcome> per_set;
  int degenerate_count = 0;
};

// Scores every candidate against the reference and against a perturbed copy
// of it, then measures per-set rank stability with theta = 1 - rho.
template <typename Perturb>
MetaRunResult run_rank_stability(std::span<const RankedSet> sets,
                                 const MetricFn& metric, Perturb&& perturb,
                                 unsigned jobs = 1) {
  for (const RankedSet& set : sets) validate_ranked_set(set);

  MetaRunResult result;
  result.per_set.resize(sets.size());
  parallel_for(sets.size(), jobs, [&](std::size_t i) {
    const RankedSet& set = sets[i];
    const GrayImage perturbed = perturb(set.reference);
    std::vector<double> before, after;
    before.reserve(set.candidates.size());
    after.reserve(set.candidates.size());
    for (const auto& [id, candidate] : set.candidates) {
      before.push_back(metric(candidate, set.reference));
      after.push_back(metric(candidate, perturbed));
    }
    try {
      result.per_set[i].theta = spearman_theta(before, after);
    } catch (const DegenerateRanking&) {
      result.per_set[i].degenerate = true;
    }
  });

  double sum = 0.0;
  int counted = 0;
  for (const SetOutcome& o : result.per_set) {
    if (o.degenerate) {
      ++result.degenerate_count;
    } else {
      sum += o.theta;
      ++counted;
    }
  }
  if (counted > 0) result.mean_theta = sum / counted;
  return result;
}

// Stability to slight re-sizing: the reference is downsized by
// `downsize_pixels` per axis (nearest-neighbor) and candidate rankings are
// compared before and after. Lower is better; 0 means unchanged rankings.
inline MetaRunResult run_mm1(std::span<const RankedSet> sets,
                             const MetricFn& metric, int downsize_pixels,
                             unsigned jobs = 1) {
  return run_rank_stability(
      sets, metric,
      [downsize_pixels](const GrayImage& ref) {
        return downsize_nn(ref, downsize_pixels);
      },
      jobs);
}

// Sensitivity to slight rotation: the reference is rotated counter-clockwise
// with white fill. Lower is better.
inline MetaRunResult run_mm2(std::span<const RankedSet> sets,
                             const MetricFn& metric, double degrees_ccw,
                             unsigned jobs = 1) {
  return run_rank_stability(
      sets, metric,
      [degrees_ccw](const GrayImage& ref) {
        return rotate(ref, degrees_ccw, 255);
      },
      jobs);
}

struct Mm3Item {
  double sota_mean = std::numeric_limits<double>::quiet_NaN();
  double light_score = std::numeric_limits<double>::quiet_NaN();
  bool success = false;
  bool skipped = false;  // reference had no outputs to average
};

struct Mm3Result {
  // Fraction of evaluated references whose mean output score strictly
  // exceeds the light-stroke score; NaN if every reference was skipped.
  double rate = std::numeric_limits<double>::quiet_NaN();
  std::vector<Mm3Item> per_reference;
  int skipped_count = 0;
};

// Content-capture check: for each reference, the mean metric score of the
// synthesis outputs must beat the score of an incomplete sketch made by
// whitening strokes darker than `stroke_threshold`.
inline Mm3Result run_mm3(std::span<const GrayImage> references,
                         std::span<const std::vector<GrayImage>> sota_outputs,
                         const MetricFn& metric, int stroke_threshold,
                         unsigned jobs = 1) {
  if (references.size() != sota_outputs.size()) {
    throw InvalidParameter(
        "run_mm3: one output list required per reference, got " +
        std::to_string(sota_outputs.size()) + " lists for " +
        std::to_string(references.size()) + " references");
  }

  Mm3Result result;
  result.per_reference.resize(references.size());
  parallel_for(references.size(), jobs, [&](std::size_t i) {
    Mm3Item& item = result.per_reference[i];
    const std::vector<GrayImage>& outputs = sota_outputs[i];
    if (outputs.empty()) {
      item.skipped = true;
      return;
    }
    double sum = 0.0;
    for (const GrayImage& out : outputs) sum += metric(out, references[i]);
    item.sota_mean = sum / static_cast<double>(outputs.size());
    const GrayImage light =
        threshold_strokes(references[i], stroke_threshold, StrokeKeep::kLight);
    item.light_score = metric(light, references[i]);
    item.success = item.sota_mean > item.light_score;
  });

  int evaluated = 0, successes = 0;
  for (const Mm3Item& item : result.per_reference) {
    if (item.skipped) {
      ++result.skipped_count;
    } else {
      ++evaluated;
      if (item.success) ++successes;
    }
  }
  if (evaluated > 0) {
    result.rate = static_cast<double>(successes) / evaluated;
  }
  return result;
}

// Aggregate view of a benchmark run; fields are present for whichever
// protocols actually ran. Theta values lie in [0, 2], rates in [0, 1].
struct MetaResult {
  std::optional<double> mm1_theta;
  std::optional<double> mm2_theta;
  std::optional<double> mm3_rate;
  std::optional<double> jud_rate;
  std::int64_t degenerate_sets = 0;
  std::int64_t skipped_references = 0;

  friend bool operator==(const MetaResult&, const MetaResult&) = default;
};

}  // namespace scoot::eval

#endif  // SCOOT_EVAL_META_MEASURES_HPP_
