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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "scoot/eval/judgment.hpp"
#include "scoot/eval/meta_measures.hpp"
#include "scoot/eval/spearman.hpp"
#include "scoot/score.hpp"
#include "testutil.hpp"

namespace scoot::eval {
namespace {

TEST(SpearmanTheta, IdenticalOrderIsExactlyZero) {
  EXPECT_EQ(spearman_theta({1, 2, 3}, {10, 20, 30}), 0.0);
}

TEST(SpearmanTheta, ReversedOrderIsExactlyTwo) {
  EXPECT_EQ(spearman_theta({1, 2, 3}, {3, 2, 1}), 2.0);
}

TEST(SpearmanTheta, AdjacentSwapValue) {
  // Oracle-checked: swapping the middle pair of four gives theta = 0.2.
  const std::vector<double> a = {1, 2, 3, 4};
  const std::vector<double> b = {1, 3, 2, 4};
  EXPECT_NEAR(testutil::spearman_theta_oracle(a, b), 0.2, 1e-15);
  EXPECT_NEAR(spearman_theta(a, b), 0.2, 1e-15);
}

TEST(SpearmanTheta, SelfThetaIsExactlyZero) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(2 + rng() % 12);
    for (double& v : a) v = dist(rng);
    EXPECT_EQ(spearman_theta(a, a), 0.0);
  }
}

TEST(SpearmanTheta, MatchesIndependentOracleWithTies) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 19;
    std::vector<double> a(n), b(n);
    // small integer scores force frequent ties
    std::uniform_int_distribution<int> score(0, 6);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = score(rng);
      b[i] = score(rng);
    }
    auto distinct = [](const std::vector<double>& v) {
      for (double x : v) {
        if (x != v.front()) return true;
      }
      return false;
    };
    if (!distinct(a) || !distinct(b)) continue;
    EXPECT_NEAR(spearman_theta(a, b), testutil::spearman_theta_oracle(a, b),
                1e-12);
  }
}

TEST(SpearmanTheta, InvariantUnderMonotoneTransforms) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> a(2 + rng() % 10), b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = dist(rng);
      b[i] = dist(rng);
    }
    const double base = spearman_theta(a, b);
    std::vector<double> a2(a.size()), b2(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      a2[i] = std::exp(3.0 * a[i]) + 7.0;  // strictly increasing
      b2[i] = std::atan(b[i]);
    }
    EXPECT_EQ(average_ranks(a2), average_ranks(a));
    EXPECT_EQ(average_ranks(b2), average_ranks(b));
    EXPECT_EQ(spearman_theta(a2, b2), base);
  }
}

TEST(SpearmanTheta, ErrorsOnBadInput) {
  EXPECT_THROW(spearman_theta({1, 2}, {1, 2, 3}), InvalidParameter);
  EXPECT_THROW(spearman_theta({1}, {1}), InvalidParameter);
  EXPECT_THROW(spearman_theta({}, {}), InvalidParameter);
  EXPECT_THROW(spearman_theta({5, 5, 5}, {1, 2, 3}), DegenerateRanking);
  EXPECT_THROW(spearman_theta({1, 2, 3}, {4, 4, 4}), DegenerateRanking);
}

TEST(AverageRanks, TieGroupsShareTheMean) {
  const std::vector<double> v = {10, 20, 20, 30};
  const std::vector<double> expected = {1.0, 2.5, 2.5, 4.0};
  EXPECT_EQ(average_ranks(v), expected);
}

// ---------------------------------------------------------------------------

// Candidates carry a hidden "quality" in their first pixel so oracle metrics
// can rank them without caring about the reference.
std::vector<RankedSet> oracle_sets(int n_sets, int n_candidates) {
  std::vector<RankedSet> sets;
  for (int s = 0; s < n_sets; ++s) {
    RankedSet set;
    set.reference = GrayImage(16, 16, 128);
    for (int c = 0; c < n_candidates; ++c) {
      GrayImage img(16, 16, static_cast<std::uint8_t>(10 * c + s));
      set.candidates.emplace_back("alg" + std::to_string(c), img);
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

const MetricFn kFirstPixelMetric = [](const GrayImage& c, const GrayImage&) {
  return static_cast<double>(c.at(0, 0));
};

TEST(RunMm1, ReferenceInsensitiveMetricGivesZero) {
  const auto sets = oracle_sets(4, 5);
  const MetaRunResult r = run_mm1(sets, kFirstPixelMetric, 3);
  EXPECT_EQ(r.mean_theta, 0.0);
  EXPECT_EQ(r.degenerate_count, 0);
  for (const SetOutcome& o : r.per_set) EXPECT_EQ(o.theta, 0.0);
}

TEST(RunMm1, AdversarialMetricGivesTwo) {
  const auto sets = oracle_sets(4, 5);
  // Reverses its preference whenever the reference is not the original
  // 16x16 constant (i.e. after the downsizing perturbation).
  const MetricFn adversarial = [](const GrayImage& c, const GrayImage& ref) {
    const double v = static_cast<double>(c.at(0, 0));
    return ref.width() == 16 ? v : -v;
  };
  const MetaRunResult r = run_mm1(sets, adversarial, 3);
  EXPECT_EQ(r.mean_theta, 2.0);
}

TEST(RunMm1, DegenerateSetsAreExcludedAndCounted) {
  auto sets = oracle_sets(3, 4);
  const MetricFn constant = [](const GrayImage&, const GrayImage&) {
    return 0.5;
  };
  const MetaRunResult r = run_mm1(sets, constant, 2);
  EXPECT_EQ(r.degenerate_count, 3);
  EXPECT_TRUE(std::isnan(r.mean_theta));
  for (const SetOutcome& o : r.per_set) EXPECT_TRUE(o.degenerate);
}

TEST(RunMm1, ZeroPixelDownsizeGivesExactZeroForScoot) {
  const auto sets = testutil::make_fixture_sets(3, 1001, 48, 48);
  const MetricFn metric = [](const GrayImage& c, const GrayImage& r) {
    return scoot_score(c, r);
  };
  const MetaRunResult r = run_mm1(sets, metric, 0);
  EXPECT_EQ(r.degenerate_count, 0);
  EXPECT_EQ(r.mean_theta, 0.0);
}

TEST(RunMm1, RejectsMalformedSets) {
  std::vector<RankedSet> sets(1);
  sets[0].reference = GrayImage(8, 8, 1);
  sets[0].candidates.emplace_back("only", GrayImage(8, 8, 2));
  EXPECT_THROW(run_mm1(sets, kFirstPixelMetric, 1), InvalidParameter);

  sets[0].candidates.emplace_back("only", GrayImage(8, 8, 3));  // duplicate id
  EXPECT_THROW(run_mm1(sets, kFirstPixelMetric, 1), InvalidParameter);
}

TEST(RunMm2, OrderPreservingAndReversingOracles) {
  const auto sets = oracle_sets(4, 5);
  EXPECT_EQ(run_mm2(sets, kFirstPixelMetric, 5.0).mean_theta, 0.0);

  const MetricFn adversarial = [](const GrayImage& c, const GrayImage& ref) {
    // The perturbed reference is rotated with white fill; the original is a
    // constant 128, so any 255 in a corner marks the perturbed copy.
    const double v = static_cast<double>(c.at(0, 0));
    return ref.at(0, 0) == 128 ? v : -v;
  };
  EXPECT_EQ(run_mm2(sets, adversarial, 10.0).mean_theta, 2.0);
}

TEST(RunMm2, ZeroDegreesGivesExactZeroForScoot) {
  const auto sets = testutil::make_fixture_sets(3, 1002, 48, 48);
  const MetricFn metric = [](const GrayImage& c, const GrayImage& r) {
    return scoot_score(c, r);
  };
  const MetaRunResult r = run_mm2(sets, metric, 0.0);
  EXPECT_EQ(r.degenerate_count, 0);
  EXPECT_EQ(r.mean_theta, 0.0);
}

TEST(RunMm3, MetricPreferringSotaGivesFullRate) {
  // References are mid-gray; their light-stroke versions are all white.
  std::vector<GrayImage> refs(4, GrayImage(12, 12, 100));
  std::vector<std::vector<GrayImage>> outputs(4);
  for (auto& list : outputs) list.assign(3, GrayImage(12, 12, 50));
  const MetricFn metric = [](const GrayImage& c, const GrayImage&) {
    return c.at(0, 0) == 255 ? 0.0 : 1.0;
  };
  const Mm3Result r = run_mm3(refs, outputs, metric, 170);
  EXPECT_EQ(r.rate, 1.0);
  EXPECT_EQ(r.skipped_count, 0);
  for (const Mm3Item& item : r.per_reference) {
    EXPECT_TRUE(item.success);
    EXPECT_EQ(item.sota_mean, 1.0);
    EXPECT_EQ(item.light_score, 0.0);
  }
}

TEST(RunMm3, ConstantMetricFailsStrictComparison) {
  std::vector<GrayImage> refs(3, GrayImage(12, 12, 100));
  std::vector<std::vector<GrayImage>> outputs(3);
  for (auto& list : outputs) list.assign(2, GrayImage(12, 12, 50));
  const MetricFn constant = [](const GrayImage&, const GrayImage&) {
    return 0.7;
  };
  const Mm3Result r = run_mm3(refs, outputs, constant, 170);
  EXPECT_EQ(r.rate, 0.0);
}

TEST(RunMm3, EmptyOutputListsAreSkipped) {
  std::vector<GrayImage> refs(3, GrayImage(12, 12, 100));
  std::vector<std::vector<GrayImage>> outputs(3);
  outputs[0].assign(2, GrayImage(12, 12, 50));
  outputs[2].assign(1, GrayImage(12, 12, 60));
  const MetricFn metric = [](const GrayImage& c, const GrayImage&) {
    return c.at(0, 0) == 255 ? 0.0 : 1.0;
  };
  const Mm3Result r = run_mm3(refs, outputs, metric, 170);
  EXPECT_EQ(r.skipped_count, 1);
  EXPECT_TRUE(r.per_reference[1].skipped);
  EXPECT_EQ(r.rate, 1.0);  // over the two evaluated references
}

TEST(RunMm3, MismatchedListsThrow) {
  std::vector<GrayImage> refs(2, GrayImage(8, 8, 0));
  std::vector<std::vector<GrayImage>> outputs(3);
  EXPECT_THROW(run_mm3(refs, outputs, kFirstPixelMetric, 170),
               InvalidParameter);
}

// ---------------------------------------------------------------------------

std::vector<Triplet> echo_triplets(int n, unsigned seed) {
  // s_q is pixel-identical to the reference; the other is corrupted.
  std::mt19937 rng(seed);
  std::vector<Triplet> triplets;
  for (int i = 0; i < n; ++i) {
    Triplet t;
    t.reference = testutil::synth_sketch(rng, 32, 32);
    t.q = static_cast<int>(rng() % 2);
    const GrayImage corrupted = testutil::add_noise(t.reference, rng, 0.6, 120);
    t.s0 = t.q == 0 ? t.reference : corrupted;
    t.s1 = t.q == 1 ? t.reference : corrupted;
    triplets.push_back(std::move(t));
  }
  return triplets;
}

double pixel_distance(const GrayImage& a, const GrayImage& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) {
    sum += std::abs(a.pixels()[i] - b.pixels()[i]);
  }
  return sum;
}

TEST(RunJudgment, MetricPickingHumanChoiceScoresOne) {
  const auto triplets = echo_triplets(12, 77);
  const MetricFn metric = [](const GrayImage& c, const GrayImage& r) {
    return -pixel_distance(c, r);
  };
  EXPECT_EQ(run_judgment(triplets, metric).rate, 1.0);
}

TEST(RunJudgment, MetricPickingOppositeScoresZero) {
  const auto triplets = echo_triplets(12, 78);
  const MetricFn metric = [](const GrayImage& c, const GrayImage& r) {
    return pixel_distance(c, r);
  };
  EXPECT_EQ(run_judgment(triplets, metric).rate, 0.0);
}

TEST(RunJudgment, ExactTieCountsHalf) {
  Triplet t;
  t.reference = GrayImage(8, 8, 100);
  t.s0 = GrayImage(8, 8, 30);
  t.s1 = t.s0;
  t.q = 0;
  const std::vector<Triplet> triplets = {t};
  const MetricFn metric = [](const GrayImage& c, const GrayImage& r) {
    return -pixel_distance(c, r);
  };
  EXPECT_EQ(run_judgment(triplets, metric).rate, 0.5);
}

TEST(RunJudgment, InvariantUnderMonotoneScoreTransforms) {
  const auto triplets = echo_triplets(10, 79);
  const MetricFn base = [](const GrayImage& c, const GrayImage& r) {
    return -pixel_distance(c, r);
  };
  const MetricFn transformed = [&base](const GrayImage& c, const GrayImage& r) {
    return std::tanh(base(c, r) / 1000.0) * 5.0 + 2.0;
  };
  EXPECT_EQ(run_judgment(triplets, base).rate,
            run_judgment(triplets, transformed).rate);
}

TEST(RunJudgment, RejectsBadInput) {
  EXPECT_THROW(run_judgment({}, kFirstPixelMetric), InvalidParameter);
  Triplet t;
  t.reference = GrayImage(8, 8, 0);
  t.s0 = GrayImage(8, 8, 1);
  t.s1 = GrayImage(8, 8, 2);
  t.q = 2;
  const std::vector<Triplet> triplets = {t};
  EXPECT_THROW(run_judgment(triplets, kFirstPixelMetric), InvalidParameter);
}

// ---------------------------------------------------------------------------

TEST(Harness, AggregatesStayInDeclaredRanges) {
  const auto sets = testutil::make_fixture_sets(4, 555, 48, 48);
  const MetricFn metric = [](const GrayImage& c, const GrayImage& r) {
    return scoot_score(c, r);
  };
  const MetaRunResult mm1 = run_mm1(sets, metric, 2);
  EXPECT_GE(mm1.mean_theta, 0.0);
  EXPECT_LE(mm1.mean_theta, 2.0);
  const MetaRunResult mm2 = run_mm2(sets, metric, 5.0);
  EXPECT_GE(mm2.mean_theta, 0.0);
  EXPECT_LE(mm2.mean_theta, 2.0);

  std::vector<GrayImage> refs;
  std::vector<std::vector<GrayImage>> outputs;
  for (const RankedSet& s : sets) {
    refs.push_back(s.reference);
    std::vector<GrayImage> list;
    for (const auto& [id, img] : s.candidates) list.push_back(img);
    outputs.push_back(std::move(list));
  }
  const Mm3Result mm3 = run_mm3(refs, outputs, metric, 170);
  EXPECT_GE(mm3.rate, 0.0);
  EXPECT_LE(mm3.rate, 1.0);

  const auto triplets = echo_triplets(6, 556);
  const JudgmentResult jud = run_judgment(triplets, metric);
  EXPECT_GE(jud.rate, 0.0);
  EXPECT_LE(jud.rate, 1.0);
}

TEST(Harness, ParallelMatchesSerialBitwise) {
  const auto sets = testutil::make_fixture_sets(6, 557, 48, 48);
  const MetricFn metric = [](const GrayImage& c, const GrayImage& r) {
    return scoot_score(c, r);
  };
  const MetaRunResult serial = run_mm1(sets, metric, 3, 1);
  const MetaRunResult parallel = run_mm1(sets, metric, 3, 4);
  EXPECT_EQ(serial.mean_theta, parallel.mean_theta);
  ASSERT_EQ(serial.per_set.size(), parallel.per_set.size());
  for (std::size_t i = 0; i < serial.per_set.size(); ++i) {
    EXPECT_EQ(serial.per_set[i].theta, parallel.per_set[i].theta);
    EXPECT_EQ(serial.per_set[i].degenerate, parallel.per_set[i].degenerate);
  }

  const auto triplets = echo_triplets(9, 558);
  EXPECT_EQ(run_judgment(triplets, metric, 1).rate,
            run_judgment(triplets, metric, 4).rate);
}

}  // namespace
}  // namespace scoot::eval
