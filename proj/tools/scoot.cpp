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

// Command-line front door for the Scoot metric and its benchmark harness.
//
// Exit codes: 0 success, 1 usage/configuration error, 2 data error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scoot/scoot.hpp"

namespace {

struct CommonOptions {
  int grid_k = 4;
  int levels = 6;
  std::string stats = "CE";
  std::string directions;  // empty = the default four orientations
  unsigned jobs = 0;       // 0 = SCOOT_JOBS env var, else serial
  std::string out;
  std::string format = "json";
};

std::vector<scoot::Direction> parse_directions(const std::string& text) {
  std::vector<scoot::Direction> dirs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string pair = text.substr(pos, end - pos);
    const std::size_t comma = pair.find(',');
    if (comma == std::string::npos) {
      throw scoot::InvalidParameter("direction '" + pair +
                                    "' is not a dx,dy pair");
    }
    try {
      std::size_t used_a = 0, used_b = 0;
      const int dx = std::stoi(pair.substr(0, comma), &used_a);
      const int dy = std::stoi(pair.substr(comma + 1), &used_b);
      if (used_a != comma || used_b != pair.size() - comma - 1) {
        throw std::invalid_argument("trailing characters");
      }
      dirs.push_back({dx, dy});
    } catch (const std::exception&) {
      throw scoot::InvalidParameter("direction '" + pair +
                                    "' is not a dx,dy pair");
    }
    pos = end + 1;
  }
  return dirs;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("trailing");
      values.push_back(v);
    } catch (const std::exception&) {
      throw scoot::InvalidParameter(std::string(what) + " list entry '" +
                                    item + "' is not an integer");
    }
    pos = end + 1;
  }
  return values;
}

scoot::ScootConfig build_config(const CommonOptions& o) {
  scoot::ScootConfig cfg;
  cfg.grid_k = o.grid_k;
  cfg.levels = o.levels;
  cfg.stats = scoot::parse_stats(o.stats);
  if (!o.directions.empty()) cfg.directions = parse_directions(o.directions);
  cfg.validate();
  return cfg;
}

unsigned resolve_jobs(const CommonOptions& o) {
  if (o.jobs > 0) return o.jobs;
  if (const char* env = std::getenv("SCOOT_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

scoot::eval::MetricFn make_metric(const scoot::ScootConfig& cfg) {
  return [cfg](const scoot::GrayImage& candidate,
               const scoot::GrayImage& reference) {
    return scoot::scoot_score(candidate, reference, cfg);
  };
}

void add_config_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--grid-k", o.grid_k, "Blocks per grid side")
      ->capture_default_str();
  cmd->add_option("--levels", o.levels, "Quantization grades (2..256)")
      ->capture_default_str();
  cmd->add_option("--stats", o.stats, "Statistic subset, letters from H, C, E")
      ->capture_default_str();
  cmd->add_option("--directions", o.directions,
                  "Probe offsets as dx,dy pairs joined with ';' "
                  "(default \"0,1;-1,1;-1,0;-1,-1\")");
}

void add_run_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--jobs,-j", o.jobs,
                  "Worker threads; falls back to the SCOOT_JOBS "
                  "environment variable, then to 1");
  cmd->add_option("--out,-o", o.out, "Write a report to this path");
  cmd->add_option("--format", o.format, "Report format: csv or json")
      ->capture_default_str();
}

void emit_report(const scoot::io::ScoreReport& report, const CommonOptions& o,
                 scoot::io::ReportFormat format) {
  if (!o.out.empty()) scoot::io::write_report(report, o.out, format);
}

std::string rate_text(double v) { return scoot::io::format_sig(v); }

int cmd_score(const std::string& x_path, const std::string& y_path,
              const CommonOptions& o) {
  const scoot::ScootConfig cfg = build_config(o);
  const scoot::GrayImage x = scoot::io::load_image(x_path);
  const scoot::GrayImage y = scoot::io::load_image(y_path);
  std::printf("%.6f\n", scoot::scoot_score(x, y, cfg));
  return 0;
}

int cmd_batch(const std::string& manifest_path, const CommonOptions& o) {
  const scoot::ScootConfig cfg = build_config(o);
  const scoot::io::ReportFormat format = scoot::io::parse_format(o.format);
  const unsigned jobs = resolve_jobs(o);

  const scoot::io::RankedManifest manifest =
      scoot::io::load_ranked_manifest(manifest_path);
  const scoot::eval::MetricFn metric = make_metric(cfg);

  struct Pair {
    std::size_t entry;
    std::size_t candidate;
  };
  std::vector<Pair> pairs;
  for (std::size_t e = 0; e < manifest.entries.size(); ++e) {
    for (std::size_t c = 0; c < manifest.entries[e].candidates.size(); ++c) {
      pairs.push_back({e, c});
    }
  }
  std::vector<double> scores(pairs.size());
  scoot::parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    const auto& entry = manifest.entries[pairs[i].entry];
    scores[i] =
        metric(entry.candidates[pairs[i].candidate].image, entry.reference);
  });

  scoot::io::ScoreReport report;
  report.command = "batch";
  report.config = cfg;
  double sum = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& entry = manifest.entries[pairs[i].entry];
    const auto& cand = entry.candidates[pairs[i].candidate];
    report.rows.push_back(
        {{{"index", static_cast<std::int64_t>(i)},
          {"reference", entry.reference_path},
          {"algorithm", cand.algorithm},
          {"path", cand.path},
          {"score", scores[i]}}});
    sum += scores[i];
  }
  emit_report(report, o, format);
  const double mean = pairs.empty() ? 0.0 : sum / pairs.size();
  std::cout << "batch mean score = " << rate_text(mean) << " ("
            << pairs.size() << " pairs)\n";
  return 0;
}

int run_rank_meta(const std::string& manifest_path, const CommonOptions& o,
                  bool is_mm1, int downsize_px, double rotate_deg) {
  const scoot::ScootConfig cfg = build_config(o);
  const scoot::io::ReportFormat format = scoot::io::parse_format(o.format);
  const unsigned jobs = resolve_jobs(o);

  const scoot::io::RankedManifest manifest =
      scoot::io::load_ranked_manifest(manifest_path);
  const std::vector<scoot::eval::RankedSet> sets =
      scoot::io::to_ranked_sets(manifest);
  const scoot::eval::MetricFn metric = make_metric(cfg);

  const scoot::eval::MetaRunResult result =
      is_mm1 ? scoot::eval::run_mm1(sets, metric, downsize_px, jobs)
             : scoot::eval::run_mm2(sets, metric, rotate_deg, jobs);

  scoot::io::ScoreReport report;
  report.command = is_mm1 ? "mm1" : "mm2";
  report.config = cfg;
  if (is_mm1) {
    report.downsize_px = downsize_px;
    report.aggregate.mm1_theta = result.mean_theta;
  } else {
    report.rotate_deg = rotate_deg;
    report.aggregate.mm2_theta = result.mean_theta;
  }
  report.aggregate.degenerate_sets = result.degenerate_count;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const scoot::eval::SetOutcome& outcome = result.per_set[i];
    report.rows.push_back(
        {{{"index", static_cast<std::int64_t>(i)},
          {"reference", manifest.entries[i].reference_path},
          {"theta", outcome.theta},
          {"degenerate", static_cast<std::int64_t>(outcome.degenerate)},
          {"candidates",
           static_cast<std::int64_t>(sets[i].candidates.size())}}});
  }
  emit_report(report, o, format);
  std::cout << report.command << " theta = " << rate_text(result.mean_theta)
            << " (" << sets.size() << " sets, " << result.degenerate_count
            << " degenerate)\n";
  return 0;
}

int cmd_mm3(const std::string& manifest_path, const CommonOptions& o,
            int stroke_threshold) {
  const scoot::ScootConfig cfg = build_config(o);
  const scoot::io::ReportFormat format = scoot::io::parse_format(o.format);
  const unsigned jobs = resolve_jobs(o);

  const scoot::io::RankedManifest manifest =
      scoot::io::load_ranked_manifest(manifest_path);
  const std::vector<scoot::GrayImage> references =
      scoot::io::mm3_references(manifest);
  const std::vector<std::vector<scoot::GrayImage>> outputs =
      scoot::io::mm3_outputs(manifest);
  const scoot::eval::MetricFn metric = make_metric(cfg);

  const scoot::eval::Mm3Result result = scoot::eval::run_mm3(
      references, outputs, metric, stroke_threshold, jobs);

  scoot::io::ScoreReport report;
  report.command = "mm3";
  report.config = cfg;
  report.stroke_threshold = stroke_threshold;
  report.aggregate.mm3_rate = result.rate;
  report.aggregate.skipped_references = result.skipped_count;
  for (std::size_t i = 0; i < result.per_reference.size(); ++i) {
    const scoot::eval::Mm3Item& item = result.per_reference[i];
    report.rows.push_back(
        {{{"index", static_cast<std::int64_t>(i)},
          {"reference", manifest.entries[i].reference_path},
          {"sota_mean", item.sota_mean},
          {"light_score", item.light_score},
          {"success", static_cast<std::int64_t>(item.success)},
          {"skipped", static_cast<std::int64_t>(item.skipped)}}});
  }
  emit_report(report, o, format);
  std::cout << "mm3 rate = " << rate_text(result.rate) << " ("
            << references.size() << " references, " << result.skipped_count
            << " skipped)\n";
  return 0;
}

int cmd_judge(const std::string& manifest_path, const CommonOptions& o) {
  const scoot::ScootConfig cfg = build_config(o);
  const scoot::io::ReportFormat format = scoot::io::parse_format(o.format);
  const unsigned jobs = resolve_jobs(o);

  const scoot::io::TripletManifest manifest =
      scoot::io::load_triplet_manifest(manifest_path);
  const std::vector<scoot::eval::Triplet> triplets =
      scoot::io::to_triplets(manifest);
  const scoot::eval::MetricFn metric = make_metric(cfg);

  const scoot::eval::JudgmentResult result =
      scoot::eval::run_judgment(triplets, metric, jobs);

  scoot::io::ScoreReport report;
  report.command = "judge";
  report.config = cfg;
  report.aggregate.jud_rate = result.rate;
  for (std::size_t i = 0; i < result.per_triplet.size(); ++i) {
    const scoot::eval::JudgmentItem& item = result.per_triplet[i];
    report.rows.push_back(
        {{{"index", static_cast<std::int64_t>(i)},
          {"reference", manifest.entries[i].reference_path},
          {"s0_score", item.s0_score},
          {"s1_score", item.s1_score},
          {"q", static_cast<std::int64_t>(manifest.entries[i].q)},
          {"agreement", item.agreement}}});
  }
  emit_report(report, o, format);
  std::cout << "judgment agreement = " << rate_text(result.rate) << " ("
            << triplets.size() << " triplets)\n";
  return 0;
}

int cmd_sweep(const std::string& manifest_path, const CommonOptions& o,
              const std::string& k_list, const std::string& levels_list,
              const std::string& triplets_path, int downsize_px,
              double rotate_deg, int stroke_threshold) {
  const std::vector<int> ks = parse_int_list(k_list, "grid-k");
  const std::vector<int> ls = parse_int_list(levels_list, "levels");

  // Validate every combination's configuration before touching any data.
  std::vector<scoot::ScootConfig> combos;
  for (int k : ks) {
    for (int l : ls) {
      CommonOptions combo_opts = o;
      combo_opts.grid_k = k;
      combo_opts.levels = l;
      combos.push_back(build_config(combo_opts));
    }
  }
  const scoot::io::ReportFormat format = scoot::io::parse_format(o.format);
  const unsigned jobs = resolve_jobs(o);

  const scoot::io::RankedManifest manifest =
      scoot::io::load_ranked_manifest(manifest_path);
  const std::vector<scoot::eval::RankedSet> sets =
      scoot::io::to_ranked_sets(manifest);
  const std::vector<scoot::GrayImage> references =
      scoot::io::mm3_references(manifest);
  const std::vector<std::vector<scoot::GrayImage>> outputs =
      scoot::io::mm3_outputs(manifest);

  std::optional<scoot::io::TripletManifest> triplet_manifest;
  std::vector<scoot::eval::Triplet> triplets;
  if (!triplets_path.empty()) {
    triplet_manifest = scoot::io::load_triplet_manifest(triplets_path);
    triplets = scoot::io::to_triplets(*triplet_manifest);
  }

  // The grid k must fit the smallest image any protocol will score,
  // including the downsized reference.
  int min_other = std::numeric_limits<int>::max();
  int min_ref = std::numeric_limits<int>::max();
  for (const scoot::io::RankedEntry& e : manifest.entries) {
    min_ref = std::min({min_ref, e.reference.width(), e.reference.height()});
    for (const scoot::io::RankedCandidate& c : e.candidates) {
      min_other = std::min({min_other, c.image.width(), c.image.height()});
    }
  }
  for (const scoot::eval::Triplet& t : triplets) {
    for (const scoot::GrayImage* img : {&t.reference, &t.s0, &t.s1}) {
      min_other = std::min({min_other, img->width(), img->height()});
    }
  }
  const int max_k = std::min(min_other, min_ref - downsize_px);

  scoot::io::ScoreReport report;
  report.command = "sweep";
  report.config = build_config(o);
  report.downsize_px = downsize_px;
  report.rotate_deg = rotate_deg;
  report.stroke_threshold = stroke_threshold;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::size_t combo_index = 0;
  for (int k : ks) {
    for (int l : ls) {
      const scoot::ScootConfig& cfg = combos[combo_index++];
      scoot::io::ReportRow row;
      row.fields = {
          {"grid_k", static_cast<std::int64_t>(k)},
          {"levels", static_cast<std::int64_t>(l)},
          {"feature_length", static_cast<std::int64_t>(cfg.feature_length())},
      };
      if (k > max_k) {
        const std::string reason =
            "skipped: grid k=" + std::to_string(k) +
            " exceeds the smallest usable image dimension (" +
            std::to_string(max_k) + ")";
        row.fields.emplace_back("status", reason);
        row.fields.emplace_back("mm1_theta", nan);
        row.fields.emplace_back("mm2_theta", nan);
        row.fields.emplace_back("mm3_rate", nan);
        if (triplet_manifest) row.fields.emplace_back("jud_rate", nan);
        row.fields.emplace_back("degenerate_sets", std::int64_t{0});
        row.fields.emplace_back("skipped_references", std::int64_t{0});
        report.rows.push_back(std::move(row));
        std::cout << "k=" << k << " levels=" << l << " " << reason << "\n";
        continue;
      }
      const scoot::eval::MetricFn metric = make_metric(cfg);
      const scoot::eval::MetaRunResult mm1 =
          scoot::eval::run_mm1(sets, metric, downsize_px, jobs);
      const scoot::eval::MetaRunResult mm2 =
          scoot::eval::run_mm2(sets, metric, rotate_deg, jobs);
      const scoot::eval::Mm3Result mm3 = scoot::eval::run_mm3(
          references, outputs, metric, stroke_threshold, jobs);
      std::optional<double> jud;
      if (triplet_manifest) {
        jud = scoot::eval::run_judgment(triplets, metric, jobs).rate;
      }
      row.fields.emplace_back("status", std::string("ok"));
      row.fields.emplace_back("mm1_theta", mm1.mean_theta);
      row.fields.emplace_back("mm2_theta", mm2.mean_theta);
      row.fields.emplace_back("mm3_rate", mm3.rate);
      if (jud) row.fields.emplace_back("jud_rate", *jud);
      row.fields.emplace_back(
          "degenerate_sets",
          static_cast<std::int64_t>(mm1.degenerate_count +
                                    mm2.degenerate_count));
      row.fields.emplace_back("skipped_references",
                              static_cast<std::int64_t>(mm3.skipped_count));
      report.rows.push_back(std::move(row));

      std::cout << "k=" << k << " levels=" << l
                << " mm1=" << rate_text(mm1.mean_theta)
                << " mm2=" << rate_text(mm2.mean_theta)
                << " mm3=" << rate_text(mm3.rate);
      if (jud) std::cout << " jud=" << rate_text(*jud);
      std::cout << "\n";
    }
  }
  emit_report(report, o, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scoot: structure co-occurrence texture similarity for "
               "facial sketches"};
  app.set_version_flag("--version", scoot::tool_version_string());
  app.require_subcommand(1);

  CommonOptions opts;
  std::string x_path, y_path, manifest_path, triplets_path;
  int downsize_px = 5;
  double rotate_deg = 5.0;
  int stroke_threshold = 170;
  std::string k_list = "4", levels_list = "6";

  CLI::App* score = app.add_subcommand(
      "score", "Score one synthetic sketch against one reference");
  score->add_option("x", x_path, "Synthetic sketch image")->required();
  score->add_option("y", y_path, "Reference sketch image")->required();
  add_config_flags(score, opts);

  CLI::App* batch = app.add_subcommand(
      "batch", "Score every candidate in a ranked manifest");
  batch->add_option("manifest", manifest_path, "Ranked manifest (JSON)")
      ->required();
  add_config_flags(batch, opts);
  add_run_flags(batch, opts);

  CLI::App* mm1 = app.add_subcommand(
      "mm1", "Rank stability under slight reference downsizing");
  mm1->add_option("manifest", manifest_path, "Ranked manifest (JSON)")
      ->required();
  mm1->add_option("--downsize-px", downsize_px,
                  "Pixels removed from each reference axis")
      ->capture_default_str();
  add_config_flags(mm1, opts);
  add_run_flags(mm1, opts);

  CLI::App* mm2 = app.add_subcommand(
      "mm2", "Rank stability under slight reference rotation");
  mm2->add_option("manifest", manifest_path, "Ranked manifest (JSON)")
      ->required();
  mm2->add_option("--rotate-deg", rotate_deg,
                  "Counter-clockwise reference rotation in degrees")
      ->capture_default_str();
  add_config_flags(mm2, opts);
  add_run_flags(mm2, opts);

  CLI::App* mm3 = app.add_subcommand(
      "mm3", "Content capture: synthesis outputs vs light-stroke sketches");
  mm3->add_option("manifest", manifest_path, "Ranked manifest (JSON)")
      ->required();
  mm3->add_option("--stroke-threshold", stroke_threshold,
                  "Gray threshold separating dark from light strokes")
      ->capture_default_str();
  add_config_flags(mm3, opts);
  add_run_flags(mm3, opts);

  CLI::App* judge = app.add_subcommand(
      "judge", "Agreement with recorded 2AFC human choices");
  judge->add_option("manifest", manifest_path, "Triplet manifest (JSON)")
      ->required();
  add_config_flags(judge, opts);
  add_run_flags(judge, opts);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run the meta-measures over a (grid_k, levels) grid");
  sweep->add_option("manifest", manifest_path, "Ranked manifest (JSON)")
      ->required();
  sweep->add_option("--grid-k", k_list, "Comma-separated grid sizes")
      ->capture_default_str();
  sweep->add_option("--levels", levels_list, "Comma-separated grade counts")
      ->capture_default_str();
  sweep->add_option("--triplets", triplets_path,
                    "Optional triplet manifest; adds judgment agreement");
  sweep->add_option("--downsize-px", downsize_px, "MM1 downsizing")
      ->capture_default_str();
  sweep->add_option("--rotate-deg", rotate_deg, "MM2 rotation (degrees CCW)")
      ->capture_default_str();
  sweep->add_option("--stroke-threshold", stroke_threshold, "MM3 threshold")
      ->capture_default_str();
  sweep->add_option("--stats", opts.stats,
                    "Statistic subset, letters from H, C, E")
      ->capture_default_str();
  sweep->add_option("--directions", opts.directions,
                    "Probe offsets as dx,dy pairs joined with ';'");
  add_run_flags(sweep, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(score)) return cmd_score(x_path, y_path, opts);
    if (app.got_subcommand(batch)) return cmd_batch(manifest_path, opts);
    if (app.got_subcommand(mm1)) {
      return run_rank_meta(manifest_path, opts, /*is_mm1=*/true, downsize_px,
                           rotate_deg);
    }
    if (app.got_subcommand(mm2)) {
      return run_rank_meta(manifest_path, opts, /*is_mm1=*/false, downsize_px,
                           rotate_deg);
    }
    if (app.got_subcommand(mm3)) {
      return cmd_mm3(manifest_path, opts, stroke_threshold);
    }
    if (app.got_subcommand(judge)) return cmd_judge(manifest_path, opts);
    if (app.got_subcommand(sweep)) {
      return cmd_sweep(manifest_path, opts, k_list, levels_list,
                       triplets_path, downsize_px, rotate_deg,
                       stroke_threshold);
    }
  } catch (const scoot::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const scoot::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;  // unreachable: require_subcommand guarantees a dispatch
}
