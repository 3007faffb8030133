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

#ifndef SCOOT_IO_REPORT_HPP_
#define SCOOT_IO_REPORT_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "scoot/config.hpp"
#include "scoot/error.hpp"
#include "scoot/eval/meta_measures.hpp"
#include "scoot/version.hpp"

namespace scoot::io {

// Reports are deterministic: stable key order, floating-point values
// rounded to 6 significant digits, atomic replace on write. Two runs over
// identical inputs and config produce byte-identical files.

using ReportValue = std::variant<std::string, std::int64_t, double>;

// Value equality with NaN considered equal to NaN: a degenerate theta is
// written as JSON null and must read back as the same value.
inline bool value_equal(const ReportValue& a, const ReportValue& b) {
  if (a.index() != b.index()) return false;
  if (const auto* da = std::get_if<double>(&a)) {
    const double db = std::get<double>(b);
    return (*da == db) || (std::isnan(*da) && std::isnan(db));
  }
  return a == b;
}

struct ReportRow {
  std::vector<std::pair<std::string, ReportValue>> fields;

  friend bool operator==(const ReportRow& a, const ReportRow& b) {
    if (a.fields.size() != b.fields.size()) return false;
    for (std::size_t i = 0; i < a.fields.size(); ++i) {
      if (a.fields[i].first != b.fields[i].first ||
          !value_equal(a.fields[i].second, b.fields[i].second)) {
        return false;
      }
    }
    return true;
  }
};

struct ScoreReport {
  std::string tool = tool_version_string();
  std::string command;
  ScootConfig config;
  std::optional<std::int64_t> downsize_px;
  std::optional<double> rotate_deg;
  std::optional<std::int64_t> stroke_threshold;
  eval::MetaResult aggregate;
  std::vector<ReportRow> rows;
};

inline bool operator==(const ScoreReport& a, const ScoreReport& b) {
  auto rate_equal = [](const std::optional<double>& x,
                       const std::optional<double>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return (*x == *y) || (std::isnan(*x) && std::isnan(*y));
  };
  return a.tool == b.tool && a.command == b.command &&
         a.config.grid_k == b.config.grid_k &&
         a.config.levels == b.config.levels &&
         a.config.directions == b.config.directions &&
         a.config.canonical_stats() == b.config.canonical_stats() &&
         a.downsize_px == b.downsize_px && a.rotate_deg == b.rotate_deg &&
         a.stroke_threshold == b.stroke_threshold &&
         rate_equal(a.aggregate.mm1_theta, b.aggregate.mm1_theta) &&
         rate_equal(a.aggregate.mm2_theta, b.aggregate.mm2_theta) &&
         rate_equal(a.aggregate.mm3_rate, b.aggregate.mm3_rate) &&
         rate_equal(a.aggregate.jud_rate, b.aggregate.jud_rate) &&
         a.aggregate.degenerate_sets == b.aggregate.degenerate_sets &&
         a.aggregate.skipped_references == b.aggregate.skipped_references &&
         a.rows == b.rows;
}

enum class ReportFormat { kCsv, kJson };

inline ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw InvalidParameter("unknown report format '" + name +
                         "' (expected csv or json)");
}

// 6 significant digits, the precision every report value is written with.
inline std::string format_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

namespace detail {

inline double round_sig(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_sig(v).c_str(), nullptr);
}

inline nlohmann::ordered_json value_to_json(const ReportValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  const double d = std::get<double>(v);
  if (std::isnan(d)) return nullptr;
  return round_sig(d);
}

inline ReportValue json_to_value(const nlohmann::ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (j.is_number()) return j.get<double>();
  throw ParseError("report: unsupported value type in row");
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string value_to_csv(const ReportValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return csv_escape(*s);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return format_sig(std::get<double>(v));
}

inline void write_text_atomic(const std::filesystem::path& path,
                              const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot write: " + tmp.string());
    }
    out << text;
    out.flush();
    if (!out) {
      std::error_code ignore;
      std::filesystem::remove(tmp, ignore);
      throw IoError("write failure: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    std::filesystem::remove(tmp, ignore);
    throw IoError("cannot move report into place: " + path.string() + ": " +
                  ec.message());
  }
}

inline nlohmann::ordered_json config_to_json(const ScootConfig& cfg) {
  nlohmann::ordered_json j;
  j["grid_k"] = cfg.grid_k;
  j["levels"] = cfg.levels;
  j["stats"] = stats_letters(cfg.stats);
  nlohmann::ordered_json dirs = nlohmann::ordered_json::array();
  for (const Direction& d : cfg.directions) {
    dirs.push_back(nlohmann::ordered_json::array({d.dx, d.dy}));
  }
  j["directions"] = std::move(dirs);
  return j;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const ScoreReport& report) {
  nlohmann::ordered_json j;
  j["tool"] = report.tool;
  j["command"] = report.command;
  j["config"] = detail::config_to_json(report.config);

  nlohmann::ordered_json protocol = nlohmann::ordered_json::object();
  if (report.downsize_px) protocol["downsize_px"] = *report.downsize_px;
  if (report.rotate_deg) {
    protocol["rotate_deg"] = detail::round_sig(*report.rotate_deg);
  }
  if (report.stroke_threshold) {
    protocol["stroke_threshold"] = *report.stroke_threshold;
  }
  j["protocol"] = std::move(protocol);

  nlohmann::ordered_json agg = nlohmann::ordered_json::object();
  auto put_rate = [&agg](const char* key, const std::optional<double>& v) {
    if (!v) return;
    if (std::isnan(*v)) {
      agg[key] = nullptr;
    } else {
      agg[key] = detail::round_sig(*v);
    }
  };
  put_rate("mm1_theta", report.aggregate.mm1_theta);
  put_rate("mm2_theta", report.aggregate.mm2_theta);
  put_rate("mm3_rate", report.aggregate.mm3_rate);
  put_rate("jud_rate", report.aggregate.jud_rate);
  agg["degenerate_sets"] = report.aggregate.degenerate_sets;
  agg["skipped_references"] = report.aggregate.skipped_references;
  j["aggregate"] = std::move(agg);

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ReportRow& row : report.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (const auto& [key, value] : row.fields) {
      r[key] = detail::value_to_json(value);
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline std::string to_csv(const ScoreReport& report) {
  std::string out;
  out += "# " + report.tool + "\n";
  out += "# command=" + report.command;
  out += " grid_k=" + std::to_string(report.config.grid_k);
  out += " levels=" + std::to_string(report.config.levels);
  out += " stats=" + stats_letters(report.config.stats);
  out += " directions=";
  for (std::size_t i = 0; i < report.config.directions.size(); ++i) {
    const Direction& d = report.config.directions[i];
    if (i) out += ';';
    out += std::to_string(d.dx) + "," + std::to_string(d.dy);
  }
  if (report.downsize_px) {
    out += " downsize_px=" + std::to_string(*report.downsize_px);
  }
  if (report.rotate_deg) {
    out += " rotate_deg=" + format_sig(*report.rotate_deg);
  }
  if (report.stroke_threshold) {
    out += " stroke_threshold=" + std::to_string(*report.stroke_threshold);
  }
  out += "\n# ";
  auto append_rate = [&out](const char* key, const std::optional<double>& v) {
    if (v) out += std::string(key) + "=" + format_sig(*v) + " ";
  };
  append_rate("mm1_theta", report.aggregate.mm1_theta);
  append_rate("mm2_theta", report.aggregate.mm2_theta);
  append_rate("mm3_rate", report.aggregate.mm3_rate);
  append_rate("jud_rate", report.aggregate.jud_rate);
  out += "degenerate_sets=" +
         std::to_string(report.aggregate.degenerate_sets) +
         " skipped_references=" +
         std::to_string(report.aggregate.skipped_references) + "\n";

  if (!report.rows.empty()) {
    const ReportRow& first = report.rows.front();
    for (std::size_t i = 0; i < first.fields.size(); ++i) {
      if (i) out += ',';
      out += detail::csv_escape(first.fields[i].first);
    }
    out += '\n';
    for (const ReportRow& row : report.rows) {
      for (std::size_t i = 0; i < row.fields.size(); ++i) {
        if (i) out += ',';
        out += detail::value_to_csv(row.fields[i].second);
      }
      out += '\n';
    }
  }
  return out;
}

inline void write_report(const ScoreReport& report,
                         const std::filesystem::path& path,
                         ReportFormat format) {
  std::string text;
  if (format == ReportFormat::kJson) {
    text = to_json(report).dump(2);
    text += '\n';
  } else {
    text = to_csv(report);
  }
  detail::write_text_atomic(path, text);
}

// Parses a JSON report back into a value-equal ScoreReport.
inline ScoreReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open report: " + path.string());
  }
  nlohmann::ordered_json j;  // ordered: row field order must survive a reload
  try {
    j = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw ParseError("report " + path.string() + ": " + e.what());
  }

  ScoreReport report;
  try {
    report.tool = j.at("tool").get<std::string>();
    report.command = j.at("command").get<std::string>();
    const nlohmann::ordered_json& cfg = j.at("config");
    report.config.grid_k = cfg.at("grid_k").get<int>();
    report.config.levels = cfg.at("levels").get<int>();
    report.config.stats = parse_stats(cfg.at("stats").get<std::string>());
    report.config.directions.clear();
    for (const nlohmann::ordered_json& d : cfg.at("directions")) {
      report.config.directions.push_back(
          Direction{d.at(0).get<int>(), d.at(1).get<int>()});
    }
    const nlohmann::ordered_json& protocol = j.at("protocol");
    if (protocol.contains("downsize_px")) {
      report.downsize_px = protocol["downsize_px"].get<std::int64_t>();
    }
    if (protocol.contains("rotate_deg")) {
      report.rotate_deg = protocol["rotate_deg"].get<double>();
    }
    if (protocol.contains("stroke_threshold")) {
      report.stroke_threshold = protocol["stroke_threshold"].get<std::int64_t>();
    }
    const nlohmann::ordered_json& agg = j.at("aggregate");
    auto get_rate = [&agg](const char* key) -> std::optional<double> {
      if (!agg.contains(key)) return std::nullopt;
      if (agg[key].is_null()) return std::numeric_limits<double>::quiet_NaN();
      return agg[key].get<double>();
    };
    report.aggregate.mm1_theta = get_rate("mm1_theta");
    report.aggregate.mm2_theta = get_rate("mm2_theta");
    report.aggregate.mm3_rate = get_rate("mm3_rate");
    report.aggregate.jud_rate = get_rate("jud_rate");
    report.aggregate.degenerate_sets =
        agg.at("degenerate_sets").get<std::int64_t>();
    report.aggregate.skipped_references =
        agg.at("skipped_references").get<std::int64_t>();
    for (const nlohmann::ordered_json& r : j.at("rows")) {
      ReportRow row;
      for (auto it = r.begin(); it != r.end(); ++it) {
        row.fields.emplace_back(it.key(), detail::json_to_value(it.value()));
      }
      report.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError("report " + path.string() + ": " + e.what());
  }
  return report;
}

}  // namespace scoot::io

#endif  // SCOOT_IO_REPORT_HPP_
