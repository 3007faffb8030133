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

#ifndef SCOOT_IO_MANIFEST_HPP_
#define SCOOT_IO_MANIFEST_HPP_

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "scoot/error.hpp"
#include "scoot/eval/judgment.hpp"
#include "scoot/eval/meta_measures.hpp"
#include "scoot/image.hpp"
#include "scoot/io/image_io.hpp"

namespace scoot::io {

// Manifests are JSON files binding reference sketches to competing synthetic
// sketches (ranked) or to recorded 2AFC answers (triplets). Relative paths
// resolve against the manifest's own directory, and every referenced image
// is decoded at load time, so a loaded manifest is fully usable.
//
// Ranked:   {"entries": [{"reference_path": "...",
//                         "candidates": [{"algorithm": "...", "path": "..."}]}]}
// Triplets: {"entries": [{"reference_path": "...", "s0_path": "...",
//                         "s1_path": "...", "q": 0}]}

struct RankedCandidate {
  std::string algorithm;
  std::string path;  // resolved
  GrayImage image;
};

struct RankedEntry {
  std::string reference_path;  // resolved
  GrayImage reference;
  std::vector<RankedCandidate> candidates;
};

struct RankedManifest {
  std::vector<RankedEntry> entries;
};

struct TripletEntry {
  std::string reference_path;
  std::string s0_path;
  std::string s1_path;
  int q = 0;
  GrayImage reference;
  GrayImage s0;
  GrayImage s1;
};

struct TripletManifest {
  std::vector<TripletEntry> entries;
};

namespace detail {

inline nlohmann::json parse_manifest_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open manifest: " + path.string());
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("manifest " + path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw ParseError("manifest " + path.string() +
                     ": expected an object with an \"entries\" array");
  }
  return j;
}

inline std::string require_string(const nlohmann::json& obj, const char* key,
                                  const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw ParseError(where + ": missing string field \"" + key + "\"");
  }
  return obj[key].get<std::string>();
}

inline std::string resolve(const std::filesystem::path& base,
                           const std::string& rel) {
  std::filesystem::path p(rel);
  if (p.is_absolute()) return p.string();
  return (base / p).lexically_normal().string();
}

}  // namespace detail

inline RankedManifest load_ranked_manifest(const std::filesystem::path& path) {
  const nlohmann::json j = detail::parse_manifest_json(path);
  const std::filesystem::path base = path.parent_path();

  RankedManifest manifest;
  std::size_t index = 0;
  for (const nlohmann::json& e : j["entries"]) {
    const std::string where =
        "manifest " + path.string() + ", entry " + std::to_string(index);
    if (!e.is_object()) throw ParseError(where + ": expected an object");

    RankedEntry entry;
    entry.reference_path =
        detail::resolve(base, detail::require_string(e, "reference_path", where));
    entry.reference = load_image(entry.reference_path);

    if (!e.contains("candidates") || !e["candidates"].is_array()) {
      throw ParseError(where + ": missing \"candidates\" array");
    }
    for (const nlohmann::json& c : e["candidates"]) {
      if (!c.is_object()) throw ParseError(where + ": candidate must be an object");
      RankedCandidate cand;
      cand.algorithm = detail::require_string(c, "algorithm", where);
      cand.path = detail::resolve(base, detail::require_string(c, "path", where));
      for (const RankedCandidate& prev : entry.candidates) {
        if (prev.algorithm == cand.algorithm) {
          throw ParseError(where + ": duplicate algorithm \"" +
                           cand.algorithm + "\"");
        }
      }
      cand.image = load_image(cand.path);
      entry.candidates.push_back(std::move(cand));
    }
    manifest.entries.push_back(std::move(entry));
    ++index;
  }
  return manifest;
}

inline TripletManifest load_triplet_manifest(
    const std::filesystem::path& path) {
  const nlohmann::json j = detail::parse_manifest_json(path);
  const std::filesystem::path base = path.parent_path();

  TripletManifest manifest;
  std::size_t index = 0;
  for (const nlohmann::json& e : j["entries"]) {
    const std::string where =
        "manifest " + path.string() + ", entry " + std::to_string(index);
    if (!e.is_object()) throw ParseError(where + ": expected an object");

    TripletEntry entry;
    entry.reference_path =
        detail::resolve(base, detail::require_string(e, "reference_path", where));
    entry.s0_path = detail::resolve(base, detail::require_string(e, "s0_path", where));
    entry.s1_path = detail::resolve(base, detail::require_string(e, "s1_path", where));
    if (!e.contains("q") || !e["q"].is_number_integer()) {
      throw ParseError(where + ": missing integer field \"q\"");
    }
    entry.q = e["q"].get<int>();
    if (entry.q != 0 && entry.q != 1) {
      throw ParseError(where + ": q must be 0 or 1, got " +
                       std::to_string(entry.q));
    }
    entry.reference = load_image(entry.reference_path);
    entry.s0 = load_image(entry.s0_path);
    entry.s1 = load_image(entry.s1_path);
    manifest.entries.push_back(std::move(entry));
    ++index;
  }
  return manifest;
}

// Views for the evaluation harness. Ranked sets require >= 2 candidates per
// entry (enforced here); the MM3 projection accepts any candidate count.
inline std::vector<eval::RankedSet> to_ranked_sets(
    const RankedManifest& manifest) {
  std::vector<eval::RankedSet> sets;
  sets.reserve(manifest.entries.size());
  for (const RankedEntry& e : manifest.entries) {
    eval::RankedSet set;
    set.reference = e.reference;
    for (const RankedCandidate& c : e.candidates) {
      set.candidates.emplace_back(c.algorithm, c.image);
    }
    eval::validate_ranked_set(set);
    sets.push_back(std::move(set));
  }
  return sets;
}

inline std::vector<eval::Triplet> to_triplets(const TripletManifest& manifest) {
  std::vector<eval::Triplet> triplets;
  triplets.reserve(manifest.entries.size());
  for (const TripletEntry& e : manifest.entries) {
    triplets.push_back(eval::Triplet{e.reference, e.s0, e.s1, e.q});
  }
  return triplets;
}

inline std::vector<GrayImage> mm3_references(const RankedManifest& manifest) {
  std::vector<GrayImage> refs;
  refs.reserve(manifest.entries.size());
  for (const RankedEntry& e : manifest.entries) refs.push_back(e.reference);
  return refs;
}

inline std::vector<std::vector<GrayImage>> mm3_outputs(
    const RankedManifest& manifest) {
  std::vector<std::vector<GrayImage>> outputs;
  outputs.reserve(manifest.entries.size());
  for (const RankedEntry& e : manifest.entries) {
    std::vector<GrayImage> list;
    list.reserve(e.candidates.size());
    for (const RankedCandidate& c : e.candidates) list.push_back(c.image);
    outputs.push_back(std::move(list));
  }
  return outputs;
}

}  // namespace scoot::io

#endif  // SCOOT_IO_MANIFEST_HPP_
