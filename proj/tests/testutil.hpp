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

// Shared test helpers: independent oracles (kept deliberately naive and
// structurally different from the library code they check), synthetic sketch
// fixtures, tiny image encoders, and a subprocess runner for the CLI.

#ifndef SCOOT_TESTS_TESTUTIL_HPP_
#define SCOOT_TESTS_TESTUTIL_HPP_

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scoot/scoot.hpp"

namespace testutil {

namespace fs = std::filesystem;

// --- random images ----------------------------------------------------------

inline scoot::GrayImage random_image(std::mt19937& rng, int w, int h) {
  std::uniform_int_distribution<int> dist(0, 255);
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(w) * h);
  for (auto& p : pixels) p = static_cast<std::uint8_t>(dist(rng));
  return scoot::GrayImage(w, h, std::move(pixels));
}

inline scoot::GrayImage random_sized_image(std::mt19937& rng, int min_dim,
                                           int max_dim) {
  std::uniform_int_distribution<int> dim(min_dim, max_dim);
  return random_image(rng, dim(rng), dim(rng));
}

// --- independent oracles ----------------------------------------------------

// All-pairs enumeration: every pixel pair is inspected and counted when its
// displacement equals d. Quadratic and slow, but structurally unrelated to
// the single-pass accumulation it checks.
inline scoot::CoMatrix glcm_oracle(const scoot::QuantizedImage& q,
                                   scoot::Direction d, bool symmetric) {
  scoot::CoMatrix m(q.levels());
  for (int y1 = 0; y1 < q.height(); ++y1) {
    for (int x1 = 0; x1 < q.width(); ++x1) {
      for (int y2 = 0; y2 < q.height(); ++y2) {
        for (int x2 = 0; x2 < q.width(); ++x2) {
          if (x2 - x1 == d.dx && y2 - y1 == d.dy) {
            m.at(q.grade(x1, y1), q.grade(x2, y2)) += 1.0;
            if (symmetric) m.at(q.grade(x2, y2), q.grade(x1, y1)) += 1.0;
          }
        }
      }
    }
  }
  return m;
}

// Ranks by counting smaller/equal elements, O(n^2).
inline std::vector<double> ranks_by_counting(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    int less = 0, equal = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i]) ++less;
      if (v[j] == v[i]) ++equal;  // counts self
    }
    r[i] = less + (equal + 1) / 2.0;
  }
  return r;
}

inline double spearman_theta_oracle(const std::vector<double>& a,
                                    const std::vector<double>& b) {
  const std::vector<double> ra = ranks_by_counting(a);
  const std::vector<double> rb = ranks_by_counting(b);
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    ma += ra[i];
    mb += rb[i];
  }
  ma /= static_cast<double>(ra.size());
  mb /= static_cast<double>(rb.size());
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    cov += (ra[i] - ma) * (rb[i] - mb);
    va += (ra[i] - ma) * (ra[i] - ma);
    vb += (rb[i] - mb) * (rb[i] - mb);
  }
  return 1.0 - cov / (std::sqrt(va) * std::sqrt(vb));
}

// --- synthetic sketch fixtures ----------------------------------------------

inline void draw_line(scoot::GrayImage& img, int x0, int y0, int x1, int y1,
                      std::uint8_t value) {
  const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
  const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  for (;;) {
    if (x0 >= 0 && x0 < img.width() && y0 >= 0 && y0 < img.height()) {
      img.at(x0, y0) = value;
    }
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

// A sketch-like fixture: white paper, dark freehand strokes, and a couple of
// hatched patches for texture.
inline scoot::GrayImage synth_sketch(std::mt19937& rng, int w = 96,
                                     int h = 96) {
  scoot::GrayImage img(w, h, 255);
  std::uniform_int_distribution<int> px(0, w - 1), py(0, h - 1);
  std::uniform_int_distribution<int> tone(0, 120);
  std::uniform_int_distribution<int> step(-12, 12);
  std::uniform_int_distribution<int> n_segments(2, 5);

  for (int stroke = 0; stroke < 40; ++stroke) {
    int x = px(rng), y = py(rng);
    const std::uint8_t v = static_cast<std::uint8_t>(tone(rng));
    const int segments = n_segments(rng);
    for (int s = 0; s < segments; ++s) {
      const int nx = x + step(rng), ny = y + step(rng);
      draw_line(img, x, y, nx, ny, v);
      x = nx;
      y = ny;
    }
  }
  // hatching: parallel short lines in two random patches
  for (int patch = 0; patch < 2; ++patch) {
    const int x0 = px(rng) / 2, y0 = py(rng) / 2;
    const int size = 18;
    const std::uint8_t v = static_cast<std::uint8_t>(tone(rng));
    for (int i = 0; i < size; i += 3) {
      draw_line(img, x0 + i, y0, x0, y0 + i, v);
    }
  }
  return img;
}

inline scoot::GrayImage box_blur3(const scoot::GrayImage& img, int passes) {
  scoot::GrayImage cur = img;
  for (int p = 0; p < passes; ++p) {
    scoot::GrayImage next = cur;
    for (int y = 0; y < cur.height(); ++y) {
      for (int x = 0; x < cur.width(); ++x) {
        int sum = 0, n = 0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int sx = x + dx, sy = y + dy;
            if (sx >= 0 && sx < cur.width() && sy >= 0 && sy < cur.height()) {
              sum += cur.at(sx, sy);
              ++n;
            }
          }
        }
        next.at(x, y) = static_cast<std::uint8_t>((sum + n / 2) / n);
      }
    }
    cur = next;
  }
  return cur;
}

inline scoot::GrayImage add_noise(const scoot::GrayImage& img,
                                  std::mt19937& rng, double fraction,
                                  int amplitude) {
  scoot::GrayImage out = img;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> delta(-amplitude, amplitude);
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      if (coin(rng) < fraction) {
        const int v = out.at(x, y) + delta(rng);
        out.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
      }
    }
  }
  return out;
}

inline scoot::GrayImage contrast_change(const scoot::GrayImage& img,
                                        double gain) {
  scoot::GrayImage out = img;
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const int v =
          static_cast<int>(std::lround(128.0 + gain * (out.at(x, y) - 128)));
      out.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
    }
  }
  return out;
}

// The four distortion families plus the undistorted copy, as a ranked set.
inline scoot::eval::RankedSet distorted_set(std::mt19937& rng,
                                            const scoot::GrayImage& ref) {
  scoot::eval::RankedSet set;
  set.reference = ref;
  set.candidates.emplace_back("identity", ref);
  set.candidates.emplace_back("blur", box_blur3(ref, 1));
  set.candidates.emplace_back("blur-heavy", box_blur3(ref, 3));
  set.candidates.emplace_back("noise", add_noise(ref, rng, 0.10, 90));
  set.candidates.emplace_back("contrast", contrast_change(ref, 0.55));
  set.candidates.emplace_back(
      "removal", scoot::threshold_strokes(ref, 90, scoot::StrokeKeep::kLight));
  return set;
}

inline std::vector<scoot::eval::RankedSet> make_fixture_sets(int n_refs,
                                                             unsigned seed,
                                                             int w = 96,
                                                             int h = 96) {
  std::mt19937 rng(seed);
  std::vector<scoot::eval::RankedSet> sets;
  sets.reserve(n_refs);
  for (int i = 0; i < n_refs; ++i) {
    sets.push_back(distorted_set(rng, synth_sketch(rng, w, h)));
  }
  return sets;
}

// --- tiny encoders (fixtures on disk) ---------------------------------------

inline void write_pgm(const fs::path& path, const scoot::GrayImage& img) {
  std::ofstream out(path, std::ios::binary);
  out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels().data()),
            static_cast<std::streamsize>(img.pixels().size()));
  if (!out) throw std::runtime_error("write_pgm failed: " + path.string());
}

inline void write_bytes(const fs::path& path,
                        const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write_bytes failed: " + path.string());
}

// Uncompressed 24-bit bottom-up BMP.
inline void write_bmp24(const fs::path& path, int w, int h,
                        const std::vector<std::uint8_t>& rgb) {
  const std::size_t stride = (static_cast<std::size_t>(w) * 3 + 3) & ~3ULL;
  const std::uint32_t data_size = static_cast<std::uint32_t>(stride * h);
  const std::uint32_t file_size = 54 + data_size;
  std::vector<std::uint8_t> out(file_size, 0);
  auto put32 = [&out](std::size_t at, std::uint32_t v) {
    out[at] = v & 0xFF;
    out[at + 1] = (v >> 8) & 0xFF;
    out[at + 2] = (v >> 16) & 0xFF;
    out[at + 3] = (v >> 24) & 0xFF;
  };
  out[0] = 'B';
  out[1] = 'M';
  put32(2, file_size);
  put32(10, 54);
  put32(14, 40);
  put32(18, static_cast<std::uint32_t>(w));
  put32(22, static_cast<std::uint32_t>(h));
  out[26] = 1;
  out[28] = 24;
  put32(34, data_size);
  for (int y = 0; y < h; ++y) {
    const int src_row = h - 1 - y;  // bottom-up
    for (int x = 0; x < w; ++x) {
      const std::uint8_t* p = &rgb[(static_cast<std::size_t>(src_row) * w + x) * 3];
      const std::size_t at = 54 + stride * y + static_cast<std::size_t>(x) * 3;
      out[at] = p[2];      // B
      out[at + 1] = p[1];  // G
      out[at + 2] = p[0];  // R
    }
  }
  write_bytes(path, out);
}

// --- filesystem and process helpers ----------------------------------------

inline std::atomic<int>& temp_counter() {
  static std::atomic<int> counter{0};
  return counter;
}

class TempDir {
 public:
  TempDir() {
    const fs::path base = fs::temp_directory_path();
    for (int i = 0; i < 10000; ++i) {
      fs::path candidate =
          base / ("scoot_test_" + std::to_string(::getpid()) + "_" +
                  std::to_string(temp_counter()++));
      std::error_code ec;
      if (fs::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("cannot create temp directory");
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

inline std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

#ifdef SCOOT_CLI_PATH
// Runs the built CLI with `args`, capturing stdout/stderr.
inline RunResult run_cli(const std::string& args, const TempDir& dir,
                         const std::string& env_prefix = "") {
  const int id = temp_counter()++;
  const fs::path out_file = dir.path() / ("out_" + std::to_string(id));
  const fs::path err_file = dir.path() / ("err_" + std::to_string(id));
  const std::string cmd = env_prefix + std::string(SCOOT_CLI_PATH) + " " +
                          args + " > " + out_file.string() + " 2> " +
                          err_file.string();
  const int status = std::system(cmd.c_str());
  RunResult result;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  result.out = read_text(out_file);
  result.err = read_text(err_file);
  return result;
}
#endif

// --- manifest fixtures ------------------------------------------------------

// Writes a ranked manifest and its images (PGM) under dir; paths relative.
inline fs::path write_ranked_fixture(
    const TempDir& dir, const std::vector<scoot::eval::RankedSet>& sets,
    const std::string& name = "ranked.json") {
  std::string json = "{\n  \"entries\": [\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string ref_name = "ref_" + std::to_string(i) + ".pgm";
    write_pgm(dir.path() / ref_name, sets[i].reference);
    json += "    {\"reference_path\": \"" + ref_name +
            "\", \"candidates\": [";
    for (std::size_t c = 0; c < sets[i].candidates.size(); ++c) {
      const std::string cand_name =
          "cand_" + std::to_string(i) + "_" + std::to_string(c) + ".pgm";
      write_pgm(dir.path() / cand_name, sets[i].candidates[c].second);
      if (c) json += ", ";
      json += "{\"algorithm\": \"" + sets[i].candidates[c].first +
              "\", \"path\": \"" + cand_name + "\"}";
    }
    json += "]}";
    json += (i + 1 < sets.size()) ? ",\n" : "\n";
  }
  json += "  ]\n}\n";
  const fs::path manifest = dir.path() / name;
  std::ofstream(manifest) << json;
  return manifest;
}

inline fs::path write_triplet_fixture(
    const TempDir& dir, const std::vector<scoot::eval::Triplet>& triplets,
    const std::string& name = "triplets.json") {
  std::string json = "{\n  \"entries\": [\n";
  for (std::size_t i = 0; i < triplets.size(); ++i) {
    const std::string ref = "tref_" + std::to_string(i) + ".pgm";
    const std::string s0 = "ts0_" + std::to_string(i) + ".pgm";
    const std::string s1 = "ts1_" + std::to_string(i) + ".pgm";
    write_pgm(dir.path() / ref, triplets[i].reference);
    write_pgm(dir.path() / s0, triplets[i].s0);
    write_pgm(dir.path() / s1, triplets[i].s1);
    json += "    {\"reference_path\": \"" + ref + "\", \"s0_path\": \"" + s0 +
            "\", \"s1_path\": \"" + s1 +
            "\", \"q\": " + std::to_string(triplets[i].q) + "}";
    json += (i + 1 < triplets.size()) ? ",\n" : "\n";
  }
  json += "  ]\n}\n";
  const fs::path manifest = dir.path() / name;
  std::ofstream(manifest) << json;
  return manifest;
}

}  // namespace testutil

#endif  // SCOOT_TESTS_TESTUTIL_HPP_
