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

#ifndef SCOOT_TRANSFORMS_HPP_
#define SCOOT_TRANSFORMS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "scoot/error.hpp"
#include "scoot/image.hpp"

namespace scoot {

// Deterministic image perturbations. All of these are pure functions of
// their inputs and produce byte-identical results across runs.

// Nearest-neighbor resample. Output pixel (x, y) reads the source at
// (round(x*W/W'), round(y*H/H')), evaluated in exact integer arithmetic
// (round half up) and clamped in bounds. No new gray values appear.
inline GrayImage resize_nearest(const GrayImage& img, int out_width,
                                int out_height) {
  if (out_width < 1 || out_height < 1) {
    throw InvalidParameter("resize_nearest: output dimensions must be positive");
  }
  const int w = img.width();
  const int h = img.height();
  auto src_index = [](int out_pos, int in_dim, int out_dim) {
    const std::int64_t v =
        (2LL * out_pos * in_dim + out_dim) / (2LL * out_dim);
    return static_cast<int>(std::min<std::int64_t>(v, in_dim - 1));
  };
  std::vector<int> col(out_width);
  for (int x = 0; x < out_width; ++x) col[x] = src_index(x, w, out_width);

  GrayImage out(out_width, out_height);
  for (int y = 0; y < out_height; ++y) {
    const int sy = src_index(y, h, out_height);
    for (int x = 0; x < out_width; ++x) {
      out.at(x, y) = img.at(col[x], sy);
    }
  }
  return out;
}

// Shrinks the image by `pixels` along each axis (W x H becomes
// (W - pixels) x (H - pixels)), nearest-neighbor. pixels = 0 is the identity.
inline GrayImage downsize_nn(const GrayImage& img, int pixels) {
  if (pixels < 0 || pixels >= std::min(img.width(), img.height())) {
    throw InvalidParameter("downsize_nn: pixels must be in 0.." +
                           std::to_string(
                               std::min(img.width(), img.height()) - 1) +
                           ", got " + std::to_string(pixels));
  }
  return resize_nearest(img, img.width() - pixels, img.height() - pixels);
}

// Rotation about the image center, counter-clockwise as seen on screen
// (pixel y grows downward). Inverse mapping with nearest-neighbor sampling;
// the canvas keeps its size and samples falling outside the source frame
// take `fill` (default paper-white, so rotated sketches gain no spurious
// dark texture).
inline GrayImage rotate(const GrayImage& img, double degrees_ccw,
                        std::uint8_t fill = 255) {
  const int w = img.width();
  const int h = img.height();
  const double rad = degrees_ccw * 3.14159265358979323846 / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  const double cx = (w - 1) / 2.0;
  const double cy = (h - 1) / 2.0;

  GrayImage out(w, h, fill);
  for (int y = 0; y < h; ++y) {
    const double v = y - cy;
    for (int x = 0; x < w; ++x) {
      const double u = x - cx;
      // Screen-CCW forward map is (u, v) -> (u*c + v*s, -u*s + v*c);
      // this is its inverse applied to the destination pixel.
      const double sx = u * c - v * s + cx;
      const double sy = u * s + v * c + cy;
      const long xi = std::lround(sx);
      const long yi = std::lround(sy);
      if (xi >= 0 && xi < w && yi >= 0 && yi < h) {
        out.at(x, y) = img.at(static_cast<int>(xi), static_cast<int>(yi));
      }
    }
  }
  return out;
}

enum class StrokeKeep { kLight, kDark };

// Splits a sketch at a gray threshold. kLight keeps the lighter content and
// whitens every pixel darker than the threshold; kDark keeps the darker
// strokes and whitens the rest. Each pixel survives in exactly one of the
// two outputs.
inline GrayImage threshold_strokes(const GrayImage& img, int threshold,
                                   StrokeKeep keep) {
  if (threshold < 0 || threshold > 255) {
    throw InvalidParameter("threshold_strokes: threshold must be in 0..255");
  }
  GrayImage out = img;
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const int p = out.at(x, y);
      const bool dark = p < threshold;
      if ((keep == StrokeKeep::kLight && dark) ||
          (keep == StrokeKeep::kDark && !dark)) {
        out.at(x, y) = 255;
      }
    }
  }
  return out;
}

// A perturbation as data: which transform, and how much. `amount` is pixels
// for kDownsize, degrees CCW for kRotate, and the gray threshold for the two
// stroke kinds.
enum class TransformKind { kDownsize, kRotate, kLightStrokes, kDarkStrokes };

struct TransformSpec {
  TransformKind kind = TransformKind::kDownsize;
  double amount = 0.0;
};

inline GrayImage apply(const GrayImage& img, const TransformSpec& spec) {
  switch (spec.kind) {
    case TransformKind::kDownsize: {
      const int pixels = static_cast<int>(spec.amount);
      if (spec.amount != pixels || pixels < 1 ||
          pixels >= std::min(img.width(), img.height())) {
        throw InvalidParameter(
            "transform: downsize amount must be a whole pixel count in 1.." +
            std::to_string(std::min(img.width(), img.height()) - 1));
      }
      return downsize_nn(img, pixels);
    }
    case TransformKind::kRotate:
      if (spec.amount <= -360.0 || spec.amount >= 360.0) {
        throw InvalidParameter(
            "transform: rotation must lie strictly inside (-360, 360)");
      }
      return rotate(img, spec.amount, 255);
    case TransformKind::kLightStrokes:
    case TransformKind::kDarkStrokes: {
      const int threshold = static_cast<int>(spec.amount);
      if (spec.amount != threshold || threshold < 0 || threshold > 255) {
        throw InvalidParameter(
            "transform: stroke threshold must be an integer in 0..255");
      }
      return threshold_strokes(img, threshold,
                               spec.kind == TransformKind::kLightStrokes
                                   ? StrokeKeep::kLight
                                   : StrokeKeep::kDark);
    }
  }
  throw InvalidParameter("transform: unknown kind");
}

// Rec.601 luma, rounded half up: (299 r + 587 g + 114 b + 500) / 1000.
inline std::uint8_t luma_rec601(std::uint8_t r, std::uint8_t g,
                                std::uint8_t b) {
  return static_cast<std::uint8_t>(
      (299 * static_cast<int>(r) + 587 * static_cast<int>(g) +
       114 * static_cast<int>(b) + 500) /
      1000);
}

inline GrayImage to_gray(const RgbImage& rgb) {
  std::vector<std::uint8_t> pixels;
  pixels.reserve(static_cast<std::size_t>(rgb.width()) * rgb.height());
  for (int y = 0; y < rgb.height(); ++y) {
    for (int x = 0; x < rgb.width(); ++x) {
      const std::uint8_t* p = rgb.rgb(x, y);
      pixels.push_back(luma_rec601(p[0], p[1], p[2]));
    }
  }
  return GrayImage(rgb.width(), rgb.height(), std::move(pixels));
}

}  // namespace scoot

#endif  // SCOOT_TRANSFORMS_HPP_
