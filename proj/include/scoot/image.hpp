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

#ifndef SCOOT_IMAGE_HPP_
#define SCOOT_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scoot/error.hpp"

namespace scoot {

// Pixel offset (dx, dy). x is the column index and grows rightward, y is the
// row index and grows downward, so d = (0, 1) points one row down.
struct Direction {
  int dx = 0;
  int dy = 0;

  friend bool operator==(const Direction&, const Direction&) = default;
};

// 8-bit grayscale image, row-major. A constructed image is never empty.
class GrayImage {
 public:
  GrayImage() = default;

  GrayImage(int width, int height, std::uint8_t fill = 0)
      : width_(width), height_(height) {
    check_dims(width, height);
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dims(width, height);
    if (pixels_.size() != static_cast<std::size_t>(width) * height) {
      throw InvalidParameter("GrayImage: pixel buffer size " +
                             std::to_string(pixels_.size()) +
                             " does not match " + std::to_string(width) + "x" +
                             std::to_string(height));
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }

  std::uint8_t at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  std::uint8_t& at(int x, int y) {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }

  const std::vector<std::uint8_t>& pixels() const { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  static void check_dims(int width, int height) {
    if (width < 1 || height < 1) {
      throw InvalidParameter("GrayImage: dimensions must be positive, got " +
                             std::to_string(width) + "x" +
                             std::to_string(height));
    }
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// 8-bit three-channel image, interleaved RGB, row-major.
class RgbImage {
 public:
  RgbImage(int width, int height, std::vector<std::uint8_t> interleaved)
      : width_(width), height_(height), data_(std::move(interleaved)) {
    if (width < 1 || height < 1) {
      throw InvalidParameter("RgbImage: dimensions must be positive");
    }
    if (data_.size() != static_cast<std::size_t>(width) * height * 3) {
      throw InvalidParameter("RgbImage: buffer size does not match " +
                             std::to_string(width) + "x" +
                             std::to_string(height) + "x3");
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }

  // Pointer to the R byte of pixel (x, y); G and B follow.
  const std::uint8_t* rgb(int x, int y) const {
    return data_.data() + (static_cast<std::size_t>(y) * width_ + x) * 3;
  }

  const std::vector<std::uint8_t>& data() const { return data_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

// Image of tone grades in 1..levels, the output of quantization.
class QuantizedImage {
 public:
  QuantizedImage(int width, int height, int levels,
                 std::vector<std::uint16_t> grades)
      : width_(width),
        height_(height),
        levels_(levels),
        grades_(std::move(grades)) {
    if (width < 1 || height < 1) {
      throw InvalidParameter("QuantizedImage: dimensions must be positive");
    }
    if (levels < 2) {
      throw InvalidParameter("QuantizedImage: levels must be >= 2, got " +
                             std::to_string(levels));
    }
    if (grades_.size() != static_cast<std::size_t>(width) * height) {
      throw InvalidParameter("QuantizedImage: grade buffer size mismatch");
    }
    for (std::uint16_t g : grades_) {
      if (g < 1 || g > levels) {
        throw InvalidParameter("QuantizedImage: grade " + std::to_string(g) +
                               " outside 1.." + std::to_string(levels));
      }
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int levels() const { return levels_; }

  std::uint16_t grade(int x, int y) const {
    return grades_[static_cast<std::size_t>(y) * width_ + x];
  }

  const std::vector<std::uint16_t>& grades() const { return grades_; }

  friend bool operator==(const QuantizedImage&, const QuantizedImage&) =
      default;

 private:
  int width_ = 0;
  int height_ = 0;
  int levels_ = 0;
  std::vector<std::uint16_t> grades_;
};

}  // namespace scoot

#endif  // SCOOT_IMAGE_HPP_
