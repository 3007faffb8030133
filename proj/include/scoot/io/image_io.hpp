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

#ifndef SCOOT_IO_IMAGE_IO_HPP_
#define SCOOT_IO_IMAGE_IO_HPP_

#include <cstddef>
#include <cstdio>  // jpeglib.h needs FILE and size_t declared first

#include <jpeglib.h>
#include <png.h>

#include <cctype>
#include <csetjmp>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "scoot/error.hpp"
#include "scoot/image.hpp"
#include "scoot/transforms.hpp"

namespace scoot::io {

namespace detail {

inline std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open file: " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("read failure: " + path.string());
  }
  return bytes;
}

// --- PNG ------------------------------------------------------------------

struct PngReadState {
  const std::uint8_t* data;
  std::size_t size;
  std::size_t pos;
};

inline void png_read_from_memory(png_structp png, png_bytep out,
                                 png_size_t n) {
  auto* st = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (st->pos + n > st->size) {
    png_error(png, "unexpected end of PNG stream");
  }
  std::memcpy(out, st->data + st->pos, n);
  st->pos += n;
}

inline GrayImage decode_png(const std::vector<std::uint8_t>& bytes,
                            const std::filesystem::path& path) {
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("libpng init failed: " + path.string());
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("libpng init failed: " + path.string());
  }

  std::vector<std::uint8_t> raster;
  std::vector<png_bytep> rows;
  PngReadState state{bytes.data(), bytes.size(), 0};

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("undecodable PNG: " + path.string());
  }

  png_set_read_fn(png, &state, &png_read_from_memory);
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  const png_byte bit_depth = png_get_bit_depth(png, info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  // 16-bit samples keep only the high byte (an integer right shift).
  if (bit_depth == 16) png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const int width = static_cast<int>(png_get_image_width(png, info));
  const int height = static_cast<int>(png_get_image_height(png, info));
  const int channels = png_get_channels(png, info);

  raster.resize(static_cast<std::size_t>(width) * height * channels);
  rows.resize(height);
  for (int y = 0; y < height; ++y) {
    rows[y] = raster.data() + static_cast<std::size_t>(y) * width * channels;
  }
  png_read_image(png, rows.data());
  png_destroy_read_struct(&png, &info, nullptr);

  if (channels == 1) {
    return GrayImage(width, height, std::move(raster));
  }
  if (channels == 3) {
    return to_gray(RgbImage(width, height, std::move(raster)));
  }
  throw IoError("unsupported PNG channel layout in " + path.string());
}

// --- JPEG -----------------------------------------------------------------

struct JpegErrorMgr {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
};

inline void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  std::longjmp(err->jump, 1);
}

inline GrayImage decode_jpeg(const std::vector<std::uint8_t>& bytes,
                             const std::filesystem::path& path) {
  jpeg_decompress_struct cinfo;
  JpegErrorMgr jerr;
  cinfo.err = jpeg_std_error(&jerr.pub);
  jerr.pub.error_exit = &jpeg_error_exit;

  std::vector<std::uint8_t> raster;
  if (setjmp(jerr.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw IoError("undecodable JPEG: " + path.string());
  }

  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  const bool gray = cinfo.num_components == 1;
  cinfo.out_color_space = gray ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_start_decompress(&cinfo);

  const int width = static_cast<int>(cinfo.output_width);
  const int height = static_cast<int>(cinfo.output_height);
  const int channels = cinfo.output_components;
  raster.resize(static_cast<std::size_t>(width) * height * channels);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = raster.data() +
                   static_cast<std::size_t>(cinfo.output_scanline) * width *
                       channels;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);

  if (channels == 1) {
    return GrayImage(width, height, std::move(raster));
  }
  if (channels == 3) {
    return to_gray(RgbImage(width, height, std::move(raster)));
  }
  throw IoError("unsupported JPEG channel layout in " + path.string());
}

// --- PGM (binary, P5) -----------------------------------------------------

inline GrayImage decode_pgm(const std::vector<std::uint8_t>& bytes,
                            const std::filesystem::path& path) {
  std::size_t pos = 2;  // past "P5"
  auto fail = [&path]() -> GrayImage {
    throw IoError("undecodable PGM: " + path.string());
  };
  auto next_int = [&]() -> long {
    // Skip whitespace and '#' comment lines between header tokens.
    for (;;) {
      while (pos < bytes.size() && std::isspace(bytes[pos])) ++pos;
      if (pos < bytes.size() && bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        continue;
      }
      break;
    }
    if (pos >= bytes.size() || !std::isdigit(bytes[pos])) fail();
    long value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos] - '0');
      if (value > 1 << 30) fail();
      ++pos;
    }
    return value;
  };

  const long width = next_int();
  const long height = next_int();
  const long maxval = next_int();
  if (width < 1 || height < 1 || maxval < 1 || maxval > 65535) fail();
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) fail();
  ++pos;  // exactly one whitespace byte before the raster

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> pixels(count);
  if (maxval <= 255) {
    if (bytes.size() - pos < count) fail();
    std::memcpy(pixels.data(), bytes.data() + pos, count);
  } else {
    // Two bytes per sample, big-endian; keep the high byte.
    if (bytes.size() - pos < count * 2) fail();
    for (std::size_t i = 0; i < count; ++i) {
      pixels[i] = bytes[pos + 2 * i];
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(pixels));
}

// --- BMP (uncompressed 8/24/32-bit) ----------------------------------------

inline std::uint32_t read_u32le(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

inline GrayImage decode_bmp(const std::vector<std::uint8_t>& bytes,
                            const std::filesystem::path& path) {
  auto fail = [&path]() -> GrayImage {
    throw IoError("undecodable BMP: " + path.string());
  };
  if (bytes.size() < 54) fail();
  const std::uint32_t data_offset = read_u32le(&bytes[10]);
  const std::uint32_t header_size = read_u32le(&bytes[14]);
  if (header_size < 40) fail();
  const std::int32_t width = static_cast<std::int32_t>(read_u32le(&bytes[18]));
  const std::int32_t raw_height =
      static_cast<std::int32_t>(read_u32le(&bytes[22]));
  const int bpp = bytes[28] | (bytes[29] << 8);
  const std::uint32_t compression = read_u32le(&bytes[30]);
  if (width < 1 || raw_height == 0 || compression != 0) fail();
  if (bpp != 8 && bpp != 24 && bpp != 32) fail();

  const bool top_down = raw_height < 0;
  const int height = top_down ? -raw_height : raw_height;

  // 8-bit rows index a BGRA palette; map each entry to its luma once.
  std::vector<std::uint8_t> palette_gray;
  if (bpp == 8) {
    std::uint32_t colors = read_u32le(&bytes[46]);
    if (colors == 0) colors = 256;
    const std::size_t palette_at = 14 + header_size;
    if (palette_at + colors * 4 > bytes.size()) fail();
    palette_gray.resize(colors);
    for (std::uint32_t i = 0; i < colors; ++i) {
      const std::uint8_t* entry = &bytes[palette_at + i * 4];
      palette_gray[i] = luma_rec601(entry[2], entry[1], entry[0]);
    }
  }

  const std::size_t stride = (static_cast<std::size_t>(width) * (bpp / 8) + 3) &
                             ~static_cast<std::size_t>(3);
  if (data_offset + stride * height > bytes.size()) fail();

  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    const int src_row = top_down ? y : height - 1 - y;
    const std::uint8_t* row = &bytes[data_offset + stride * src_row];
    for (int x = 0; x < width; ++x) {
      std::uint8_t g;
      if (bpp == 8) {
        const std::uint8_t idx = row[x];
        if (idx >= palette_gray.size()) return fail();
        g = palette_gray[idx];
      } else {
        const std::uint8_t* p = row + x * (bpp / 8);  // B, G, R [, A]
        g = luma_rec601(p[2], p[1], p[0]);
      }
      pixels[static_cast<std::size_t>(y) * width + x] = g;
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

}  // namespace detail

// Loads a grayscale image from PNG, JPEG, binary PGM (P5) or uncompressed
// BMP, dispatching on the file's magic bytes. Color inputs are converted
// with the Rec.601 luma weights; 16-bit samples keep their high byte.
inline GrayImage load_image(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || ec) {
    throw IoError("file not found: " + path.string());
  }
  const std::vector<std::uint8_t> bytes = detail::read_file(path);
  if (bytes.size() >= 8 && bytes[0] == 0x89 && bytes[1] == 'P' &&
      bytes[2] == 'N' && bytes[3] == 'G') {
    return detail::decode_png(bytes, path);
  }
  if (bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8) {
    return detail::decode_jpeg(bytes, path);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') {
    return detail::decode_pgm(bytes, path);
  }
  if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') {
    return detail::decode_bmp(bytes, path);
  }
  throw IoError("unrecognized image format: " + path.string());
}

}  // namespace scoot::io

#endif  // SCOOT_IO_IMAGE_IO_HPP_
