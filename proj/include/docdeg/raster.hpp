// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace docdeg {

enum class Color : std::uint8_t { white = 0, black = 1 };

constexpr int kDefaultDpi = 300;

/// Bi-level raster, one bit per pixel, 1 = black.
///
/// Rows are packed MSB-first and padded to whole bytes (the PBM P4 layout),
/// so the payload of a P4 file maps onto `bytes()` without reshuffling.
/// Padding bits past `width()` are kept at zero by every mutator.
class BiLevelImage {
public:
  /// Throws std::invalid_argument for zero or oversized dimensions.
  BiLevelImage(int width, int height, int dpi = kDefaultDpi,
               Color fill = Color::white);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int dpi() const noexcept { return dpi_; }
  void set_dpi(int dpi);

  std::size_t stride() const noexcept { return stride_; }
  std::int64_t pixel_count() const noexcept {
    return std::int64_t{width_} * height_;
  }

  bool in_bounds(std::int64_t x, std::int64_t y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  /// Bounds-checked access; throws std::out_of_range.
  Color get(int x, int y) const;
  void set(int x, int y, Color c);

  // Unchecked variants for inner loops; caller guarantees in_bounds(x, y).
  bool black_at(int x, int y) const noexcept {
    return (bits_[y * stride_ + (x >> 3)] >> (7 - (x & 7))) & 1u;
  }
  void put(int x, int y, Color c) noexcept {
    auto& b = bits_[y * stride_ + (x >> 3)];
    const std::uint8_t mask = std::uint8_t(0x80u >> (x & 7));
    if (c == Color::black)
      b |= mask;
    else
      b &= std::uint8_t(~mask);
  }

  std::span<const std::uint8_t> bytes() const noexcept { return bits_; }
  std::span<const std::uint8_t> row(int y) const noexcept {
    return std::span<const std::uint8_t>(bits_).subspan(y * stride_, stride_);
  }

  /// Copies one packed row in. Padding bits of the source are cleared.
  void load_row(int y, std::span<const std::uint8_t> packed);

  /// Flips every pixel; padding stays zero.
  void invert();

  friend bool operator==(const BiLevelImage&, const BiLevelImage&) = default;

private:
  std::uint8_t pad_mask() const noexcept;

  int width_;
  int height_;
  int dpi_;
  std::size_t stride_;
  std::vector<std::uint8_t> bits_;
};

inline BiLevelImage new_blank(int width, int height, int dpi = kDefaultDpi,
                              Color color = Color::white) {
  return BiLevelImage(width, height, dpi, color);
}

std::int64_t count_black(const BiLevelImage& img) noexcept;

inline std::int64_t count_white(const BiLevelImage& img) noexcept {
  return img.pixel_count() - count_black(img);
}

/// True when every padding bit of every row is zero.
bool padding_clear(const BiLevelImage& img) noexcept;

// PBM (netpbm bitmap). Reads P1 and P4, writes P4. dpi defaults to 300.
BiLevelImage read_pbm(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> write_pbm(const BiLevelImage& img);

/// Baseline uncompressed bi-level TIFF, single image, either byte order.
BiLevelImage read_tiff_bilevel(std::span<const std::uint8_t> data);

// File helpers. load_image sniffs the magic to pick PBM or TIFF.
std::vector<std::uint8_t> read_file(const std::string& path);
BiLevelImage load_image(const std::string& path);

}  // namespace docdeg
