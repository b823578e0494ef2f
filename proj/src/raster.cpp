// SPDX-License-Identifier: Apache-2.0
#include "docdeg/raster.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "docdeg/errors.hpp"

namespace docdeg {

namespace {

constexpr std::int64_t kMaxDimension = std::int64_t{1} << 20;
constexpr std::int64_t kMaxPixels = std::int64_t{1} << 31;

void check_dimensions(std::int64_t w, std::int64_t h) {
  if (w < 1 || h < 1)
    throw std::invalid_argument("image dimensions must be positive");
  if (w > kMaxDimension || h > kMaxDimension || w * h > kMaxPixels)
    throw std::invalid_argument("image dimensions too large");
}

}  // namespace

BiLevelImage::BiLevelImage(int width, int height, int dpi, Color fill)
    : width_(width), height_(height), dpi_(dpi) {
  check_dimensions(width, height);
  if (dpi < 1) throw std::invalid_argument("dpi must be positive");
  stride_ = (static_cast<std::size_t>(width) + 7) / 8;
  bits_.assign(stride_ * static_cast<std::size_t>(height),
               fill == Color::black ? 0xFF : 0x00);
  if (fill == Color::black) {
    const std::uint8_t last = pad_mask();
    for (int y = 0; y < height_; ++y) bits_[y * stride_ + stride_ - 1] &= last;
  }
}

void BiLevelImage::set_dpi(int dpi) {
  if (dpi < 1) throw std::invalid_argument("dpi must be positive");
  dpi_ = dpi;
}

// Mask of the valid bits in the last byte of a row.
std::uint8_t BiLevelImage::pad_mask() const noexcept {
  const int used = width_ & 7;
  return used == 0 ? 0xFF : std::uint8_t(0xFF00u >> used);
}

Color BiLevelImage::get(int x, int y) const {
  if (!in_bounds(x, y)) throw std::out_of_range("pixel coordinate out of range");
  return black_at(x, y) ? Color::black : Color::white;
}

void BiLevelImage::set(int x, int y, Color c) {
  if (!in_bounds(x, y)) throw std::out_of_range("pixel coordinate out of range");
  put(x, y, c);
}

void BiLevelImage::load_row(int y, std::span<const std::uint8_t> packed) {
  if (y < 0 || y >= height_ || packed.size() < stride_)
    throw std::out_of_range("row out of range");
  auto dst = bits_.begin() + static_cast<std::ptrdiff_t>(y * stride_);
  std::copy_n(packed.begin(), stride_, dst);
  dst[static_cast<std::ptrdiff_t>(stride_ - 1)] &= pad_mask();
}

void BiLevelImage::invert() {
  for (auto& b : bits_) b = std::uint8_t(~b);
  const std::uint8_t last = pad_mask();
  for (int y = 0; y < height_; ++y) bits_[y * stride_ + stride_ - 1] &= last;
}

std::int64_t count_black(const BiLevelImage& img) noexcept {
  std::int64_t n = 0;
  for (std::uint8_t b : img.bytes()) n += std::popcount(b);
  return n;
}

bool padding_clear(const BiLevelImage& img) noexcept {
  const int used = img.width() & 7;
  if (used == 0) return true;
  const std::uint8_t pad = std::uint8_t(0xFFu >> used);
  for (int y = 0; y < img.height(); ++y)
    if (img.row(y).back() & pad) return false;
  return true;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

BiLevelImage load_image(const std::string& path) {
  const auto data = read_file(path);
  if (data.size() >= 2 && data[0] == 'P') return read_pbm(data);
  if (data.size() >= 2 && ((data[0] == 'I' && data[1] == 'I') ||
                           (data[0] == 'M' && data[1] == 'M')))
    return read_tiff_bilevel(data);
  throw ParseError(ParseError::Kind::bad_magic,
                   path + ": not a PBM or TIFF file");
}

}  // namespace docdeg
