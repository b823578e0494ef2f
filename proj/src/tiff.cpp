// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "docdeg/errors.hpp"
#include "docdeg/raster.hpp"

namespace docdeg {

namespace {

using Kind = ParseError::Kind;

enum Tag : std::uint16_t {
  kImageWidth = 256,
  kImageLength = 257,
  kBitsPerSample = 258,
  kCompression = 259,
  kPhotometric = 262,
  kFillOrder = 266,
  kStripOffsets = 273,
  kSamplesPerPixel = 277,
  kRowsPerStrip = 278,
  kStripByteCounts = 279,
  kXResolution = 282,
  kResolutionUnit = 296,
  kTileWidth = 322,
  kTileLength = 323,
  kTileOffsets = 324,
  kTileByteCounts = 325,
};

enum FieldType : std::uint16_t { kByte = 1, kShort = 3, kLong = 4, kRational = 5 };

std::size_t type_size(std::uint16_t type) {
  switch (type) {
    case kByte: return 1;
    case kShort: return 2;
    case kLong: return 4;
    case kRational: return 8;
    default: return 0;
  }
}

struct Entry {
  std::uint16_t type;
  std::uint32_t count;
  std::size_t value_pos;  // absolute offset of the first value
};

class TiffBytes {
public:
  explicit TiffBytes(std::span<const std::uint8_t> data) : data_(data) {
    if (data.size() < 8)
      throw ParseError(Kind::truncated, "TIFF: truncated header");
    if (data[0] == 'I' && data[1] == 'I')
      little_ = true;
    else if (data[0] == 'M' && data[1] == 'M')
      little_ = false;
    else
      throw ParseError(Kind::bad_magic, "TIFF: bad byte-order mark");
    const auto version = u16(2);
    if (version == 43) throw UnsupportedFeature("BigTIFF");
    if (version != 42) throw ParseError(Kind::bad_magic, "TIFF: bad version");
  }

  std::size_t size() const { return data_.size(); }

  void require(std::size_t pos, std::size_t n) const {
    if (pos > data_.size() || data_.size() - pos < n)
      throw ParseError(Kind::truncated, "TIFF: offset past end of file");
  }

  std::uint16_t u16(std::size_t pos) const {
    require(pos, 2);
    const std::uint16_t a = data_[pos], b = data_[pos + 1];
    return little_ ? std::uint16_t(a | b << 8) : std::uint16_t(a << 8 | b);
  }

  std::uint32_t u32(std::size_t pos) const {
    require(pos, 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      const std::uint32_t byte = data_[pos + (little_ ? 3 - i : i)];
      v = v << 8 | byte;
    }
    return v;
  }

  std::span<const std::uint8_t> slice(std::size_t pos, std::size_t n) const {
    require(pos, n);
    return data_.subspan(pos, n);
  }

  // Integer value #i of a BYTE/SHORT/LONG entry.
  std::uint32_t integer(const Entry& e, std::uint32_t i) const {
    if (i >= e.count) throw ParseError(Kind::malformed, "TIFF: tag value index");
    switch (e.type) {
      case kByte: require(e.value_pos + i, 1); return data_[e.value_pos + i];
      case kShort: return u16(e.value_pos + 2 * std::size_t{i});
      case kLong: return u32(e.value_pos + 4 * std::size_t{i});
      default: throw ParseError(Kind::malformed, "TIFF: expected integer tag");
    }
  }

  std::optional<double> rational(const Entry& e) const {
    if (e.type != kRational || e.count < 1) return std::nullopt;
    const auto num = u32(e.value_pos);
    const auto den = u32(e.value_pos + 4);
    if (den == 0) return std::nullopt;
    return double(num) / double(den);
  }

private:
  std::span<const std::uint8_t> data_;
  bool little_ = true;
};

}  // namespace

BiLevelImage read_tiff_bilevel(std::span<const std::uint8_t> data) {
  const TiffBytes tiff(data);
  const std::size_t ifd = tiff.u32(4);
  const std::uint16_t n_entries = tiff.u16(ifd);
  tiff.require(ifd + 2, std::size_t{n_entries} * 12 + 4);

  std::map<std::uint16_t, Entry> tags;
  for (std::uint16_t i = 0; i < n_entries; ++i) {
    const std::size_t at = ifd + 2 + std::size_t{i} * 12;
    Entry e{tiff.u16(at + 2), tiff.u32(at + 4), at + 8};
    const std::size_t bytes = type_size(e.type) * e.count;
    if (bytes > 4) e.value_pos = tiff.u32(at + 8);
    tags.emplace(tiff.u16(at), e);
  }
  if (tiff.u32(ifd + 2 + std::size_t{n_entries} * 12) != 0)
    throw UnsupportedFeature("multi-page");

  auto scalar = [&](std::uint16_t tag, std::optional<std::uint32_t> fallback)
      -> std::uint32_t {
    const auto it = tags.find(tag);
    if (it == tags.end()) {
      if (fallback) return *fallback;
      throw ParseError(Kind::malformed,
                       "TIFF: missing required tag " + std::to_string(tag));
    }
    return tiff.integer(it->second, 0);
  };

  if (scalar(kCompression, 1) != 1) throw UnsupportedFeature("compression");
  if (tags.contains(kTileWidth) || tags.contains(kTileLength) ||
      tags.contains(kTileOffsets) || tags.contains(kTileByteCounts))
    throw UnsupportedFeature("tiling");
  if (scalar(kSamplesPerPixel, 1) != 1)
    throw UnsupportedFeature("samples per pixel");
  if (scalar(kBitsPerSample, 1) != 1) throw UnsupportedFeature("bits per sample");
  if (scalar(kFillOrder, 1) != 1) throw UnsupportedFeature("fill order");
  const auto photometric = scalar(kPhotometric, std::nullopt);
  if (photometric > 1) throw UnsupportedFeature("photometric interpretation");

  const auto width = scalar(kImageWidth, std::nullopt);
  const auto height = scalar(kImageLength, std::nullopt);
  if (width < 1 || height < 1 || width > (1u << 20) || height > (1u << 20))
    throw ParseError(Kind::bad_dimensions, "TIFF: bad image dimensions");

  BiLevelImage img = [&] {
    try {
      return BiLevelImage(static_cast<int>(width), static_cast<int>(height));
    } catch (const std::invalid_argument& e) {
      throw ParseError(Kind::bad_dimensions, std::string("TIFF: ") + e.what());
    }
  }();

  const auto offsets_it = tags.find(kStripOffsets);
  if (offsets_it == tags.end())
    throw ParseError(Kind::malformed, "TIFF: missing StripOffsets");
  const Entry& offsets = offsets_it->second;
  const std::uint32_t rows_per_strip =
      std::max<std::uint32_t>(1, std::min(scalar(kRowsPerStrip, 0xFFFFFFFFu), height));
  const std::uint32_t strips = (height + rows_per_strip - 1) / rows_per_strip;
  if (offsets.count < strips)
    throw ParseError(Kind::truncated, "TIFF: too few strip offsets");
  const auto counts_it = tags.find(kStripByteCounts);

  const std::size_t stride = img.stride();
  int y = 0;
  for (std::uint32_t s = 0; s < strips; ++s) {
    const std::uint32_t rows = std::min(rows_per_strip, height - s * rows_per_strip);
    const std::size_t need = stride * rows;
    if (counts_it != tags.end() && counts_it->second.count > s &&
        tiff.integer(counts_it->second, s) < need)
      throw ParseError(Kind::truncated, "TIFF: strip shorter than its rows");
    const auto strip = tiff.slice(tiff.integer(offsets, s), need);
    for (std::uint32_t r = 0; r < rows; ++r, ++y)
      img.load_row(y, strip.subspan(r * stride, stride));
  }

  // WhiteIsZero stores 1 = black, as we do; BlackIsZero needs flipping.
  if (photometric == 1) img.invert();

  if (const auto it = tags.find(kXResolution); it != tags.end()) {
    if (const auto res = tiff.rational(it->second); res && *res > 0) {
      const auto unit = scalar(kResolutionUnit, 2);
      if (unit == 2 || unit == 3) {
        const double dpi = unit == 3 ? *res * 2.54 : *res;
        if (dpi >= 1 && dpi < 1e6) img.set_dpi(static_cast<int>(std::lround(dpi)));
      }
    }
  }
  return img;
}

}  // namespace docdeg
