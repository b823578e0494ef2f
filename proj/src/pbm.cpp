// SPDX-License-Identifier: Apache-2.0
#include <cctype>
#include <string>

#include "docdeg/errors.hpp"
#include "docdeg/raster.hpp"

namespace docdeg {

namespace {

using Kind = ParseError::Kind;

class HeaderCursor {
public:
  explicit HeaderCursor(std::span<const std::uint8_t> data) : data_(data) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= data_.size(); }
  std::uint8_t peek() const { return data_[pos_]; }
  void advance() { ++pos_; }

  void skip_space_and_comments() {
    while (!at_end()) {
      if (peek() == '#') {
        while (!at_end() && peek() != '\n' && peek() != '\r') advance();
      } else if (std::isspace(peek())) {
        advance();
      } else {
        return;
      }
    }
  }

  int read_dimension(const char* name) {
    skip_space_and_comments();
    if (at_end())
      throw ParseError(Kind::truncated, std::string("PBM: missing ") + name);
    if (peek() == '-' || peek() == '+')
      throw ParseError(Kind::bad_dimensions,
                       std::string("PBM: non-positive ") + name);
    if (!std::isdigit(peek()))
      throw ParseError(Kind::malformed, std::string("PBM: bad ") + name);
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(peek())) {
      v = v * 10 + (peek() - '0');
      if (v > (std::int64_t{1} << 31))
        throw ParseError(Kind::bad_dimensions,
                         std::string("PBM: ") + name + " too large");
      advance();
    }
    if (v < 1)
      throw ParseError(Kind::bad_dimensions,
                       std::string("PBM: non-positive ") + name);
    return static_cast<int>(v);
  }

private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

BiLevelImage make_image(int w, int h) {
  try {
    return BiLevelImage(w, h);
  } catch (const std::invalid_argument& e) {
    throw ParseError(Kind::bad_dimensions, std::string("PBM: ") + e.what());
  }
}

}  // namespace

BiLevelImage read_pbm(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '1' && data[1] != '4'))
    throw ParseError(Kind::bad_magic, "PBM: bad magic number");
  const bool binary = data[1] == '4';

  HeaderCursor cur(data);
  cur.advance();
  cur.advance();
  if (!cur.at_end() && !std::isspace(cur.peek()) && cur.peek() != '#')
    throw ParseError(Kind::bad_magic, "PBM: bad magic number");
  const int w = cur.read_dimension("width");
  const int h = cur.read_dimension("height");
  BiLevelImage img = make_image(w, h);

  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (cur.at_end() || !std::isspace(cur.peek()))
      throw ParseError(Kind::truncated, "PBM: truncated header");
    cur.advance();
    const std::size_t need = img.stride() * static_cast<std::size_t>(h);
    if (data.size() - cur.pos() < need)
      throw ParseError(Kind::truncated, "PBM: truncated raster");
    for (int y = 0; y < h; ++y)
      img.load_row(y, data.subspan(cur.pos() + y * img.stride(), img.stride()));
    return img;
  }

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      cur.skip_space_and_comments();
      if (cur.at_end()) throw ParseError(Kind::truncated, "PBM: truncated raster");
      const std::uint8_t c = cur.peek();
      if (c != '0' && c != '1')
        throw ParseError(Kind::malformed, "PBM: unexpected character in raster");
      if (c == '1') img.put(x, y, Color::black);
      cur.advance();
    }
  }
  return img;
}

std::vector<std::uint8_t> write_pbm(const BiLevelImage& img) {
  const std::string header = "P4\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto raster = img.bytes();
  out.insert(out.end(), raster.begin(), raster.end());
  return out;
}

}  // namespace docdeg
