// SPDX-License-Identifier: Apache-2.0
#include "docdeg/synthpage.hpp"

#include <algorithm>
#include <json.hpp>
#include <vector>

#include "docdeg/errors.hpp"

namespace docdeg {

void PageSpec::validate() const {
  if (width < 1 || height < 1) throw LayoutError("page dimensions must be positive");
  if (margin < 0) throw LayoutError("margin must be >= 0");
  if (glyph_width < 1 || glyph_height < 1) throw LayoutError("glyph area must be >= 1");
  if (glyphs_per_line < 0 || lines < 0) throw LayoutError("glyph counts must be >= 0");
  if (glyph_gap < 2 || line_gap < 2) throw LayoutError("glyph and line gaps must be >= 2");
  auto extent = [](std::int64_t n, std::int64_t size, std::int64_t gap) {
    return n == 0 ? 0 : n * size + (n - 1) * gap;
  };
  if (2 * std::int64_t{margin} + extent(glyphs_per_line, glyph_width, glyph_gap) > width)
    throw LayoutError("glyphs do not fit across the page");
  if (2 * std::int64_t{margin} + extent(lines, glyph_height, line_gap) > height)
    throw LayoutError("lines do not fit down the page");
}

namespace {

void fill_rect(BiLevelImage& img, int x0, int y0, int w, int h) {
  for (int y = y0; y < y0 + h; ++y)
    for (int x = x0; x < x0 + w; ++x) img.put(x, y, Color::black);
}

void draw_ring(BiLevelImage& img, int x0, int y0, int w, int h) {
  const int t = std::max(1, std::min(w, h) / 4);
  if (w <= 2 * t || h <= 2 * t) return fill_rect(img, x0, y0, w, h);
  fill_rect(img, x0, y0, w, t);
  fill_rect(img, x0, y0 + h - t, w, t);
  fill_rect(img, x0, y0 + t, t, h - 2 * t);
  fill_rect(img, x0 + w - t, y0 + t, t, h - 2 * t);
}

// Random walk over a coarse cell grid; consecutive cells share an edge, so
// the union is 4-connected (hence 8-connected).
void draw_blocky(BiLevelImage& img, int x0, int y0, int w, int h, Rng& rng) {
  const int cell = std::max(1, std::min(w, h) / 4);
  const int cols = std::max(1, w / cell), rows = std::max(1, h / cell);
  const int cw = std::min(cell, w), ch = std::min(cell, h);
  const int target = std::max(1, (cols * rows * 3 + 4) / 5);
  std::vector<char> filled(static_cast<std::size_t>(cols * rows), 0);
  int cx = cols / 2, cy = rows / 2, n = 0;
  for (long steps = 0; n < target && steps < 64L * cols * rows + 64; ++steps) {
    auto& f = filled[static_cast<std::size_t>(cy * cols + cx)];
    if (!f) {
      f = 1;
      ++n;
      fill_rect(img, x0 + cx * cw, y0 + cy * ch, cw, ch);
    }
    switch (rng.below(4)) {
      case 0: cx = std::min(cols - 1, cx + 1); break;
      case 1: cx = std::max(0, cx - 1); break;
      case 2: cy = std::min(rows - 1, cy + 1); break;
      default: cy = std::max(0, cy - 1); break;
    }
  }
}

const char* style_name(GlyphStyle s) {
  switch (s) {
    case GlyphStyle::ring: return "ring";
    case GlyphStyle::random_blocky: return "random-blocky";
    default: return "solid-rect";
  }
}

}  // namespace

BiLevelImage generate(const PageSpec& spec, Rng& rng) {
  spec.validate();
  BiLevelImage img(spec.width, spec.height);
  for (int line = 0; line < spec.lines; ++line) {
    const int y0 = spec.margin + line * (spec.glyph_height + spec.line_gap);
    for (int g = 0; g < spec.glyphs_per_line; ++g) {
      const int x0 = spec.margin + g * (spec.glyph_width + spec.glyph_gap);
      switch (spec.style) {
        case GlyphStyle::solid_rect:
          fill_rect(img, x0, y0, spec.glyph_width, spec.glyph_height);
          break;
        case GlyphStyle::ring:
          draw_ring(img, x0, y0, spec.glyph_width, spec.glyph_height);
          break;
        case GlyphStyle::random_blocky:
          draw_blocky(img, x0, y0, spec.glyph_width, spec.glyph_height, rng);
          break;
      }
    }
  }
  return img;
}

PageSpec page_spec_from_json(const std::string& text) {
  PageSpec s;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object())
      throw ParseError(ParseError::Kind::malformed, "page spec must be a JSON object");
    auto get_int = [&](const char* key, int& out) {
      if (const auto it = j.find(key); it != j.end()) out = it->get<int>();
    };
    get_int("width", s.width);
    get_int("height", s.height);
    get_int("margin", s.margin);
    get_int("glyph_width", s.glyph_width);
    get_int("glyph_height", s.glyph_height);
    get_int("glyphs_per_line", s.glyphs_per_line);
    get_int("lines", s.lines);
    get_int("glyph_gap", s.glyph_gap);
    get_int("line_gap", s.line_gap);
    if (const auto it = j.find("seed"); it != j.end()) s.seed = it->get<std::uint64_t>();
    if (const auto it = j.find("style"); it != j.end()) {
      const auto name = it->get<std::string>();
      if (name == "solid-rect")
        s.style = GlyphStyle::solid_rect;
      else if (name == "ring")
        s.style = GlyphStyle::ring;
      else if (name == "random-blocky")
        s.style = GlyphStyle::random_blocky;
      else
        throw ParseError(ParseError::Kind::malformed, "page spec: unknown style '" + name + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseError::Kind::malformed, std::string("page spec: ") + e.what());
  }
  return s;
}

std::string page_spec_to_json(const PageSpec& s) {
  const nlohmann::ordered_json j = {
      {"width", s.width},         {"height", s.height},
      {"margin", s.margin},       {"glyph_width", s.glyph_width},
      {"glyph_height", s.glyph_height}, {"glyphs_per_line", s.glyphs_per_line},
      {"lines", s.lines},         {"glyph_gap", s.glyph_gap},
      {"line_gap", s.line_gap},   {"style", style_name(s.style)},
      {"seed", s.seed}};
  return j.dump(2) + "\n";
}

}  // namespace docdeg
