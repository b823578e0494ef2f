// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "docdeg/raster.hpp"
#include "docdeg/rng.hpp"

namespace docdeg {

enum class GlyphStyle { solid_rect, ring, random_blocky };

/// Layout of a synthetic "perfect" page: a grid of glyph-like shapes.
/// The defaults give a letter-size 300 dpi page of 12x16 solid glyphs
/// (192 px each, inside the (10, 300] band) spaced far enough apart that
/// boundary growth of up to 3 px cannot join neighbours.
struct PageSpec {
  int width = 2550;
  int height = 3300;
  int margin = 150;
  int glyph_width = 12;
  int glyph_height = 16;
  int glyphs_per_line = 100;
  int lines = 40;
  int glyph_gap = 8;  // >= 2
  int line_gap = 40;  // >= 2
  GlyphStyle style = GlyphStyle::solid_rect;
  std::uint64_t seed = 0;

  /// Throws LayoutError when the grid does not fit or a field is out of range.
  void validate() const;
};

/// Glyphs are placed row-major from (margin, margin). Each glyph is a single
/// 8-connected component. Only random_blocky draws from `rng`.
BiLevelImage generate(const PageSpec& spec, Rng& rng);

inline BiLevelImage generate(const PageSpec& spec) {
  Rng rng(spec.seed);
  return generate(spec, rng);
}

// JSON object with the PageSpec field names; "style" is one of
// "solid-rect", "ring", "random-blocky". Missing fields keep their defaults.
PageSpec page_spec_from_json(const std::string& text);
std::string page_spec_to_json(const PageSpec& spec);

}  // namespace docdeg
