// SPDX-License-Identifier: Apache-2.0
#include "docdeg/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace docdeg {

std::int64_t BlobSize::resolve(std::int64_t pixels) const {
  if (form == Form::count) return static_cast<std::int64_t>(value);
  return std::max<std::int64_t>(1, std::llround(value * double(pixels)));
}

namespace {

void validate(const BlobParams& p) {
  if (p.blob_count < 0) throw std::invalid_argument("blob_count must be >= 0");
  if (!(p.spread >= 0)) throw std::invalid_argument("spread must be >= 0");
  const auto& s = p.pixels_per_blob;
  if (s.form == BlobSize::Form::fraction && !(s.value > 0 && s.value <= 1))
    throw std::invalid_argument("blob fraction must be in (0, 1]");
  if (s.form == BlobSize::Form::count &&
      !(s.value >= 0 && s.value == std::floor(s.value)))
    throw std::invalid_argument("blob pixel count must be a non-negative integer");
}

void validate(const CopyNoiseParams& p) {
  if (p.growth < 0) throw std::invalid_argument("growth must be >= 0");
  if (!(p.sd >= 0)) throw std::invalid_argument("sd must be >= 0");
  if (p.max_depth < 0 || (p.max_depth > 0 && p.max_depth < p.growth))
    throw std::invalid_argument("max_depth must be >= growth");
}

std::int64_t round_half_away(double v) { return std::llround(v); }

}  // namespace

void apply_pixel_noise(BiLevelImage& img, const PixelNoiseParams& p, Rng& rng) {
  if (p.count < 0) throw std::invalid_argument("pixel count must be >= 0");
  for (std::int64_t i = 0; i < p.count; ++i) {
    const auto x = static_cast<int>(rng.below(std::uint64_t(img.width())));
    const auto y = static_cast<int>(rng.below(std::uint64_t(img.height())));
    img.put(x, y, Color::black);
  }
}

void apply_blobs(BiLevelImage& img, const BlobParams& p, Rng& rng) {
  validate(p);
  const std::int64_t per_blob = p.pixels_per_blob.resolve(img.pixel_count());
  for (std::int64_t b = 0; b < p.blob_count; ++b) {
    const auto cx = static_cast<std::int64_t>(rng.below(std::uint64_t(img.width())));
    const auto cy = static_cast<std::int64_t>(rng.below(std::uint64_t(img.height())));
    for (std::int64_t i = 0; i < per_blob; ++i) {
      const auto dx = round_half_away(rng.normal(0, p.spread));
      const auto dy = round_half_away(rng.normal(0, p.spread));
      const auto x = cx + dx, y = cy + dy;
      if (img.in_bounds(x, y)) img.put(int(x), int(y), p.color);
    }
  }
}

void apply_copy_noise(BiLevelImage& img, const CopyNoiseParams& p, Rng& rng) {
  validate(p);
  const int max_depth = p.effective_max_depth();
  const BiLevelImage original = img;
  const int w = img.width(), h = img.height();

  auto is_boundary = [&](int x, int y) {
    for (int ny = std::max(0, y - 1); ny <= std::min(h - 1, y + 1); ++ny)
      for (int nx = std::max(0, x - 1); nx <= std::min(w - 1, x + 1); ++nx)
        if (!original.black_at(nx, ny)) return true;
    return false;
  };

  for (int y = 0; y < h; ++y) {
    const auto row = original.row(y);
    for (int xb = 0; xb < static_cast<int>(row.size()); ++xb) {
      if (row[xb] == 0) continue;
      for (int x = xb * 8; x < std::min(w, xb * 8 + 8); ++x) {
        if (!original.black_at(x, y) || !is_boundary(x, y)) continue;
        const auto drawn = round_half_away(rng.normal(p.growth, p.sd));
        const int d = static_cast<int>(std::clamp<std::int64_t>(drawn, 0, max_depth));
        if (d == 0) continue;
        for (int ty = std::max(0, y - d); ty <= std::min(h - 1, y + d); ++ty)
          for (int tx = std::max(0, x - d); tx <= std::min(w - 1, x + d); ++tx)
            img.put(tx, ty, Color::black);
      }
    }
  }
}

DegradationRecipe DegradationRecipe::paper_default(std::uint64_t seed) {
  DegradationRecipe r;
  r.seed = seed;
  r.steps.emplace_back(CopyNoiseParams{1, 4.0, 0});
  r.steps.emplace_back(BlobParams{150, BlobSize::of_page(0.001), 6.0, Color::white});
  return r;
}

void apply_recipe(BiLevelImage& img, const DegradationRecipe& recipe) {
  Rng rng(recipe.seed);
  for (const auto& step : recipe.steps) {
    std::visit(
        [&](const auto& params) {
          using T = std::decay_t<decltype(params)>;
          if constexpr (std::is_same_v<T, PixelNoiseParams>)
            apply_pixel_noise(img, params, rng);
          else if constexpr (std::is_same_v<T, BlobParams>)
            apply_blobs(img, params, rng);
          else
            apply_copy_noise(img, params, rng);
        },
        step);
  }
}

bool operator==(const BlobSize& a, const BlobSize& b) {
  return a.form == b.form && a.value == b.value;
}
bool operator==(const PixelNoiseParams& a, const PixelNoiseParams& b) {
  return a.count == b.count;
}
bool operator==(const BlobParams& a, const BlobParams& b) {
  return a.blob_count == b.blob_count && a.pixels_per_blob == b.pixels_per_blob &&
         a.spread == b.spread && a.color == b.color;
}
bool operator==(const CopyNoiseParams& a, const CopyNoiseParams& b) {
  return a.growth == b.growth && a.sd == b.sd &&
         a.effective_max_depth() == b.effective_max_depth();
}
bool operator==(const DegradationRecipe& a, const DegradationRecipe& b) {
  return a.seed == b.seed && a.steps == b.steps;
}

}  // namespace docdeg
