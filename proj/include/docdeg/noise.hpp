// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "docdeg/raster.hpp"
#include "docdeg/rng.hpp"

namespace docdeg {

/// Noise type 1: isolated black pixels at uniformly random coordinates.
struct PixelNoiseParams {
  std::int64_t count = 0;
};

/// Blob size either as an absolute draw count or a fraction of page pixels.
struct BlobSize {
  enum class Form { count, fraction };
  Form form = Form::count;
  double value = 1;

  static BlobSize absolute(std::int64_t n) { return {Form::count, double(n)}; }
  static BlobSize of_page(double f) { return {Form::fraction, f}; }

  /// Draws per blob on a page of `pixels`. Fractions round to nearest, min 1.
  std::int64_t resolve(std::int64_t pixels) const;
};

/// Noise type 2: clouds of pixels normally distributed around random centers.
struct BlobParams {
  std::int64_t blob_count = 0;
  BlobSize pixels_per_blob = BlobSize::absolute(1);
  double spread = 0;  // per-axis standard deviation, pixels
  Color color = Color::white;
};

/// Noise type 3: stochastic boundary growth ("copy" blur).
struct CopyNoiseParams {
  int growth = 1;
  double sd = 4;
  int max_depth = 0;  // 0 means 3 * max(growth, 1)

  int effective_max_depth() const {
    return max_depth > 0 ? max_depth : 3 * (growth > 1 ? growth : 1);
  }
};

// Each apply_* validates its params (std::invalid_argument) and mutates in
// place. Draw order is part of the contract: x before y, dx before dy,
// boundary pixels row-major.
void apply_pixel_noise(BiLevelImage& img, const PixelNoiseParams& p, Rng& rng);
void apply_blobs(BiLevelImage& img, const BlobParams& p, Rng& rng);
void apply_copy_noise(BiLevelImage& img, const CopyNoiseParams& p, Rng& rng);

using NoiseStep = std::variant<PixelNoiseParams, BlobParams, CopyNoiseParams>;

struct DegradationRecipe {
  std::uint64_t seed = 0;
  std::vector<NoiseStep> steps;

  /// Copy noise (growth 1, sd 4) followed by 150 white blobs of 0.1% of the
  /// page each with spread 6. No pixel noise.
  static DegradationRecipe paper_default(std::uint64_t seed = 0);

  friend bool operator==(const DegradationRecipe&, const DegradationRecipe&);
};

void apply_recipe(BiLevelImage& img, const DegradationRecipe& recipe);

inline BiLevelImage degraded(BiLevelImage img, const DegradationRecipe& recipe) {
  apply_recipe(img, recipe);
  return img;
}

// JSON: {"seed": n, "steps": [{"type": "pixel"|"blob"|"copy", ...}]}.
// Throws ParseError on malformed input.
DegradationRecipe recipe_from_json(const std::string& text);
std::string recipe_to_json(const DegradationRecipe& recipe);

bool operator==(const BlobSize&, const BlobSize&);
bool operator==(const PixelNoiseParams&, const PixelNoiseParams&);
bool operator==(const BlobParams&, const BlobParams&);
bool operator==(const CopyNoiseParams&, const CopyNoiseParams&);

}  // namespace docdeg
