// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "docdeg/raster.hpp"

namespace docdeg {

enum class Connectivity { four = 4, eight = 8 };

constexpr Connectivity complement(Connectivity c) noexcept {
  return c == Connectivity::four ? Connectivity::eight : Connectivity::four;
}

/// Component sizes of a page. Black uses `connectivity`, white uses the
/// complementary one; the white background is one of the white components.
/// Sizes are sorted ascending.
struct ClusterAnalysis {
  Connectivity connectivity = Connectivity::eight;
  std::vector<std::int64_t> black_sizes;
  std::vector<std::int64_t> white_sizes;

  friend bool operator==(const ClusterAnalysis&, const ClusterAnalysis&) = default;
};

// Speckle thresholds: small clusters are <= 10 px, large ones > 300 px.
constexpr std::int64_t kSpeckleLowMax = 10;
constexpr std::int64_t kSpeckleHighMin = 300;

struct PageFeatures {
  std::int64_t bsfl = 0;  // black clusters of size <= 10
  std::int64_t bsfh = 0;  // black clusters of size > 300
  std::int64_t total_black_clusters = 0;
  std::int64_t total_black_pixels = 0;

  friend bool operator==(const PageFeatures&, const PageFeatures&) = default;
};

struct Histogram {
  struct Bin {
    std::int64_t lower;  // inclusive; bin covers [lower, lower + width - 1]
    std::int64_t count;
    friend bool operator==(const Bin&, const Bin&) = default;
  };
  std::int64_t bin_width = 10;
  std::vector<Bin> bins;  // dense from the first bin up to the largest size

  std::int64_t total() const noexcept;
};

struct AnalysisDelta {
  struct BinDelta {
    std::int64_t lower;
    std::int64_t delta;
  };
  std::int64_t bsfl = 0;
  std::int64_t bsfh = 0;
  std::int64_t total_clusters = 0;
  std::int64_t black_pixels = 0;
  std::int64_t bin_width = 10;
  std::vector<BinDelta> bins;  // only bins whose count changed

  bool is_zero() const noexcept {
    return bsfl == 0 && bsfh == 0 && total_clusters == 0 && black_pixels == 0 &&
           bins.empty();
  }
};

ClusterAnalysis analyze(const BiLevelImage& img,
                        Connectivity connectivity = Connectivity::eight);

/// Component sizes of one color. Exposed for callers that need only black.
std::vector<std::int64_t> component_sizes(const BiLevelImage& img, Color color,
                                          Connectivity connectivity);

PageFeatures features(const ClusterAnalysis& analysis);
PageFeatures features_from_sizes(const std::vector<std::int64_t>& black_sizes);

/// A size s lands in bin (s - 1) / bin_width. Throws for bin_width < 1.
Histogram histogram(const std::vector<std::int64_t>& sizes, std::int64_t bin_width = 10);
inline Histogram histogram(const ClusterAnalysis& a, std::int64_t bin_width = 10) {
  return histogram(a.black_sizes, bin_width);
}

/// b minus a. Throws std::invalid_argument on connectivity mismatch.
AnalysisDelta compare(const ClusterAnalysis& a, const ClusterAnalysis& b,
                      std::int64_t bin_width = 10);

// CSV exports.
//   histogram: bin_lower,bin_upper,black_count,white_count (rows where either
//              count is non-zero)
//   features:  page_id,bsfl,bsfh,total_black_clusters,total_black_pixels
std::string histogram_csv(const ClusterAnalysis& a, std::int64_t bin_width = 10);
std::string features_csv_header();
std::string features_csv_row(const std::string& page_id, const PageFeatures& f);

}  // namespace docdeg
