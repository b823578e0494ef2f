// SPDX-License-Identifier: Apache-2.0
#include "docdeg/cluster.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "docdeg/csv.hpp"

namespace docdeg {

namespace {

class DisjointSets {
public:
  std::int32_t make() {
    parent_.push_back(static_cast<std::int32_t>(parent_.size()));
    return parent_.back();
  }

  std::int32_t find(std::int32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

  std::size_t size() const { return parent_.size(); }

private:
  std::vector<std::int32_t> parent_;
};

}  // namespace

std::vector<std::int64_t> component_sizes(const BiLevelImage& img, Color color,
                                          Connectivity connectivity) {
  const int w = img.width(), h = img.height();
  const bool want_black = color == Color::black;
  const bool diagonal = connectivity == Connectivity::eight;
  constexpr std::int32_t kNone = -1;

  // Provisional labels per pixel; sizes are tallied per root afterwards.
  std::vector<std::int32_t> labels(static_cast<std::size_t>(w) * h, kNone);
  DisjointSets sets;

  for (int y = 0; y < h; ++y) {
    std::int32_t* cur = labels.data() + static_cast<std::size_t>(y) * w;
    const std::int32_t* up = y > 0 ? cur - w : nullptr;
    for (int x = 0; x < w; ++x) {
      if (img.black_at(x, y) != want_black) continue;
      std::int32_t label = kNone;
      auto join = [&](std::int32_t other) {
        if (other == kNone) return;
        if (label == kNone)
          label = other;
        else
          sets.unite(label, other);
      };
      if (x > 0) join(cur[x - 1]);
      if (up) {
        join(up[x]);
        if (diagonal) {
          if (x > 0) join(up[x - 1]);
          if (x + 1 < w) join(up[x + 1]);
        }
      }
      cur[x] = label == kNone ? sets.make() : label;
    }
  }

  std::vector<std::int64_t> counts(sets.size(), 0);
  for (const auto l : labels)
    if (l != kNone) ++counts[sets.find(l)];

  std::vector<std::int64_t> sizes;
  for (const auto c : counts)
    if (c > 0) sizes.push_back(c);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

ClusterAnalysis analyze(const BiLevelImage& img, Connectivity connectivity) {
  ClusterAnalysis a;
  a.connectivity = connectivity;
  a.black_sizes = component_sizes(img, Color::black, connectivity);
  a.white_sizes = component_sizes(img, Color::white, complement(connectivity));
  return a;
}

PageFeatures features_from_sizes(const std::vector<std::int64_t>& black_sizes) {
  PageFeatures f;
  for (const auto s : black_sizes) {
    if (s <= kSpeckleLowMax) ++f.bsfl;
    if (s > kSpeckleHighMin) ++f.bsfh;
    f.total_black_pixels += s;
  }
  f.total_black_clusters = static_cast<std::int64_t>(black_sizes.size());
  return f;
}

PageFeatures features(const ClusterAnalysis& analysis) {
  return features_from_sizes(analysis.black_sizes);
}

std::int64_t Histogram::total() const noexcept {
  std::int64_t n = 0;
  for (const auto& b : bins) n += b.count;
  return n;
}

Histogram histogram(const std::vector<std::int64_t>& sizes, std::int64_t bin_width) {
  if (bin_width < 1) throw std::invalid_argument("bin_width must be >= 1");
  Histogram hist;
  hist.bin_width = bin_width;
  if (sizes.empty()) return hist;
  const auto largest = *std::max_element(sizes.begin(), sizes.end());
  const auto n_bins = (largest - 1) / bin_width + 1;
  hist.bins.reserve(static_cast<std::size_t>(n_bins));
  for (std::int64_t k = 0; k < n_bins; ++k) hist.bins.push_back({k * bin_width + 1, 0});
  for (const auto s : sizes) {
    if (s < 1) throw std::invalid_argument("cluster size must be >= 1");
    ++hist.bins[static_cast<std::size_t>((s - 1) / bin_width)].count;
  }
  return hist;
}

namespace {

// Sparse bin index -> count; avoids materialising bins for the huge white
// background component.
std::map<std::int64_t, std::int64_t> sparse_bins(const std::vector<std::int64_t>& sizes,
                                                 std::int64_t bin_width) {
  std::map<std::int64_t, std::int64_t> bins;
  for (const auto s : sizes) ++bins[(s - 1) / bin_width];
  return bins;
}

}  // namespace

AnalysisDelta compare(const ClusterAnalysis& a, const ClusterAnalysis& b,
                      std::int64_t bin_width) {
  if (a.connectivity != b.connectivity)
    throw std::invalid_argument("cannot compare analyses with different connectivity");
  if (bin_width < 1) throw std::invalid_argument("bin_width must be >= 1");
  const auto fa = features(a), fb = features(b);
  AnalysisDelta d;
  d.bsfl = fb.bsfl - fa.bsfl;
  d.bsfh = fb.bsfh - fa.bsfh;
  d.total_clusters = fb.total_black_clusters - fa.total_black_clusters;
  d.black_pixels = fb.total_black_pixels - fa.total_black_pixels;
  d.bin_width = bin_width;

  auto ha = sparse_bins(a.black_sizes, bin_width);
  const auto hb = sparse_bins(b.black_sizes, bin_width);
  for (const auto& [k, n] : hb) ha[k] -= n;
  for (const auto& [k, n] : ha)
    if (n != 0) d.bins.push_back({k * bin_width + 1, -n});
  return d;
}

std::string histogram_csv(const ClusterAnalysis& a, std::int64_t bin_width) {
  if (bin_width < 1) throw std::invalid_argument("bin_width must be >= 1");
  const auto black = sparse_bins(a.black_sizes, bin_width);
  const auto white = sparse_bins(a.white_sizes, bin_width);
  std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> rows;
  for (const auto& [k, n] : black) rows[k].first = n;
  for (const auto& [k, n] : white) rows[k].second = n;

  std::string out = "bin_lower,bin_upper,black_count,white_count\n";
  for (const auto& [k, counts] : rows) {
    out += std::to_string(k * bin_width + 1) + ',' +
           std::to_string((k + 1) * bin_width) + ',' +
           std::to_string(counts.first) + ',' + std::to_string(counts.second) + '\n';
  }
  return out;
}

std::string features_csv_header() {
  return "page_id,bsfl,bsfh,total_black_clusters,total_black_pixels\n";
}

std::string features_csv_row(const std::string& page_id, const PageFeatures& f) {
  return csv::quote(page_id) + ',' + std::to_string(f.bsfl) + ',' +
         std::to_string(f.bsfh) + ',' + std::to_string(f.total_black_clusters) + ',' +
         std::to_string(f.total_black_pixels) + '\n';
}

}  // namespace docdeg
