// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "docdeg/cluster.hpp"
#include "docdeg/noise.hpp"
#include "docdeg/synthpage.hpp"
#include "oracles.hpp"

using namespace docdeg;

namespace {

std::int64_t sum(const std::vector<std::int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

}  // namespace

TEST_CASE("all-white image") {
  const auto a = analyze(new_blank(7, 5));
  CHECK(a.black_sizes.empty());
  CHECK(a.white_sizes == std::vector<std::int64_t>{35});
}

TEST_CASE("diagonal pair depends on connectivity") {
  auto img = new_blank(3, 3);
  img.set(0, 0, Color::black);
  img.set(1, 1, Color::black);
  CHECK(analyze(img, Connectivity::eight).black_sizes == std::vector<std::int64_t>{2});
  CHECK(analyze(img, Connectivity::four).black_sizes == std::vector<std::int64_t>{1, 1});
  CHECK(analyze(img, Connectivity::eight).white_sizes == std::vector<std::int64_t>{7});
}

TEST_CASE("white uses complementary connectivity") {
  // A black 4-ring around one white pixel: under black-8 the hole is its own
  // 4-connected white component.
  auto img = new_blank(5, 5);
  for (int i = 1; i <= 3; ++i) {
    img.set(i, 1, Color::black);
    img.set(i, 3, Color::black);
    img.set(1, i, Color::black);
    img.set(3, i, Color::black);
  }
  const auto a8 = analyze(img, Connectivity::eight);
  CHECK(a8.black_sizes == std::vector<std::int64_t>{8});
  CHECK(a8.white_sizes == std::vector<std::int64_t>{1, 16});

  // Remove corners: black-4 sees four arms, white-8 leaks the hole outside.
  img.set(1, 1, Color::white);
  img.set(3, 3, Color::white);
  img.set(1, 3, Color::white);
  img.set(3, 1, Color::white);
  const auto a4 = analyze(img, Connectivity::four);
  CHECK(a4.black_sizes == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(a4.white_sizes == std::vector<std::int64_t>{21});
}

TEST_CASE("labeling matches recursive flood fill") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int w = 1 + int(seed % 32), h = 1 + int((seed * 7) % 32);
    const auto img = oracle::random_image(w, h, seed, 0.2 + 0.6 * double(seed % 5) / 4);
    const auto grid = oracle::to_grid(img);
    for (auto conn : {Connectivity::four, Connectivity::eight}) {
      const bool diag = conn == Connectivity::eight;
      const auto a = analyze(img, conn);
      REQUIRE(a.black_sizes == oracle::flood_fill_sizes(grid, 1, diag));
      REQUIRE(a.white_sizes == oracle::flood_fill_sizes(grid, 0, !diag));
      CHECK(sum(a.black_sizes) == count_black(img));
      CHECK(sum(a.white_sizes) == count_white(img));
    }
  }
}

TEST_CASE("analysis is translation invariant") {
  const auto small = oracle::random_image(20, 15, 3, 0.4);
  const auto ref = analyze(small);
  auto big = new_blank(37, 29);
  for (int y = 0; y < 15; ++y)
    for (int x = 0; x < 20; ++x) big.set(x + 9, y + 11, small.get(x, y));
  CHECK(analyze(big).black_sizes == ref.black_sizes);
}

TEST_CASE("features thresholds") {
  const auto f = features_from_sizes({5, 10, 11, 300, 301});
  CHECK(f.bsfl == 2);
  CHECK(f.bsfh == 1);
  CHECK(f.total_black_clusters == 5);
  CHECK(f.total_black_pixels == 627);

  CHECK(features(ClusterAnalysis{}) == PageFeatures{});

  std::vector<std::int64_t> sizes = {301, 1, 50, 9, 1000, 10, 11};
  const auto ref = features_from_sizes(sizes);
  std::reverse(sizes.begin(), sizes.end());
  CHECK(features_from_sizes(sizes) == ref);
  std::rotate(sizes.begin(), sizes.begin() + 3, sizes.end());
  CHECK(features_from_sizes(sizes) == ref);
}

TEST_CASE("features of a degraded page match direct counting over flood fill") {
  PageSpec s;
  s.width = 300;
  s.height = 200;
  s.margin = 10;
  s.glyphs_per_line = 14;
  s.lines = 5;
  s.line_gap = 20;
  auto page = degraded(generate(s), DegradationRecipe::paper_default(11));
  const auto sizes = oracle::flood_fill_sizes(oracle::to_grid(page), 1, true);
  PageFeatures expect;
  for (auto v : sizes) {
    expect.bsfl += v <= 10;
    expect.bsfh += v > 300;
    expect.total_black_pixels += v;
  }
  expect.total_black_clusters = std::int64_t(sizes.size());
  CHECK(features(analyze(page)) == expect);
}

TEST_CASE("histogram") {
  const auto h = histogram(std::vector<std::int64_t>{1, 2, 3}, 10);
  REQUIRE(h.bins.size() == 1);
  CHECK(h.bins[0].lower == 1);
  CHECK(h.bins[0].count == 3);

  const auto h2 = histogram(std::vector<std::int64_t>{5, 150, 400}, 100);
  REQUIRE(h2.bins.size() == 4);
  CHECK(h2.bins[0].count == 1);
  CHECK(h2.bins[1].count == 1);
  CHECK(h2.bins[2].count == 0);
  CHECK(h2.bins[3].count == 1);
  CHECK(h2.bins[3].lower == 301);

  CHECK(histogram(std::vector<std::int64_t>{10, 11}, 10).bins.size() == 2);
  CHECK(histogram(std::vector<std::int64_t>{}, 10).bins.empty());
  CHECK_THROWS_AS(histogram(std::vector<std::int64_t>{1}, 0), std::invalid_argument);
}

TEST_CASE("histogram matches a per-size loop") {
  std::uint64_t s = 17;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int64_t> sizes;
    for (int i = 0; i < 200; ++i) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      sizes.push_back(1 + std::int64_t((s >> 33) % 700));
    }
    const std::int64_t bw = 1 + trial % 37;
    const auto h = histogram(sizes, bw);
    CHECK(h.total() == 200);
    for (const auto& bin : h.bins) {
      std::int64_t n = 0;
      for (auto v : sizes) n += v >= bin.lower && v <= bin.lower + bw - 1;
      CHECK(bin.count == n);
    }
  }
}

TEST_CASE("compare") {
  const auto img = oracle::random_image(30, 30, 8, 0.3);
  const auto a = analyze(img);
  CHECK(compare(a, a).is_zero());

  auto grown = img;
  Rng rng(8);
  apply_copy_noise(grown, {1, 4.0, 0}, rng);
  const auto d = compare(a, analyze(grown));
  CHECK(d.total_clusters <= 0);
  CHECK(d.black_pixels >= 0);

  CHECK_THROWS_AS(compare(a, analyze(img, Connectivity::four)), std::invalid_argument);
}

TEST_CASE("compare bins are signed differences") {
  ClusterAnalysis a, b;
  a.black_sizes = {5, 150};
  b.black_sizes = {3, 4, 400};
  const auto d = compare(a, b, 100);
  CHECK(d.bsfl == 1);
  CHECK(d.bsfh == 1);
  CHECK(d.total_clusters == 1);
  CHECK(d.black_pixels == 252);
  REQUIRE(d.bins.size() == 3);
  CHECK(d.bins[0].lower == 1);
  CHECK(d.bins[0].delta == 1);
  CHECK(d.bins[1].lower == 101);
  CHECK(d.bins[1].delta == -1);
  CHECK(d.bins[2].lower == 301);
  CHECK(d.bins[2].delta == 1);
}

TEST_CASE("degradation raises bsfl on a glyph page") {
  PageSpec s;
  s.width = 850;
  s.height = 1100;
  s.margin = 50;
  s.glyphs_per_line = 35;
  s.lines = 14;
  const auto perfect = generate(s);
  const auto a = analyze(perfect);
  CHECK(features(a).bsfl == 0);
  CHECK(features(a).bsfh == 0);
  const auto b = analyze(degraded(perfect, DegradationRecipe::paper_default(42)));
  CHECK(compare(a, b).bsfl > 0);
}

TEST_CASE("CSV exports") {
  ClusterAnalysis a;
  a.black_sizes = {3, 12};
  a.white_sizes = {1, 500};
  CHECK(histogram_csv(a, 10) ==
        "bin_lower,bin_upper,black_count,white_count\n"
        "1,10,1,1\n"
        "11,20,1,0\n"
        "491,500,0,1\n");
  CHECK(features_csv_header() == "page_id,bsfl,bsfh,total_black_clusters,total_black_pixels\n");
  CHECK(features_csv_row("p1", {1, 2, 3, 4}) == "p1,1,2,3,4\n");
  CHECK(features_csv_row("a,b", {0, 0, 0, 0}) == "\"a,b\",0,0,0,0\n");
}
