// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "docdeg/rng.hpp"

using namespace docdeg;

TEST_CASE("SplitMix64 reference sequence for seed 0") {
  // Checked against an independent SplitMix64 implementation.
  Rng rng(0);
  CHECK(uniform_u64(rng) == 0xE220A8397B1DCDAFull);
  CHECK(uniform_u64(rng) == 0x6E789E6AA1B965F4ull);
  CHECK(uniform_u64(rng) == 0x06C45D188009454Full);
}

TEST_CASE("identical seeds give identical streams") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    differs |= x != c.next_u64();
    CHECK(a.normal(1, 2) == b.normal(1, 2));
  }
  CHECK(differs);
}

TEST_CASE("normal with sd 0 is the mean and still consumes two draws") {
  Rng rng(7), shadow(7);
  CHECK(normal(rng, 0, 0) == 0.0);
  CHECK(normal(rng, 3.5, 0) == 3.5);
  for (int i = 0; i < 4; ++i) shadow.next_u64();
  CHECK(rng.state() == shadow.state());
}

TEST_CASE("below stays in range") {
  Rng rng(99);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 2550ull, 3300ull}) {
    for (int i = 0; i < 2000; ++i) CHECK(rng.below(bound) < bound);
  }
}

TEST_CASE("unit_open_closed excludes zero") {
  Rng rng(5);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.unit_open_closed();
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
  }
}

TEST_CASE("standard normal moments over 1e6 draws") {
  Rng rng(2024);
  constexpr int n = 1'000'000;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < n; ++i) {
    const double z = normal(rng, 0, 1);
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / n;
  const double sd = std::sqrt(sum_sq / n - mean * mean);
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(sd - 1.0) < 0.01);
}

TEST_CASE("below is the high word of draw * bound") {
  // Frozen from arbitrary-precision arithmetic on the first seed-0 draw.
  CHECK(Rng(0).below(3300) == 2914);
  CHECK(Rng(0).below(2550) == 2252);
  CHECK(Rng(0).below(7) == 6);
  CHECK(Rng(0).below(1ull << 63) == 8147104208329303767ull);
}
