#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <set>
#include <vector>

#include "ransom/rng.hpp"

using ransom::RngStream;

TEST_CASE("same seed and stream give the same sequence") {
  RngStream a(42, 3), b(42, 3);
  for (int i = 0; i < 1000; ++i) CHECK(a() == b());
}

TEST_CASE("different seeds or streams diverge") {
  RngStream a(1), b(2), c(1, 1);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a(), y = b(), z = c();
    same_ab += x == y;
    same_ac += x == z;
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("substreams depend only on seed and index") {
  RngStream parent(7);
  for (int i = 0; i < 50; ++i) (void)parent();  // advancing the parent must not matter
  RngStream s1 = parent.substream(5);
  RngStream s2 = RngStream(7).substream(5);
  for (int i = 0; i < 100; ++i) CHECK(s1() == s2());

  std::set<std::uint64_t> firsts;
  for (std::uint64_t k = 0; k < 10000; ++k) firsts.insert(RngStream(7).substream(k)());
  CHECK(firsts.size() == 10000);
}

TEST_CASE("uniform_open stays inside (0, 1) with the right moments") {
  RngStream rng(99);
  const int n = 200000;
  double sum = 0, sum2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform_open();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sum2 += u * u;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
  CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.01));
}

TEST_CASE("bernoulli clamps and skips draws at the extremes") {
  RngStream rng(5);
  CHECK_FALSE(rng.bernoulli(0.0));
  CHECK_FALSE(rng.bernoulli(-1.0));
  CHECK(rng.bernoulli(1.0));
  CHECK(rng.bernoulli(2.0));
  CHECK(rng.counter() == 0);

  int hits = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) hits += rng.bernoulli(0.3);
  CHECK(std::abs(hits / double(n) - 0.3) < 4.0 * std::sqrt(0.21 / n));
}
