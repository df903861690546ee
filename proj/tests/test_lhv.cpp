#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "ardehali/bell_operators.hpp"
#include "ardehali/lhv.hpp"
#include "ardehali/types.hpp"
#include "support/oracles.hpp"

using namespace ardehali;

TEST_CASE("strategy_value: hand-checked small cases") {
  CHECK(strategy_value({{1, 1}, {1, 1}}) == 2);
  CHECK(strategy_value({{1, 1, 1}, {1, 1, 1}}) == 4);
  // (1 + i) prefix, last site (-1, +1): 1*(-1-1) + 1*(-1+1) = -2.
  CHECK(strategy_value({{1, -1}, {1, 1}}) == -2);
}

TEST_CASE("strategy_value matches the subset-expansion evaluation") {
  std::mt19937_64 gen(41);
  for (int n = 2; n <= 8; ++n) {
    for (int t = 0; t < 40; ++t) {
      DeterministicStrategy s;
      for (int j = 0; j < n; ++j) {
        s.a.push_back(gen() & 1u ? 1 : -1);
        s.ap.push_back(gen() & 1u ? 1 : -1);
      }
      const std::int64_t v = strategy_value(s);
      CHECK(v == oracles::subset_strategy_value(s));
      CHECK(v % 2 == 0);
    }
  }
}

TEST_CASE("strategy_value validates entries") {
  CHECK_THROWS_AS(strategy_value({{1, 2}, {1, 1}}), Error);
  CHECK_THROWS_AS(strategy_value({{1, 1}, {1}}), Error);
  CHECK_THROWS_AS(strategy_value({{1}, {1}}), Error);
}

TEST_CASE("negating one site's outcomes negates the value") {
  std::mt19937_64 gen(42);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + int(gen() % 5);
    DeterministicStrategy s;
    for (int j = 0; j < n; ++j) {
      s.a.push_back(gen() & 1u ? 1 : -1);
      s.ap.push_back(gen() & 1u ? 1 : -1);
    }
    const std::int64_t base = strategy_value(s);
    const int site = int(gen() % n);
    DeterministicStrategy flipped = s;
    flipped.a[site] = -flipped.a[site];
    flipped.ap[site] = -flipped.ap[site];
    CHECK(strategy_value(flipped) == -base);
  }
}

TEST_CASE("lhv_max equals the closed-form classical bound") {
  CHECK(lhv_max(2) == 2);
  CHECK(lhv_max(3) == 4);
  CHECK(lhv_max(4) == 4);
  for (int n = 2; n <= 10; ++n)
    CHECK(double(lhv_max(n)) == classical_bound(n));
}

TEST_CASE("lhv_max agrees with unpruned brute force on small n") {
  for (int n = 2; n <= 6; ++n)
    CHECK(lhv_max(n) == oracles::brute_force_lhv_max(n));
}

TEST_CASE("lhv_max range errors") {
  try {
    lhv_max(1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
  try {
    lhv_max(13);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EnumerationTooLarge);
  }
}

TEST_CASE("decode_strategy bit layout round trip") {
  // Bits (2j, 2j+1) hold site j+1's outcomes (A then A'), 0 -> +1.
  const DeterministicStrategy s = decode_strategy(2, 0b0110);
  CHECK(s.a == std::vector<int>{1, -1});
  CHECK(s.ap == std::vector<int>{-1, 1});

  const DeterministicStrategy all_plus = decode_strategy(3, 0);
  CHECK(all_plus.a == std::vector<int>{1, 1, 1});
  CHECK(all_plus.ap == std::vector<int>{1, 1, 1});
}

TEST_CASE("mixed strategies: point mass, uniform, random sampling") {
  std::vector<double> point(64, 0.0);
  point[0] = 1.0;  // all outcomes +1
  CHECK(mixed_strategy_value(3, point) == doctest::Approx(4.0).epsilon(1e-15));

  std::vector<double> uniform(16, 1.0 / 16.0);
  CHECK(std::abs(mixed_strategy_value(2, uniform)) <= 1e-14);

  std::mt19937_64 gen(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> w(64);
    double sum = 0.0;
    for (double& wi : w) sum += wi = u(gen);
    for (double& wi : w) wi /= sum;
    CHECK(std::abs(mixed_strategy_value(3, w)) <= 4.0 + 1e-12);
  }
}

TEST_CASE("mixed strategy distribution validation") {
  const auto expect_invalid = [](int n, const std::vector<double>& w) {
    try {
      mixed_strategy_value(n, w);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidDistribution);
    }
  };
  std::vector<double> negative(16, 1.0 / 14.0);
  negative[0] = -1.0 / 14.0;
  expect_invalid(2, negative);

  std::vector<double> off_sum(16, 1.0 / 15.0);
  expect_invalid(2, off_sum);

  expect_invalid(2, std::vector<double>(8, 1.0 / 8.0));
}
