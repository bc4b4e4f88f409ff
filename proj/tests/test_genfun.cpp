#include <doctest.h>

#include "jacmult/genfun.hpp"
#include "oracles.hpp"

using namespace jacmult;

namespace {

TruncatedSeries S(std::size_t order, std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return TruncatedSeries(order, std::move(v));
}

}  // namespace

TEST_CASE("series_multiply") {
  CHECK(series_multiply(S(3, {1, 1}), S(3, {1, -1})) == S(3, {1, 0, -1}));
  CHECK(series_multiply(S(2, {1, 1}), S(2, {1, 1, 1})) == S(2, {1, 2, 2}));
  CHECK(series_multiply(S(4, {0, 1}), S(4, {0, 0, 0, 1, 5})) == S(4, {0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(series_multiply(S(2, {1}), S(3, {1})), std::invalid_argument);
}

TEST_CASE("series_inverse") {
  CHECK(series_inverse(S(4, {1, -1})) == S(4, {1, 1, 1, 1, 1}));
  CHECK(series_inverse(S(3, {-1})) == S(3, {-1}));
  CHECK(series_inverse(S(4, {1, 2})) == S(4, {1, -2, 4, -8, 16}));
  CHECK_THROWS_AS(series_inverse(S(3, {2, 1})), std::domain_error);
  CHECK_THROWS_AS(series_inverse(S(3, {0, 1})), std::domain_error);
}

TEST_CASE("series algebra properties") {
  testing::RandomPolynomials gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t order = 1 + gen.index(12);
    auto rnd = [&] {
      TruncatedSeries s(order);
      for (std::size_t i = 0; i <= order; ++i) s[i] = gen.coefficient(-9, 9);
      return s;
    };
    const auto a = rnd(), b = rnd(), c = rnd();
    REQUIRE(series_multiply(a, b) == series_multiply(b, a));
    REQUIRE(series_multiply(series_multiply(a, b), c) == series_multiply(a, series_multiply(b, c)));
    auto u = rnd();
    u[0] = trial % 2 ? 1 : -1;
    REQUIRE(series_multiply(u, series_inverse(u)) == TruncatedSeries::one(order));
    const unsigned n = static_cast<unsigned>(gen.index(7));
    REQUIRE(series_power(a, n) == series_power_naive(a, n));
  }
}

TEST_CASE("Euler product") {
  CHECK(euler_product(0) == S(0, {1}));
  CHECK(euler_product(5) == S(5, {1, -1, -1, 0, 0, 1}));
  CHECK(euler_product_pentagonal(5) == S(5, {1, -1, -1, 0, 0, 1}));
  CHECK(euler_product_pentagonal(200) == euler_product(200));
  for (std::size_t g = 0; g < 30; ++g) CHECK(euler_product_pentagonal(g) == euler_product(g));
}

TEST_CASE("rational curve counts") {
  const auto n = rational_curve_counts(100);
  REQUIRE(n.size() == 101);
  CHECK(n[0] == 1);
  CHECK(n[1] == 24);
  CHECK(n[2] == 324);
  CHECK(n[3] == 3200);
  const auto oracle = testing::brute_force_counts(12);
  for (std::size_t g = 0; g <= 12; ++g) CHECK(n[g] == BigInt(static_cast<long>(oracle[g])));
  for (const auto& c : n) CHECK(c > 0);
  CHECK(rational_curve_counts(0).size() == 1);
}

TEST_CASE("counts cross-check") {
  CHECK(counts_cross_check(0));
  CHECK(counts_cross_check(100));
  CHECK(counts_cross_check(200));
}
