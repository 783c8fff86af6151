#include "oracles.hpp"

#include "trigint/euler_sums.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace trigint;

TEST_CASE("nested sum examples") {
  CHECK(nested_sum(SumKind::even, 0, 5) == 1);
  CHECK(nested_sum(SumKind::even, 2, 2) == Rational(21, 16));
  CHECK(nested_sum(SumKind::odd, 1, 1) == Rational(10, 9));
  CHECK(nested_sum(SumKind::even, 1, 0) == 0);
  CHECK(nested_sum(SumKind::odd, 1, 0) == 1);
}

TEST_CASE("nested sums match exhaustive tuple enumeration") {
  for (unsigned j = 0; j <= 3; ++j) {
    for (long n = 0; n <= 6; ++n) {
      CHECK(nested_sum(SumKind::even, j, n) == oracle::brute_even(j, n));
      CHECK(nested_sum(SumKind::odd, j, n) == oracle::brute_odd(j, n));
    }
  }
}

TEST_CASE("nested sums grow monotonically in the bound") {
  for (unsigned j = 1; j <= 4; ++j) {
    for (unsigned n = 1; n <= 12; ++n) {
      CHECK(nested_sum(SumKind::even, j, n) > nested_sum(SumKind::even, j, n - 1));
      CHECK(nested_sum(SumKind::odd, j, n) > nested_sum(SumKind::odd, j, n - 1));
    }
  }
}

TEST_CASE("nested sums obey the table recurrence") {
  for (unsigned j = 1; j <= 4; ++j) {
    for (unsigned n = 1; n <= 10; ++n) {
      CHECK(nested_sum(SumKind::even, j, n) ==
            nested_sum(SumKind::even, j, n - 1) + nested_sum(SumKind::even, j - 1, n) * Rational(1, n * n));
      CHECK(nested_sum(SumKind::odd, j, n) ==
            nested_sum(SumKind::odd, j, n - 1) +
                nested_sum(SumKind::odd, j - 1, n) * Rational(1, (2 * n + 1) * (2 * n + 1)));
    }
  }
}

TEST_CASE("central tail examples") {
  CHECK(central_tail(SumKind::even, 2) == Rational(8, 3));
  CHECK(central_tail(SumKind::odd, 1) == Rational(7, 6));
  CHECK(central_tail(SumKind::odd, 0) == 1);
  CHECK_THROWS_AS(central_tail(SumKind::even, 0), std::domain_error);
  CHECK(central_term(SumKind::even, 1) == 2);
  CHECK(central_term(SumKind::odd, 1) == Rational(1, 6));
}

TEST_CASE("central tails approach their limits from below") {
  const double even_limit = std::numbers::pi * std::numbers::pi / 2;
  const double odd_limit = std::numbers::pi / 2;
  for (unsigned m = 1; m <= 40; ++m) {
    CHECK(to_double(central_tail(SumKind::even, m)) < even_limit);
    CHECK(to_double(central_tail(SumKind::odd, m)) < odd_limit);
    if (m >= 2) CHECK(central_tail(SumKind::even, m) > central_tail(SumKind::even, m - 1));
    CHECK(central_tail(SumKind::odd, m) > central_tail(SumKind::odd, m - 1));
  }
}

TEST_CASE("numeric central tail agrees with the exact partial sum") {
  for (unsigned m : {1u, 2u, 5u, 17u, 60u}) {
    CHECK(std::fabs(central_tail_numeric(SumKind::even, m).convert_to<double>() -
                    to_double(central_tail(SumKind::even, m))) < 1e-14);
    CHECK(std::fabs(central_tail_numeric(SumKind::odd, m).convert_to<double>() -
                    to_double(central_tail(SumKind::odd, m))) < 1e-14);
  }
}

TEST_CASE("tail-coupled sums match enumeration with the tail on the smallest index") {
  for (unsigned d = 0; d <= 3; ++d) {
    for (long n = 1; n <= 5; ++n)
      CHECK(tail_coupled_sum(SumKind::even, d, n) ==
            oracle::enumerate_tuples(d, 1, n, oracle::even_weight, oracle::tail_t));
    for (long n = 0; n <= 5; ++n)
      CHECK(tail_coupled_sum(SumKind::odd, d, n) ==
            oracle::enumerate_tuples(d, 0, n, oracle::odd_weight, oracle::tail_u));
  }
  CHECK(tail_coupled_sum(SumKind::odd, 0, 3) == central_tail(SumKind::odd, 3));
}
