#include "oracles.hpp"

#include "trigint/exact_core.hpp"
#include "trigint/pipoly.hpp"

#include <doctest.h>

#include <random>

using namespace trigint;

TEST_CASE("binomial small cases and conventions") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("binomial agrees with the product formula and Pascal's rule") {
  for (long n = 0; n <= 100; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == oracle::product_binomial(n, k));
      if (n > 0 && k > 0) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
      CHECK(binomial(n, k) == binomial(n, n - k));
    }
  }
}

TEST_CASE("factorial and powers of two") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow2(5) == 32);
  CHECK(sign_pow(3) == -1);
  CHECK(sign_pow(4) == 1);
}

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("-2.5e1") == -25);
  CHECK(parse_rational("007") == 7);
  CHECK(parse_rational("010/0012") == Rational(5, 6));
  CHECK(parse_rational("0.0625") == Rational(1, 16));
  CHECK(parse_rational("0") == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rational rendering") {
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(-1, 4)) == "-1/4");
  CHECK(to_display_string(Rational(3)) == "3");
  CHECK(to_display_string(Rational(-1, 4)) == "-1/4");
}

TEST_CASE("PiPoly combine examples") {
  const PiPoly half_pi = PiPoly::monomial(Rational(1, 2), 1);
  CHECK(pipoly_combine(PolyOp::add, half_pi, -half_pi).is_zero());
  CHECK(pipoly_combine(PolyOp::add, half_pi, -half_pi).coeffs().empty());
  const PiPoly pi = PiPoly::monomial(1, 1);
  const PiPoly sq = pipoly_combine(PolyOp::mul, pi, pi);
  CHECK(sq.coeffs() == std::vector<Rational>{0, 0, 1});
  CHECK(pipoly_combine(PolyOp::scale, PiPoly::monomial(Rational(1, 8), 2), Rational(1, 2)) ==
        PiPoly::monomial(Rational(1, 16), 2));
  CHECK_THROWS(pipoly_combine(PolyOp::scale, pi, pi));
}

TEST_CASE("PiPoly evaluation") {
  CHECK(pipoly_eval(PiPoly::monomial(Rational(1, 8), 2), 20).to_string() == "1.2337005501361698274");
  CHECK(pipoly_eval(PiPoly(Rational(7, 3)), 12).to_string() == "2.33333333333");
  const PiPoly c21 = PiPoly::monomial(Rational(1, 16), 2) + PiPoly(Rational(-1, 4));
  CHECK(pipoly_eval(c21, 17).to_string() == "0.36685027506808491");
  CHECK_THROWS_AS(pipoly_eval(c21, 9), std::invalid_argument);
}

TEST_CASE("PiPoly text, LaTeX and JSON") {
  const PiPoly c21 = PiPoly::monomial(Rational(1, 16), 2) + PiPoly(Rational(-1, 4));
  CHECK(c21.to_text() == "π²/16 − 1/4");
  CHECK(c21.to_latex() == "\\frac{\\pi^{2}}{16} - \\frac{1}{4}");
  CHECK(c21.to_json().dump() == R"({"pi_coeffs":["-1/4","0/1","1/16"]})");
  CHECK(PiPoly::from_json(c21.to_json()) == c21);
  CHECK(PiPoly().to_text() == "0");
  CHECK(PiPoly::monomial(Rational(-3), 1).to_text() == "−3π");
  CHECK(PiPoly::monomial(1, 3).to_text() == "π³");
}

TEST_CASE("PiPoly canonical form trims trailing zeros") {
  const PiPoly p(std::vector<Rational>{1, 0, 0});
  CHECK(p.degree() == 0);
  CHECK(p == PiPoly(Rational(1)));
}

namespace {

PiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3), num(-5, 5), den(1, 4);
  std::vector<Rational> c;
  for (int i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(num(rng), den(rng));
  return PiPoly(c);
}

}  // namespace

TEST_CASE("PiPoly ring axioms on random small polynomials") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const PiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == PiPoly());
    CHECK(a * PiPoly(Rational(1)) == a);
  }
}
