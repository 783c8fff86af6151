#include "trigint/closed_form.hpp"
#include "trigint/half_line.hpp"
#include "trigint/quadrature.hpp"
#include "trigint/recurrence.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace trigint;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kSqrtHalfPi = 1.25331413731550025121;

std::vector<double> partial_sums(double (*term)(int), int count) {
  std::vector<double> s;
  double acc = 0;
  for (int k = 0; k < count; ++k) s.push_back(acc += term(k));
  return s;
}

}  // namespace

TEST_CASE("finite interval examples") {
  const auto one = integrate_finite([](double x) { return std::cos(x); }, 0, kHalfPi, 1e-13);
  CHECK(one.converged);
  CHECK(std::fabs(one.value - 1) < 1e-12);
  CHECK(one.error_estimate <= 1e-13);

  const auto c21 = integrate_finite([](double x) { return x * std::cos(x) * std::cos(x); }, 0, kHalfPi, 1e-11);
  CHECK(std::fabs(c21.value - (std::numbers::pi * std::numbers::pi / 16 - 0.25)) < 1e-10);

  const auto c33 = integrate_finite([](double x) { return std::pow(x * std::cos(x), 3); }, 0, kHalfPi, 1e-11);
  CHECK(std::fabs(c33.value - odd_branch(1, 3).assembled.evaluate().convert_to<double>()) < 1e-10);
}

TEST_CASE("finite interval contract") {
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0, 1, 1e-15), std::invalid_argument);
  // An integrable singularity the rule cannot resolve: reported, never fabricated.
  const auto bad = integrate_finite([](double x) { return 1 / std::sqrt(std::fabs(x - 0.3)); }, 0, 1, 1e-13, 20);
  CHECK_FALSE(bad.converged);
  CHECK(bad.subdivisions <= 20);
}

TEST_CASE("quadrature agrees with the exact complete integrals") {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned p = 0; p <= 8; ++p) {
      const auto qc = integrate_finite([n, p](double x) { return std::pow(x, p) * std::pow(std::cos(x), n); }, 0,
                                       kHalfPi, 1e-11);
      const auto qs = integrate_finite([n, p](double x) { return std::pow(x, p) * std::pow(std::sin(x), n); }, 0,
                                       kHalfPi, 1e-11);
      CHECK(std::fabs(qc.value - c_complete(n, p).evaluate().convert_to<double>()) < 1e-10);
      CHECK(std::fabs(qs.value - s_complete(n, p).evaluate().convert_to<double>()) < 1e-10);
    }
  }
}

TEST_CASE("singular head reproduces the Fresnel identity") {
  const auto q = integrate_singular_head([](double x) { return std::cos(x); }, 0.5, kHalfPi, 1e-12);
  CHECK(q.converged);
  CHECK(std::fabs(q.value - fresnel_identity_pair().series_side.convert_to<double>()) < 1e-9);
}

TEST_CASE("oscillatory half-line examples") {
  OscillatorySpec spec;
  const auto c = integrate_halfline_osc(spec);
  CHECK(c.converged);
  CHECK(std::fabs(c.value - kSqrtHalfPi) < 1e-6);
  CHECK(!c.partial_sums.empty());

  spec.kind = TrigKind::sin;
  CHECK(std::fabs(integrate_halfline_osc(spec).value - kSqrtHalfPi) < 1e-6);

  spec = OscillatorySpec{};
  spec.p = 0.25;
  spec.n = 1;
  CHECK(std::fabs(integrate_halfline_osc(spec).value -
                  halfline_power(TrigKind::cos, 1, Rational(1, 4), Real(0)).value.to_double()) < 1e-6);
}

TEST_CASE("oscillatory oracle matches the closed forms for small n") {
  for (TrigKind k : {TrigKind::cos, TrigKind::sin})
    for (unsigned n = 0; n <= 3; ++n)
      for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        OscillatorySpec spec;
        spec.kind = k;
        spec.n = n;
        spec.p = to_double(p);
        const auto q = integrate_halfline_osc(spec);
        CHECK(q.converged);
        CHECK(std::fabs(q.value - halfline_power(k, n, p, Real(0)).value.to_double()) < 1e-6);
      }
}

TEST_CASE("doubling the arch count stays within the error estimate") {
  for (unsigned n = 0; n <= 3; ++n) {
    OscillatorySpec spec;
    spec.n = n;
    spec.max_arches = 30;
    const auto a = integrate_halfline_osc(spec);
    spec.max_arches = 60;
    const auto b = integrate_halfline_osc(spec);
    CHECK(std::fabs(a.value - b.value) <= std::max(a.error_estimate, b.error_estimate) + 1e-12);
  }
}

TEST_CASE("alternating-series acceleration") {
  const auto log2 = accelerate_alternating(partial_sums([](int k) { return (k % 2 ? -1.0 : 1.0) / (k + 1); }, 20));
  CHECK(std::fabs(log2.value - std::numbers::ln2) < 1e-7);
  const auto quarter_pi =
      accelerate_alternating(partial_sums([](int k) { return (k % 2 ? -1.0 : 1.0) / (2 * k + 1); }, 20));
  CHECK(std::fabs(quarter_pi.value - std::numbers::pi / 4) < 1e-7);
  const std::vector<double> constant(10, 2.5);
  CHECK(accelerate_alternating(constant).value == 2.5);
  const std::vector<double> short_seq(5, 1.0);
  CHECK_THROWS_AS(accelerate_alternating(short_seq), std::invalid_argument);
}
