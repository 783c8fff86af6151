#include "trigint/half_line.hpp"
#include "trigint/sweeps.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace trigint;

namespace {

// Reference values computed independently with 30-digit arithmetic.
constexpr double kSqrtHalfPi = 1.25331413731550025121;
constexpr double kLogWeighted0 = -1.10739902939716957;
constexpr double kMultidim2 = 1.21119169965025764;
constexpr double kDoubleLogSpecial = 19.3790671944041222;
constexpr double kDoubleLogQuarter = -1.06182413649096966;
constexpr double kPowerArgCos1 = 0.560442958313096046;
constexpr double kGr8221At1 = 1.12088591662619210;
constexpr double kFresnelC1 = 0.779893400376822829;
constexpr double kFresnelPair = 1.95490284858265949;
constexpr double kLinearCos3 = 0.723601254558267617;

double d(const Real& x) { return x.convert_to<double>(); }

}  // namespace

TEST_CASE("gamma on (0,2)") {
  CHECK(format_real(gamma_real(Real("0.5")), 16) == "1.772453850905516");
  CHECK(d(gamma_real(Real(1))) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d(gamma_real(Real("1.5"))) == doctest::Approx(0.88622692545275801365).epsilon(1e-15));
  CHECK_THROWS_AS(gamma_real(Real(2)), std::domain_error);
  CHECK_THROWS_AS(gamma_real(Real(0)), std::domain_error);
  for (int i = 1; i < 10; ++i) {
    const Real x = Real(i) / 10;
    const Real reflection = gamma_real(x) * gamma_real(1 - x) * sin(pi_real() * x) / pi_real();
    CHECK(std::fabs(d(reflection) - 1) < 1e-30);
  }
  CHECK(std::fabs(d(gamma_prime_half()) + std::sqrt(std::numbers::pi) * (std::numbers::egamma + 2 * std::numbers::ln2)) <
        1e-14);
}

TEST_CASE("half-line power examples") {
  CHECK(halfline_power(TrigKind::cos, 0, Rational(1, 2), Real(0)).value.to_double() ==
        doctest::Approx(kSqrtHalfPi).epsilon(1e-15));
  CHECK(halfline_power(TrigKind::sin, 0, Rational(1, 2), Real(0)).value.to_double() ==
        doctest::Approx(kSqrtHalfPi).epsilon(1e-15));
  CHECK(halfline_power(TrigKind::cos, 0, Rational(1, 2), pi_real() / 2).value.to_double() ==
        doctest::Approx(-kSqrtHalfPi).epsilon(1e-15));
}

TEST_CASE("half-line power domain guard") {
  CHECK_THROWS_AS(halfline_power(TrigKind::cos, 0, Rational(0), Real(0)), std::domain_error);
  CHECK_THROWS_AS(halfline_power(TrigKind::cos, 0, Rational(1), Real(0)), std::domain_error);
  CHECK_THROWS_AS(halfline_power(TrigKind::cos, 0, Rational(1, 10000000), Real(0)), std::domain_error);
  CHECK_THROWS_AS(halfline_power(TrigKind::cos, 0, 1 - Rational(1, 10000000), Real(0)), std::domain_error);
  CHECK_NOTHROW(halfline_power(TrigKind::cos, 0, Rational(1, 1000), Real(0)));
}

TEST_CASE("closed form structure and JSON") {
  const auto hv = halfline_power(TrigKind::cos, 1, Rational(1, 2), Real(0));
  CHECK(hv.form.gamma_arg == Rational(1, 2));
  CHECK(hv.form.scale == Rational(1, 4));
  REQUIRE(hv.form.terms.size() == 2);
  CHECK(hv.form.terms[0].weight == 3);
  CHECK(hv.form.terms[1].frequency == 3);
  CHECK(hv.form.terms[1].exponent == Rational(-1, 2));
  const auto j = hv.form.to_json();
  CHECK(j["gamma_arg"] == "1/2");
  CHECK(j["scale"] == "1/4");
  CHECK(j["terms"][0]["weight"] == "3/1");
  CHECK(j["terms"][1]["freq"] == 3);
  CHECK(j["terms"][1]["exp"] == "-1/2");
  CHECK(j["terms"][1]["phase"] == "sin");
  CHECK(std::fabs(hv.form.evaluate().convert_to<double>() - hv.value.to_double()) < 1e-15);
}

TEST_CASE("half-line power is 2π-periodic in b") {
  for (TrigKind k : {TrigKind::cos, TrigKind::sin})
    for (unsigned n = 0; n <= 4; ++n)
      for (const char* b : {"0", "0.5", "2.75", "-1.25"}) {
        const Real bb(b);
        const Real v = halfline_power(k, n, Rational(1, 3), bb).value.value;
        const Real w = halfline_power(k, n, Rational(1, 3), bb + 2 * pi_real()).value.value;
        CHECK(d(abs(v - w)) < 1e-60);
      }
}

TEST_CASE("power of the argument") {
  CHECK(power_arg(TrigKind::cos, 0, Real(2)).to_double() == doctest::Approx(kSqrtHalfPi / 2).epsilon(1e-15));
  CHECK(power_arg(TrigKind::sin, 0, Real(2)).to_double() == doctest::Approx(kSqrtHalfPi / 2).epsilon(1e-15));
  CHECK(power_arg(TrigKind::cos, 1, Real(2)).to_double() == doctest::Approx(kPowerArgCos1).epsilon(1e-15));
  CHECK_THROWS_AS(power_arg(TrigKind::cos, 0, Real(1)), std::domain_error);
}

TEST_CASE("power of the argument equals the substituted half-line integral") {
  // x = t^{1/p}: ∫ trig^{2n+1}(x^p) dx = (1/p) ∫ t^{-(1-1/p)} trig^{2n+1}(t) dt
  for (TrigKind k : {TrigKind::cos, TrigKind::sin})
    for (unsigned n = 0; n <= 2; ++n)
      for (int p : {2, 3}) {
        const Real direct = power_arg(k, n, Real(p)).value;
        const Real via = halfline_power(k, n, 1 - Rational(1, p), Real(0)).value.value / p;
        CHECK(d(abs(direct - via)) < 1e-40);
      }
}

TEST_CASE("classical 3.822.1 form") {
  CHECK(gr_822_1(0).value.to_double() == doctest::Approx(kSqrtHalfPi).epsilon(1e-15));
  CHECK(gr_822_1(1).value.to_double() == doctest::Approx(kGr8221At1).epsilon(1e-15));
  for (unsigned n = 0; n <= 20; ++n) {
    const auto g = gr_822_1(n);
    const auto h = halfline_power(TrigKind::cos, n, Rational(1, 2), Real(0));
    CHECK(d(abs(g.value.value - h.value.value)) < 1e-60);
    for (long k = 0; k <= long(n); ++k)
      CHECK(binomial(2 * long(n) + 1, long(n) + k + 1) == binomial(2 * long(n) + 1, long(n) - k));
  }
}

TEST_CASE("linear phase") {
  CHECK(linear_phase(TrigKind::cos, Real(1), Real(0), Rational(1, 2)).to_double() ==
        doctest::Approx(kSqrtHalfPi).epsilon(1e-15));
  CHECK(linear_phase(TrigKind::sin, Real(1), Real(0), Rational(1, 2)).to_double() ==
        doctest::Approx(kSqrtHalfPi).epsilon(1e-15));
  CHECK(linear_phase(TrigKind::cos, Real(3), Real(0), Rational(1, 2)).to_double() ==
        doctest::Approx(kLinearCos3).epsilon(1e-15));
  CHECK_THROWS_AS(linear_phase(TrigKind::cos, Real(0), Real(0), Rational(1, 2)), std::domain_error);
  // a = 1 coincides with the n = 0 half-line power
  for (const char* b : {"0.2", "1.3"}) {
    const Real bb(b);
    CHECK(d(abs(linear_phase(TrigKind::sin, Real(1), bb, Rational(1, 4)).value -
                halfline_power(TrigKind::sin, 0, Rational(1, 4), bb).value.value)) < 1e-60);
  }
}

TEST_CASE("log-weighted integral") {
  CHECK(log_weighted(0).to_double() == doctest::Approx(kLogWeighted0).epsilon(1e-15));
  for (unsigned n = 0; n <= 5; ++n) CHECK(log_weighted(n).to_double() < 0);
  CHECK(log_weighted(1).to_double() != doctest::Approx(log_weighted(0).to_double()));
}

TEST_CASE("log-weighted integral is the p-derivative of the half-line power") {
  // ∫ log t cos^{2n+1}(t²) dt = -(1/4) ∂/∂p C_n(p,0) at p = 1/2
  for (unsigned n = 0; n <= 3; ++n) {
    const Rational h(1, 1000000);
    const Real up = halfline_power(TrigKind::cos, n, Rational(1, 2) + h, Real(0)).value.value;
    const Real dn = halfline_power(TrigKind::cos, n, Rational(1, 2) - h, Real(0)).value.value;
    const Real deriv = (up - dn) / (2 * to_real(h));
    CHECK(std::fabs(d(-deriv / 4) - log_weighted(n).to_double()) < 1e-10);
  }
}

TEST_CASE("double integral") {
  CHECK(double_log(Rational(1, 2), Rational(1, 2), 0).to_double() == 0);
  CHECK(double_log(Rational(1, 4), Rational(1, 4), 0).to_double() ==
        doctest::Approx(kDoubleLogQuarter).epsilon(1e-15));
  CHECK(double_log_special().to_double() == doctest::Approx(kDoubleLogSpecial).epsilon(1e-15));
  CHECK_THROWS_AS(double_log(Rational(1), Rational(1, 2), 0), std::domain_error);
}

TEST_CASE("multidimensional log integral") {
  const auto m2 = multidim_log(2);
  CHECK(m2.delta == 3);
  CHECK(m2.value.to_double() == doctest::Approx(kMultidim2).epsilon(1e-15));
  CHECK(std::fabs(multidim_log(1).value.to_double() - log_weighted(0).to_double()) < 1e-14);
  for (unsigned n = 1; n <= 6; ++n) {
    const double w = multidim_by_factorization(n);
    CHECK(std::fabs(multidim_log(n).value.to_double() - w) < 1e-13 * std::max(1.0, std::fabs(w)));
  }
  CHECK_THROWS_AS(multidim_log(0), std::domain_error);
}

TEST_CASE("Fresnel series") {
  CHECK(fresnel_c(Real(0)).to_double() == 0);
  CHECK(fresnel_c(Real(1)).to_double() == doctest::Approx(kFresnelC1).epsilon(1e-15));
  CHECK_THROWS_AS(fresnel_c(Real(5)), std::out_of_range);
  CHECK_THROWS_AS(fresnel_c(Real(-1)), std::domain_error);
  const auto pair = fresnel_identity_pair();
  CHECK(d(pair.series_side) == doctest::Approx(kFresnelPair).epsilon(1e-15));
  CHECK(pair.quadrature_side.converged);
  CHECK(std::fabs(pair.quadrature_side.value - kFresnelPair) < 1e-9);
}

TEST_CASE("binomial sum identity and its recurrence") {
  const auto r = check_sum99(50);
  CHECK(r.all_passed());
  bool saw_10 = false, saw_11 = false;
  for (const auto& c : r.cases()) {
    if (c.id == "sum99[n=1,k=0]") {
      saw_10 = true;
      CHECK(c.numeric == 0.75);
    }
    if (c.id == "sum99[n=1,k=1]") {
      saw_11 = true;
      CHECK(c.numeric == -0.75);
    }
  }
  CHECK(saw_10);
  CHECK(saw_11);
}

TEST_CASE("differential system in the phase") {
  CHECK(check_ode_system(0, Rational(1, 2), Real("0.3")).all_passed());
  CHECK(check_ode_system(1, Rational(1, 2), Real("0.3")).all_passed());
  CHECK(check_ode_system(3, Rational(1, 4), Real(1)).all_passed());
}
