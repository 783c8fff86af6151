#include "trigint/sweeps.hpp"

#include "trigint/closed_form.hpp"
#include "trigint/half_line.hpp"
#include "trigint/quadrature.hpp"
#include "trigint/recurrence.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace trigint {

namespace {

std::string key(const char* fam, unsigned n, unsigned p) {
  return std::string("[") + fam + ",n=" + std::to_string(n) + ",p=" + std::to_string(p) + "]";
}

}  // namespace

VerificationReport verify_complete(const CompleteSweepBounds& bounds) {
  VerificationReport report;
  const double quad_tol = std::max(1e-13, std::min(1e-11, bounds.tol / 10));
  for (TrigKind fam : {TrigKind::cos, TrigKind::sin}) {
    const char* tag = fam == TrigKind::cos ? "c" : "s";
    for (unsigned n = 0; n <= bounds.max_n; ++n) {
      for (unsigned p = 0; p <= bounds.max_p; ++p) {
        const PiPoly exact = fam == TrigKind::cos ? c_complete(n, p) : s_complete(n, p);
        const double exact_d = exact.evaluate().convert_to<double>();
        if (fam == TrigKind::cos && bounds.exact_closed_form) {
          const PiPoly closed = n % 2 == 0 ? even_branch(n / 2, p).assembled : odd_branch(n / 2, p).assembled;
          report.add_exact("closed" + key(tag, n, p), exact.to_text(), exact_d,
                           closed.evaluate().convert_to<double>(), closed == exact);
        }
        auto integrand = [fam, n, p](double x) {
          const double t = fam == TrigKind::cos ? std::cos(x) : std::sin(x);
          return std::pow(x, p) * std::pow(t, n);
        };
        const auto q = integrate_finite(integrand, 0.0, std::numbers::pi / 2, quad_tol);
        const double err = q.converged ? std::fabs(exact_d - q.value) : std::nan("");
        report.add("quad" + key(tag, n, p), exact.to_text(), exact_d, q.value, err, bounds.tol);
      }
    }
  }
  return report;
}

VerificationReport verify_halfline(const HalfLineSweepBounds& bounds) {
  VerificationReport report;
  for (TrigKind kind : {TrigKind::cos, TrigKind::sin}) {
    for (unsigned n = 0; n <= bounds.max_n; ++n) {
      for (const auto& p : bounds.ps) {
        for (double b : bounds.bs) {
          const auto closed = halfline_power(kind, n, p, Real(b));
          OscillatorySpec spec;
          spec.p = to_double(p);
          spec.kind = kind;
          spec.n = n;
          spec.b = b;
          spec.tol = bounds.tol;
          const auto q = integrate_halfline_osc(spec);
          const double v = closed.value.to_double();
          const double err = q.converged ? std::fabs(v - q.value) : std::nan("");
          const std::string id = std::string("halfline[") + to_string(kind) + ",n=" + std::to_string(n) +
                                 ",p=" + to_display_string(p) + ",b=" + format_real(Real(b), 8) + "]";
          report.add(id, closed.value.to_string(), v, q.value, err, bounds.tol);
        }
      }
    }
  }
  // Table special cases at p = 1/2, b = 0, n = 0: both equal √(π/2).
  const double root = std::sqrt(std::numbers::pi / 2);
  for (TrigKind kind : {TrigKind::cos, TrigKind::sin}) {
    const auto v = halfline_power(kind, 0, Rational(1, 2), Real(0)).value.to_double();
    report.add(std::string("gr-sqrt-pi-over-2[") + to_string(kind) + "]", "sqrt(pi/2)", v, root,
               std::fabs(v - root), 1e-15);
  }
  return report;
}

double multidim_by_factorization(unsigned n) {
  const double sp = std::sqrt(std::numbers::pi);
  const double xi = std::numbers::egamma + 2 * std::numbers::ln2;
  // L = (√π/4) e^{iπ/4} (-ξ + iπ/2)
  const double c = std::cos(std::numbers::pi / 4), s = std::sin(std::numbers::pi / 4);
  const double lr = sp / 4 * (c * -xi - s * std::numbers::pi / 2);
  const double li = sp / 4 * (c * std::numbers::pi / 2 + s * -xi);
  double re = 1, im = 0;
  for (unsigned i = 0; i < n; ++i) {
    const double r2 = re * lr - im * li;
    im = re * li + im * lr;
    re = r2;
  }
  return re;
}

VerificationReport verify_examples(const ExamplesSweepBounds& bounds) {
  VerificationReport report;

  const Real xi_pi2_16 = xi_real() * pi_real() * pi_real() / 16;
  const auto m2 = multidim_log(2).value.value;
  report.add("multidim(2)=xi*pi^2/16", format_real(m2, 20), m2.convert_to<double>(),
             xi_pi2_16.convert_to<double>(), abs(m2 - xi_pi2_16).convert_to<double>(),
             bounds.consistency_tol);

  const Real special16 = double_log_special().value / 16;
  report.add("multidim(2)=double_log_special/16", format_real(m2, 20), m2.convert_to<double>(),
             special16.convert_to<double>(), abs(m2 - special16).convert_to<double>(),
             bounds.consistency_tol);

  const auto m1 = multidim_log(1).value.value;
  const auto lw0 = log_weighted(0).value;
  report.add("multidim(1)=log_weighted(0)", format_real(m1, 20), m1.convert_to<double>(),
             lw0.convert_to<double>(), abs(m1 - lw0).convert_to<double>(), bounds.consistency_tol);

  for (unsigned n = 1; n <= 5; ++n) {
    const double v = multidim_log(n).value.to_double();
    const double w = multidim_by_factorization(n);
    report.add("multidim(" + std::to_string(n) + ")=Re[L^n]", format_real(multidim_log(n).value.value, 20), v,
               w, std::fabs(v - w), 1e-13 * std::max(1.0, std::fabs(w)));
  }

  // ∫₀^∞ log t cos^{2n+1}(t²) dt = (1/4) ∫₀^∞ x^{-1/2} log x cos^{2n+1}x dx
  for (unsigned n = 0; n <= bounds.max_n; ++n) {
    OscillatorySpec spec;
    spec.p = 0.5;
    spec.kind = TrigKind::cos;
    spec.n = n;
    spec.log_weight = true;
    spec.tol = bounds.oracle_tol / 4;
    const auto q = integrate_halfline_osc(spec);
    const double oracle = q.value / 4;
    const auto lw = log_weighted(n);
    const double err = q.converged ? std::fabs(lw.to_double() - oracle) : std::nan("");
    report.add("log_weighted(" + std::to_string(n) + ")~oracle", lw.to_string(), lw.to_double(), oracle,
               err, bounds.oracle_tol);
  }

  const auto pair = fresnel_identity_pair(1e-12);
  const double series = pair.series_side.convert_to<double>();
  const double err = pair.quadrature_side.converged ? std::fabs(series - pair.quadrature_side.value) : std::nan("");
  report.add("sqrt(2pi)*FresnelC(1)~quadrature", format_real(pair.series_side, 20), series,
             pair.quadrature_side.value, err, bounds.fresnel_tol);
  return report;
}

}  // namespace trigint
