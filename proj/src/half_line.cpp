#include "trigint/half_line.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trigint {

namespace {

Real trig(TrigKind k, const Real& x) {
  const Real r = reduce_angle(x);
  return k == TrigKind::cos ? Real(cos(r)) : Real(sin(r));
}

void require_open_unit(const Rational& p, const char* what) {
  static const Rational kGuard(1, 1000000);
  if (p <= 0 || p >= 1)
    throw std::domain_error(std::string(what) + ": p must lie in (0,1)");
  if (p < kGuard || p > 1 - kGuard)
    throw std::domain_error(std::string(what) + ": p within 1e-6 of the boundary of (0,1)");
}

Real sqrt_pi() { return sqrt(pi_real()); }

}  // namespace

Real ClosedFormSum::evaluate() const {
  Real sum = 0;
  for (const auto& t : terms)
    sum += to_real(t.weight) * pow(Real(t.frequency), to_real(t.exponent)) * trig(t.phase, t.shift);
  return gamma_real(to_real(gamma_arg)) * to_real(scale) * sum;
}

std::string ClosedFormSum::to_text(int digits) const {
  std::string out = "Γ(" + to_display_string(gamma_arg) + ")·(" + to_display_string(scale) + ")·[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (i > 0) out += " + ";
    out += to_display_string(t.weight) + "·" + std::to_string(t.frequency) + "^(" +
           to_display_string(t.exponent) + ")·" + to_string(t.phase) + "(" + format_real(t.shift, digits) + ")";
  }
  return out + "]";
}

std::string ClosedFormSum::to_latex(int digits) const {
  auto frac = [](const Rational& q) {
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return std::string(num < 0 ? "-" : "") + "\\tfrac{" + BigInt(abs(num)).str() + "}{" + den.str() + "}";
  };
  std::string out = "\\Gamma\\left(" + frac(gamma_arg) + "\\right)\\cdot " + frac(scale) + "\\left[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (i > 0) out += " + ";
    out += frac(t.weight) + "\\cdot " + std::to_string(t.frequency) + "^{" + frac(t.exponent) + "}\\" +
           to_string(t.phase) + "(" + format_real(t.shift, digits) + ")";
  }
  return out + "\\right]";
}

nlohmann::json ClosedFormSum::to_json() const {
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : terms) {
    ts.push_back({{"weight", to_fraction_string(t.weight)},
                  {"freq", t.frequency},
                  {"exp", to_fraction_string(t.exponent)},
                  {"phase", to_string(t.phase)},
                  {"shift", t.shift.convert_to<double>()}});
  }
  return {{"gamma_arg", to_fraction_string(gamma_arg)},
          {"scale", to_fraction_string(scale)},
          {"terms", ts}};
}

Real gamma_real(const Real& x) {
  if (!(x > 0 && x < 2)) throw std::domain_error("gamma_real: x must lie in (0,2)");
  return tgamma(x);
}

const Real& gamma_prime_half() {
  static const Real v = -sqrt_pi() * xi_real();
  return v;
}

HalfLineValue halfline_power(TrigKind kind, unsigned n, const Rational& p, const Real& b) {
  require_open_unit(p, "halfline_power");
  ClosedFormSum form;
  form.gamma_arg = 1 - p;
  form.scale = pow2(-2 * long(n));
  const Real base_phase = pi_real() * to_real(p) / 2;
  for (unsigned k = 0; k <= n; ++k) {
    ClosedFormTerm t;
    t.weight = Rational(binomial(2 * long(n) + 1, long(n) - long(k)));
    if (kind == TrigKind::sin) t.weight *= sign_pow(k);
    t.frequency = 2 * k + 1;
    t.exponent = p - 1;
    t.phase = kind == TrigKind::cos ? TrigKind::sin : TrigKind::cos;
    t.shift = reduce_angle(base_phase - Real(2 * k + 1) * b);
    form.terms.push_back(std::move(t));
  }
  Real value = form.evaluate();
  return {std::move(form), PrecisionFloat{value}};
}

PrecisionFloat power_arg(TrigKind kind, unsigned n, const Real& p) {
  if (!(p > 1)) throw std::domain_error("power_arg: p must exceed 1");
  Real sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    Real w(binomial(2 * long(n) + 1, long(n) - long(k)).str());
    if (kind == TrigKind::sin) w *= sign_pow(k);
    sum += w * pow(Real(2 * k + 1), -1 / p);
  }
  const Real angle = pi_real() / (2 * p);
  const Real phase = kind == TrigKind::cos ? Real(cos(angle)) : Real(sin(angle));
  return PrecisionFloat{gamma_real((p + 1) / p) * phase * sum * to_real(pow2(-2 * long(n)))};
}

HalfLineValue gr_822_1(unsigned n) {
  ClosedFormSum literal;
  literal.gamma_arg = Rational(1, 2);
  literal.scale = pow2(-2 * long(n));
  Real sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    ClosedFormTerm t;
    t.weight = Rational(binomial(2 * long(n) + 1, long(n) + long(k) + 1));
    t.frequency = 2 * k + 1;
    t.exponent = Rational(-1, 2);
    t.phase = TrigKind::sin;
    t.shift = pi_real() / 4;
    sum += to_real(t.weight) / sqrt(Real(t.frequency));
    literal.terms.push_back(std::move(t));
  }
  const auto reference = halfline_power(TrigKind::cos, n, Rational(1, 2), Real(0));
  if (reference.form.terms.size() != literal.terms.size())
    throw std::logic_error("gr_822_1: term counts differ");
  for (std::size_t k = 0; k < literal.terms.size(); ++k) {
    const auto& a = literal.terms[k];
    const auto& r = reference.form.terms[k];
    if (a.weight != r.weight || a.frequency != r.frequency || a.exponent != r.exponent ||
        a.phase != r.phase)
      throw std::logic_error("gr_822_1: term " + std::to_string(k) + " differs from the general form");
  }
  const Real value = to_real(literal.scale) * sqrt(pi_real() / 2) * sum;
  return {std::move(literal), PrecisionFloat{value}};
}

PrecisionFloat linear_phase(TrigKind kind, const Real& a, const Real& b, const Rational& p) {
  if (!(a > 0)) throw std::domain_error("linear_phase: a must be positive");
  require_open_unit(p, "linear_phase");
  const Real pr = to_real(p);
  const Real scale = pow(a, pr - 1) * gamma_real(1 - pr);
  const Real angle = b - pr * pi_real() / 2;
  if (kind == TrigKind::cos) return PrecisionFloat{-scale * trig(TrigKind::sin, angle)};
  return PrecisionFloat{scale * trig(TrigKind::cos, angle)};
}

PrecisionFloat log_weighted(unsigned n) {
  Real first = 0, second = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const Real w(binomial(2 * long(n) + 1, long(n) - long(k)).str());
    const Real root = sqrt(Real(4 * k + 2));
    first += w / root;
    second += w * log(Real(2 * k + 1)) / root;
  }
  const Real sp = sqrt_pi();
  const Real lead = pi_real() + 2 * euler_gamma_real() + 4 * log2_real();
  const Real value = -sp / to_real(pow2(2 * long(n) + 3)) * lead * first -
                     sp / to_real(pow2(2 * long(n) + 2)) * second;
  return PrecisionFloat{value};
}

PrecisionFloat double_log(const Rational& p, const Rational& q, unsigned n) {
  require_open_unit(p, "double_log");
  require_open_unit(q, "double_log");
  const Rational s = p + q;
  if (s == 1) return PrecisionFloat{Real(0)};  // cos(π/2)
  const Real sr = to_real(s);
  Real sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const Real w(binomial(2 * long(n) + 1, long(n) - long(k)).str());
    sum += w * pow(Real(2 * k + 1), sr - 2);
  }
  const Real value = -gamma_real(1 - to_real(p)) * gamma_real(1 - to_real(q)) *
                     cos(pi_real() * sr / 2) * sum * to_real(pow2(-2 * long(n)));
  return PrecisionFloat{value};
}

PrecisionFloat double_log_special() { return PrecisionFloat{xi_real() * pi_real() * pi_real()}; }

MultidimResult multidim_log(unsigned n) {
  if (n == 0) throw std::domain_error("multidim_log: n must be >= 1");
  const Real base_re = xi_real();
  const Real base_im = pi_real() / 2;
  ComplexReal psi{Real(1), Real(0)};
  for (unsigned i = 0; i < n; ++i) {
    Real re = psi.re * base_re - psi.im * base_im;
    Real im = psi.re * base_im + psi.im * base_re;
    psi = {re, im};
  }
  const Real angle = pi_real() * Real(n) / 4;
  const Real c = cos(angle), s = sin(angle);
  psi = {psi.re * c - psi.im * s, psi.re * s + psi.im * c};

  MultidimResult r;
  r.n = n;
  r.delta = static_cast<unsigned long>(n) * (n + 1) / 2;
  r.psi = psi;
  const Real pick = n % 2 == 0 ? psi.re : psi.im;
  const Real value = Real(sign_pow(static_cast<long>(r.delta))) * pow(pi_real(), Real(n) / 2) /
                     to_real(pow2(2 * long(n))) * pick;
  r.value = PrecisionFloat{value};
  return r;
}

PrecisionFloat fresnel_c(const Real& x) {
  if (x < 0) throw std::domain_error("fresnel_c: x must be nonnegative");
  if (x > 4) throw std::out_of_range("fresnel_c: series mode supports 0 <= x <= 4");
  if (x == 0) return PrecisionFloat{Real(0)};
  // Σ (-1)^k (π/2)^{2k} x^{4k+1} / ((2k)! (4k+1))
  const Real a = pi_real() / 2 * x * x;  // term ratio driver
  const Real a2 = a * a;
  Real power = x;  // (π/2)^{2k} x^{4k+1} / (2k)!
  Real sum = 0;
  const Real cutoff("1e-60");
  for (unsigned k = 0;; ++k) {
    const Real term = power / Real(4 * k + 1);
    sum += (k % 2 == 0) ? term : Real(-term);
    if (k > 4 && abs(term) < cutoff) break;
    power *= a2 / (Real(2 * k + 1) * Real(2 * k + 2));
  }
  return PrecisionFloat{sum};
}

FresnelIdentityPair fresnel_identity_pair(double tol) {
  FresnelIdentityPair pair;
  pair.series_side = sqrt(2 * pi_real()) * fresnel_c(Real(1)).value;
  pair.quadrature_side =
      integrate_singular_head([](double x) { return std::cos(x); }, 0.5, M_PI / 2, tol);
  return pair;
}

namespace {

Rational sum99_lhs(long n, long k) {
  return pow2(-2 * n) * Rational(binomial(2 * n + 1, n - k) * (2 * k + 1) * sign_pow(k));
}

Rational sum99_rhs(long n, long k) {
  Rational s(0);
  for (long j = k; j <= n; ++j)
    s += pow2(-2 * j) * Rational(binomial(n, j) * binomial(2 * j + 1, j - k) * sign_pow(j));
  return s * (2 * n + 1);
}

}  // namespace

VerificationReport check_sum99(unsigned n_max) {
  VerificationReport report;
  std::vector<std::vector<Rational>> lhs(n_max + 1), rhs(n_max + 1);
  for (long n = 0; n <= long(n_max); ++n) {
    for (long k = 0; k <= n; ++k) {
      lhs[n].push_back(sum99_lhs(n, k));
      rhs[n].push_back(sum99_rhs(n, k));
      const std::string id = "sum99[n=" + std::to_string(n) + ",k=" + std::to_string(k) + "]";
      report.add_exact(id, to_display_string(lhs[n][k]), to_double(lhs[n][k]), to_double(rhs[n][k]),
                       lhs[n][k] == rhs[n][k]);
    }
  }
  report.add_exact("rec99-init[lhs]", to_display_string(lhs[0][0]), to_double(lhs[0][0]), 1.0,
                   lhs[0][0] == 1);
  report.add_exact("rec99-init[rhs]", to_display_string(rhs[0][0]), to_double(rhs[0][0]), 1.0,
                   rhs[0][0] == 1);
  for (long n = 0; n < long(n_max); ++n) {
    for (long k = 0; k <= n; ++k) {
      const Rational a = Rational(2 * (n + k + 2) * (n + 1 - k));
      const Rational c = Rational((n + 1) * (2 * n + 3));
      const std::string tag = "[n=" + std::to_string(n) + ",k=" + std::to_string(k) + "]";
      const Rational l = a * lhs[n + 1][k] - c * lhs[n][k];
      const Rational r = a * rhs[n + 1][k] - c * rhs[n][k];
      report.add_exact("rec99-lhs" + tag, to_display_string(l), to_double(l), 0.0, l == 0);
      report.add_exact("rec99-rhs" + tag, to_display_string(r), to_double(r), 0.0, r == 0);
    }
  }
  return report;
}

VerificationReport check_ode_system(unsigned n, const Rational& p, const Real& b, const Real& h,
                                    double tol) {
  require_open_unit(p, "check_ode_system");
  auto f = [&](unsigned j, const Real& bb) { return halfline_power(TrigKind::cos, j, p, bb).value.value; };
  auto g = [&](unsigned j, const Real& bb) { return halfline_power(TrigKind::sin, j, p, bb).value.value; };

  const Real dg = (g(n, b + h) - g(n, b - h)) / (2 * h);
  const Real df = (f(n, b + h) - f(n, b - h)) / (2 * h);
  const Real m = Real(2 * n + 1);
  const Real sign_n = Real(sign_pow(n));
  Real sum_f = 0, sum_g = 0;
  for (unsigned j = 0; j < n; ++j) {
    const Real w = Real(binomial(n, j).str()) * sign_pow(j);
    sum_f += w * f(j, b);
    sum_g += w * g(j, b);
  }
  const Real lhs1 = dg - sign_n * m * f(n, b);
  const Real rhs1 = m * sum_f;
  const Real lhs2 = df + sign_n * m * g(n, b);
  const Real rhs2 = -m * sum_g;

  VerificationReport report;
  const std::string tag = "[n=" + std::to_string(n) + ",p=" + to_display_string(p) +
                          ",b=" + format_real(b, 6) + "]";
  const double r1 = abs(lhs1 - rhs1).convert_to<double>();
  const double r2 = abs(lhs2 - rhs2).convert_to<double>();
  report.add("eone-g" + tag, format_real(rhs1, 17), lhs1.convert_to<double>(), rhs1.convert_to<double>(), r1, tol);
  report.add("eone-f" + tag, format_real(rhs2, 17), lhs2.convert_to<double>(), rhs2.convert_to<double>(), r2, tol);
  return report;
}

}  // namespace trigint
