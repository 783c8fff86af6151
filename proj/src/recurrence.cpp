#include "trigint/recurrence.hpp"

#include "trigint/euler_sums.hpp"

#include <algorithm>
#include <vector>

namespace trigint {

namespace {

PiPoly c0p(unsigned p) {
  return PiPoly::monomial(make_rational(BigInt(1), BigInt(p + 1) * (BigInt(1) << (p + 1))), p + 1);
}

PiPoly wallis(unsigned n) {
  const unsigned m = n / 2;
  const BigInt central = binomial(2 * long(m), m);
  if (n % 2 == 0) return PiPoly::monomial(make_rational(central, BigInt(1) << (2 * m + 1)), 1);
  return PiPoly(make_rational(BigInt(1) << (2 * m), BigInt(2 * m + 1) * central));
}

PiPoly cn1(unsigned n) {
  const unsigned m = n / 2;
  const BigInt central = binomial(2 * long(m), m);
  if (n % 2 == 0) {
    const Rational pref = make_rational(central, BigInt(1) << (2 * m + 2));
    const Rational tail = m == 0 ? Rational(0) : central_tail(SumKind::even, m);
    return (PiPoly::monomial(Rational(1, 2), 2) - PiPoly(tail)) * pref;
  }
  const Rational pref = make_rational(BigInt(1) << (2 * m), BigInt(2 * m + 1) * central);
  return (PiPoly::monomial(Rational(1, 2), 1) - PiPoly(central_tail(SumKind::odd, m))) * pref;
}

// Substitute x = π/2 into Σ coeffs[m] x^m.
PiPoly at_half_pi(const std::vector<Rational>& coeffs) {
  PiPoly out;
  for (std::size_t m = 0; m < coeffs.size(); ++m)
    if (coeffs[m] != 0) out += PiPoly::half_pi_power(m) * coeffs[m];
  return out;
}

}  // namespace

PiPoly c1p_sum_form(unsigned p) {
  const unsigned xi = p / 2;
  const BigInt pf = factorial(p);
  PiPoly out;
  for (unsigned k = 0; k <= xi; ++k) {
    Rational c = make_rational(pf, factorial(p - 2 * k)) * sign_pow(k);
    out += PiPoly::half_pi_power(p - 2 * k) * c;
  }
  if (p % 2 == 1) out -= PiPoly(Rational(pf * sign_pow(xi)));
  return out;
}

PiPoly c1p_taylor_form(unsigned p) {
  const unsigned xi = p / 2;
  const Rational lead = Rational(factorial(p) * sign_pow(xi));
  // f_p(x) = (-1)^ξ p! (-1 + Σ_{k=0}^{ξ} (-1)^k x^{2k+1}/(2k+1)!)
  std::vector<Rational> f(2 * xi + 2);
  f[0] = -lead;
  for (unsigned k = 0; k <= xi; ++k)
    f[2 * k + 1] = lead * make_rational(BigInt(sign_pow(k)), factorial(2 * k + 1));
  if (p % 2 == 1) return at_half_pi(f);
  std::vector<Rational> df(f.size() - 1);
  for (std::size_t m = 1; m < f.size(); ++m) df[m - 1] = f[m] * static_cast<long>(m);
  return at_half_pi(df);
}

PiPoly base_value(BaseKind kind, unsigned idx) {
  switch (kind) {
    case BaseKind::c0p:
      return c0p(idx);
    case BaseKind::wallis:
      return wallis(idx);
    case BaseKind::c1p: {
      PiPoly sum = c1p_sum_form(idx);
      if (sum != c1p_taylor_form(idx))
        throw std::logic_error("c(1," + std::to_string(idx) + "): finite-sum and Taylor forms disagree");
      return sum;
    }
    case BaseKind::cn1:
      return cn1(idx);
  }
  throw std::invalid_argument("unknown BaseKind");
}

PiPoly cn1_by_solver(unsigned n) {
  const unsigned m = n / 2;
  if (n % 2 == 0) {
    // x_m = c(2m,1):  2m x_m = (2m-1) x_{m-1} - 1/(2m),  x_0 = π²/8
    FirstOrderProblem<PiPoly> prob{
        [](unsigned k) { return Rational(2 * k); },
        [](unsigned k) { return Rational(2 * k - 1); },
        [](unsigned k) { return PiPoly(Rational(-1, 2 * k)); },
        PiPoly::monomial(Rational(1, 8), 2)};
    return solve_first_order(prob, m);
  }
  // y_m = c(2m+1,1):  (2m+1) y_m = 2m y_{m-1} - 1/(2m+1),  y_0 = π/2 - 1
  FirstOrderProblem<PiPoly> prob{
      [](unsigned k) { return Rational(2 * k + 1); },
      [](unsigned k) { return Rational(2 * k); },
      [](unsigned k) { return PiPoly(Rational(-1, 2 * k + 1)); },
      PiPoly(std::vector<Rational>{Rational(-1), Rational(1, 2)})};
  return solve_first_order(prob, m);
}

PiPoly CompleteIntegralEngine::cos_unlocked(unsigned n, unsigned p) {
  if (n == 0) return base_value(BaseKind::c0p, p);
  if (n == 1) return base_value(BaseKind::c1p, p);
  if (p == 0) return base_value(BaseKind::wallis, n);
  if (p == 1) return base_value(BaseKind::cn1, n);
  const auto key = std::make_pair(n, p);
  if (auto it = cos_memo_.find(key); it != cos_memo_.end()) return it->second;
  PiPoly value = cos_unlocked(n - 2, p) * Rational(n - 1, n) -
                 cos_unlocked(n, p - 2) * Rational(long(p) * (long(p) - 1), long(n) * long(n));
  cos_memo_.emplace(key, value);
  return value;
}

PiPoly CompleteIntegralEngine::cos_integral(unsigned n, unsigned p) {
  std::lock_guard lock(mutex_);
  return cos_unlocked(n, p);
}

PiPoly CompleteIntegralEngine::sin_integral(unsigned n, unsigned p) {
  std::lock_guard lock(mutex_);
  const auto key = std::make_pair(n, p);
  if (auto it = sin_memo_.find(key); it != sin_memo_.end()) return it->second;
  PiPoly out;
  for (unsigned k = 0; k <= p; ++k) {
    const Rational w = Rational(binomial(p, k) * sign_pow(k));
    out += PiPoly::half_pi_power(p - k) * cos_unlocked(n, k) * w;
  }
  sin_memo_.emplace(key, out);
  return out;
}

PiPoly CompleteIntegralEngine::evaluate(const CompleteIntegralKey& key) {
  return key.family == Family::cos ? cos_integral(key.n, key.p) : sin_integral(key.n, key.p);
}

std::size_t CompleteIntegralEngine::memo_size() const {
  std::lock_guard lock(mutex_);
  return cos_memo_.size() + sin_memo_.size();
}

CompleteIntegralEngine& default_engine() {
  static CompleteIntegralEngine engine;
  return engine;
}

PiPoly c_complete(unsigned n, unsigned p) { return default_engine().cos_integral(n, p); }

PiPoly s_complete(unsigned n, unsigned p) { return default_engine().sin_integral(n, p); }

Rational wallis_f(unsigned n) {
  Rational f(0);
  for (unsigned i = 0; 2 * i <= n; ++i)
    f += pow2(-2 * long(i)) * Rational(binomial(n, 2 * i) * binomial(2 * long(i), i));
  return f;
}

VerificationReport check_wallis_identities(unsigned n_max, unsigned expansion_max) {
  VerificationReport report;
  std::vector<Rational> f(n_max + 2);
  for (unsigned n = 0; n <= n_max + 1; ++n) f[n] = wallis_f(n);

  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational rhs = pow2(-long(n)) * Rational(binomial(2 * long(n), n));
    report.add_exact("sum1[n=" + std::to_string(n) + "]", to_display_string(f[n]), to_double(f[n]),
                     to_double(rhs), f[n] == rhs);
  }
  for (unsigned n = 0; n < n_max; ++n) {
    const Rational rhs = Rational(2 * n + 1, n + 1) * f[n];
    report.add_exact("recur2[n=" + std::to_string(n) + "]", to_display_string(f[n + 1]),
                     to_double(f[n + 1]), to_double(rhs), f[n + 1] == rhs);
  }
  for (unsigned n = 0; n <= std::min(n_max, expansion_max); ++n) {
    const PiPoly lhs = c_complete(2 * n, 0);
    PiPoly sum;
    for (unsigned i = 0; 2 * i <= n; ++i) sum += c_complete(2 * i, 0) * Rational(binomial(n, 2 * i));
    sum *= pow2(-long(n));
    report.add_exact("recur[n=" + std::to_string(n) + "]", lhs.to_text(),
                     lhs.evaluate().convert_to<double>(), sum.evaluate().convert_to<double>(),
                     lhs == sum);
  }
  return report;
}

}  // namespace trigint
