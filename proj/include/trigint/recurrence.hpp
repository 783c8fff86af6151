#pragma once

/**
 * @file recurrence.hpp
 * @brief Exact evaluation of the complete integrals
 *
 *   c(n,p) = ∫₀^{π/2} xᵖ cosⁿx dx,   s(n,p) = ∫₀^{π/2} xᵖ sinⁿx dx
 *
 * through the two-step recurrence
 *
 *   c(n,p) = ((n-1)/n) c(n-2,p) - (p(p-1)/n²) c(n,p-2),   n, p ≥ 2,
 *
 * bottoming out at the four base families c(0,p), c(n,0), c(1,p), c(n,1).
 * Also hosts the generic first-order recurrence solver
 *
 *   a(n) z_n = b(n) z_{n-1} + r(n),   n ≥ 1,
 *
 * and the Wallis identity checks.
 */

#include "trigint/exact_core.hpp"
#include "trigint/pipoly.hpp"
#include "trigint/trig_kind.hpp"
#include "trigint/verification.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace trigint {

template <class Value>
struct FirstOrderProblem {
  std::function<Rational(unsigned)> a;
  std::function<Rational(unsigned)> b;
  std::function<Value(unsigned)> r;
  Value z0;
};

/// z_n = (b₁⋯b_n / a₁⋯a_n)(z₀ + Σ_{k=1}^{n} (a₁⋯a_{k-1} / b₁⋯b_k) r_k).
/// Throws std::domain_error naming the index when a(k) or b(k) is zero.
template <class Value>
Value solve_first_order(const FirstOrderProblem<Value>& prob, unsigned n) {
  Rational prod_a(1);  // a₁⋯a_{k-1}
  Rational prod_b(1);  // b₁⋯b_k
  Value acc = prob.z0;
  for (unsigned k = 1; k <= n; ++k) {
    const Rational ak = prob.a(k);
    const Rational bk = prob.b(k);
    if (ak == 0) throw std::domain_error("solve_first_order: a(" + std::to_string(k) + ") = 0");
    if (bk == 0) throw std::domain_error("solve_first_order: b(" + std::to_string(k) + ") = 0");
    prod_b *= bk;
    acc += prob.r(k) * Rational(prod_a / prod_b);
    prod_a *= ak;
  }
  return acc * Rational(prod_b / prod_a);
}

using Family = TrigKind;

struct CompleteIntegralKey {
  Family family = Family::cos;
  unsigned n = 0;
  unsigned p = 0;
  auto operator<=>(const CompleteIntegralKey&) const = default;
};

enum class BaseKind {
  c0p,     ///< c(0,p) = (π/2)^{p+1}/(p+1)
  wallis,  ///< c(n,0)
  c1p,     ///< c(1,p)
  cn1      ///< c(n,1)
};

/// Closed forms of the four base families. c1p is computed twice (finite
/// sum and the Taylor-polynomial form of cos) and throws std::logic_error
/// if the two disagree.
PiPoly base_value(BaseKind kind, unsigned idx);

/// c(1,p) from the alternating finite sum only.
PiPoly c1p_sum_form(unsigned p);
/// c(1,p) as f_p(π/2) (p odd) or f_p'(π/2) (p even), f_p built from the
/// Taylor polynomial of cos.
PiPoly c1p_taylor_form(unsigned p);

/// c(n,1) obtained by running solve_first_order on the parity branch of
/// c(n,1) = ((n-1)/n) c(n-2,1) - 1/n²; independent of the closed form.
PiPoly cn1_by_solver(unsigned n);

/// Memoized evaluator; thread-safe.
class CompleteIntegralEngine {
 public:
  PiPoly cos_integral(unsigned n, unsigned p);
  /// Reflection x ↦ π/2 - x: s(n,p) = Σ_k C(p,k) (π/2)^{p-k} (-1)^k c(n,k).
  PiPoly sin_integral(unsigned n, unsigned p);
  PiPoly evaluate(const CompleteIntegralKey& key);

  std::size_t memo_size() const;

 private:
  PiPoly cos_unlocked(unsigned n, unsigned p);

  mutable std::mutex mutex_;
  std::map<std::pair<unsigned, unsigned>, PiPoly> cos_memo_;
  std::map<std::pair<unsigned, unsigned>, PiPoly> sin_memo_;
};

/// Process-wide engine.
CompleteIntegralEngine& default_engine();

PiPoly c_complete(unsigned n, unsigned p);
PiPoly s_complete(unsigned n, unsigned p);

/// f(n) = Σ_i 2^{-2i} C(n,2i) C(2i,i)
Rational wallis_f(unsigned n);

/// For every n ≤ n_max: f(n) = 2^{-n} C(2n,n); f(n+1) = ((2n+1)/(n+1)) f(n)
/// for n < n_max; and c(2n,0) = 2^{-n} Σ_i C(n,2i) c(2i,0) for
/// n ≤ min(n_max, expansion_max).
VerificationReport check_wallis_identities(unsigned n_max, unsigned expansion_max = 30);

}  // namespace trigint
