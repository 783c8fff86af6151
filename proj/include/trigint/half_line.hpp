#pragma once

/**
 * @file half_line.hpp
 * @brief Gamma-function closed forms of the half-line integrals
 *
 *   C_n(p,b) = ∫₀^∞ x^{-p} cos^{2n+1}(x+b) dx
 *            = Γ(1-p)/2^{2n} Σ_{k=0}^{n} C(2n+1,n-k) sin(πp/2 - (2k+1)b) / (2k+1)^{1-p}
 *   S_n(p,b) = ∫₀^∞ x^{-p} sin^{2n+1}(x+b) dx
 *            = Γ(1-p)/2^{2n} Σ_{k=0}^{n} (-1)^k C(2n+1,n-k) cos(πp/2 - (2k+1)b) / (2k+1)^{1-p}
 *
 * for 0 < p < 1, together with the special cases and parameter derivatives
 * built on them. The exponent p is carried as an exact Rational; only the
 * final transcendental evaluation is rounded.
 */

#include "trigint/exact_core.hpp"
#include "trigint/precision.hpp"
#include "trigint/quadrature.hpp"
#include "trigint/trig_kind.hpp"
#include "trigint/verification.hpp"

#include <json.hpp>

#include <vector>

namespace trigint {

/// weight · freq^{exponent} · phase(shift)
struct ClosedFormTerm {
  Rational weight;
  unsigned frequency = 1;
  Rational exponent;
  TrigKind phase = TrigKind::sin;
  Real shift;
};

/// Γ(gamma_arg) · scale · Σ terms
struct ClosedFormSum {
  Rational gamma_arg;
  Rational scale;
  std::vector<ClosedFormTerm> terms;

  Real evaluate() const;
  /// e.g. "Γ(1/2)·(1/4)·[3·1^(-1/2)·sin(0.785…) + 1·3^(-1/2)·sin(-1.57…)]"
  std::string to_text(int digits) const;
  std::string to_latex(int digits) const;
  /// {"gamma_arg","scale","terms":[{"weight","freq","exp","phase","shift"}]}
  nlohmann::json to_json() const;
};

struct HalfLineValue {
  ClosedFormSum form;
  PrecisionFloat value;
};

/// Γ(x) for 0 < x < 2 (std::domain_error outside).
Real gamma_real(const Real& x);

/// Γ'(1/2) = -√π (γ + 2 log 2)
const Real& gamma_prime_half();

/// C_n(p,b) (cos) or S_n(p,b) (sin). p must lie in (0,1) and at least
/// 1e-6 away from either end; std::domain_error otherwise.
HalfLineValue halfline_power(TrigKind kind, unsigned n, const Rational& p, const Real& b);

/// ∫₀^∞ trig^{2n+1}(x^p) dx for real p > 1:
///   2^{-2n} Γ((p+1)/p) {cos|sin}(π/(2p)) Σ (±1)^k C(2n+1,n-k) (2k+1)^{-1/p}
PrecisionFloat power_arg(TrigKind kind, unsigned n, const Real& p);

/// 2^{-2n} √(π/2) Σ_{k=0}^{n} C(2n+1,n+k+1)/√(2k+1), evaluated literally.
/// Its terms are checked to coincide exactly (weights, frequencies,
/// exponents) with halfline_power(cos, n, 1/2, 0); std::logic_error if not.
HalfLineValue gr_822_1(unsigned n);

/// ∫₀^∞ x^{-p} cos(ax+b) dx = -a^{p-1} Γ(1-p) sin(b - pπ/2)
/// ∫₀^∞ x^{-p} sin(ax+b) dx =  a^{p-1} Γ(1-p) cos(b - pπ/2)
PrecisionFloat linear_phase(TrigKind kind, const Real& a, const Real& b, const Rational& p);

/// ∫₀^∞ log x · cos^{2n+1}(x²) dx
PrecisionFloat log_weighted(unsigned n);

/// ∫₀^∞∫₀^∞ cos^{2n+1}(x+y) / (x^p y^q) dx dy
///   = -Γ(1-p)Γ(1-q) cos(π(p+q)/2) 2^{-2n} Σ C(2n+1,n-k) (2k+1)^{p+q-2}
PrecisionFloat double_log(const Rational& p, const Rational& q, unsigned n);

/// ∫₀^∞∫₀^∞ log x log y cos(x+y)/√(xy) dx dy = (γ + 2 log 2) π²
PrecisionFloat double_log_special();

struct ComplexReal {
  Real re;
  Real im;
};

struct MultidimResult {
  unsigned n = 0;
  unsigned long delta = 0;  // n(n+1)/2
  ComplexReal psi;          // (γ + 2 log 2 + iπ/2)^n e^{iπn/4}
  PrecisionFloat value;     // (-1)^Δ π^{n/2}/2^{2n} · (Re ψ if n even, Im ψ if n odd)
};

/// ∫_{R₊ⁿ} cos(|x|²) Π log x_j dV; n >= 1.
MultidimResult multidim_log(unsigned n);

/// FresnelC(x) = ∫₀^x cos(πt²/2) dt by its Taylor series, 0 <= x <= 4.
/// x > 4 throws std::out_of_range; x < 0 throws std::domain_error.
PrecisionFloat fresnel_c(const Real& x);

/// ∫₀^{π/2} x^{-1/2} cos x dx two ways: √(2π)·FresnelC(1) and the
/// singular-endpoint quadrature.
struct FresnelIdentityPair {
  Real series_side;
  QuadratureResult quadrature_side;
};
FresnelIdentityPair fresnel_identity_pair(double tol = 1e-12);

/// Exact check of
///   (-1)^k 2^{-2n} C(2n+1,n-k) (2k+1) = (2n+1) Σ_{j=k}^{n} (-1)^j 2^{-2j} C(n,j) C(2j+1,j-k)
/// for 0 <= k <= n <= n_max, plus the recurrence
///   2(n+k+2)(n+1-k) u(n+1,k) = (n+1)(2n+3) u(n,k),   u(0,0) = 1
/// on both sides.
VerificationReport check_sum99(unsigned n_max);

/// Central-difference check of the differential system linking
/// f_j = C_j(p,b) and g_j = S_j(p,b):
///   ∂g_n/∂b - (-1)^n (2n+1) f_n =  (2n+1) Σ_{j<n} (-1)^j C(n,j) f_j
///   ∂f_n/∂b + (-1)^n (2n+1) g_n = -(2n+1) Σ_{j<n} (-1)^j C(n,j) g_j
VerificationReport check_ode_system(unsigned n, const Rational& p, const Real& b,
                                    const Real& h = Real("1e-5"), double tol = 1e-7);

}  // namespace trigint
