#pragma once

/**
 * @file pipoly.hpp
 * @brief Exact elements of Q[π].
 *
 * Every complete integral ∫₀^{π/2} xᵖ cosⁿx dx is a polynomial in π with
 * rational coefficients, so a dense coefficient vector is enough. The
 * vector is kept canonical: no trailing zero coefficients, and the zero
 * polynomial is the empty vector.
 */

#include "trigint/exact_core.hpp"
#include "trigint/precision.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace trigint {

class PiPoly {
 public:
  PiPoly() = default;
  /// coeffs[j] multiplies π^j; trailing zeros are trimmed.
  explicit PiPoly(std::vector<Rational> coeffs);
  PiPoly(const Rational& constant);  // NOLINT: Q embeds in Q[π]

  static PiPoly monomial(const Rational& c, std::size_t power);
  /// (π/2)^k
  static PiPoly half_pi_power(std::size_t k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of π^k, zero beyond the degree.
  Rational coeff(std::size_t k) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  PiPoly& operator*=(const PiPoly& o);
  PiPoly& operator*=(const Rational& s);

  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(PiPoly a, const PiPoly& b) { return a *= b; }
  friend PiPoly operator*(PiPoly a, const Rational& s) { return a *= s; }
  friend PiPoly operator*(const Rational& s, PiPoly a) { return a *= s; }
  friend PiPoly operator-(PiPoly a) { return a *= Rational(-1); }
  friend bool operator==(const PiPoly&, const PiPoly&) = default;

  /// Descending powers, e.g. "π³/48 − π/8" (Unicode minus and superscripts).
  std::string to_text() const;
  /// e.g. "\frac{\pi^{3}}{48} - \frac{\pi}{8}"
  std::string to_latex() const;
  /// {"pi_coeffs": ["num/den", ...]}, ascending powers.
  nlohmann::json to_json() const;
  static PiPoly from_json(const nlohmann::json& j);

  Real evaluate() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

enum class PolyOp { add, scale, mul };

/// Ring operations; `scale` requires a Rational right operand, add/mul
/// accept either (a Rational is read as a constant polynomial).
PiPoly pipoly_combine(PolyOp op, const PiPoly& a, const std::variant<PiPoly, Rational>& b);

/// Value of p rounded to `digits` significant digits (10 <= digits <= 100).
PrecisionFloat pipoly_eval(const PiPoly& p, int digits);

}  // namespace trigint
