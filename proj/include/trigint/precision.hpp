#pragma once

// Fixed 100-digit MPFR reals used to render exact results and to evaluate
// the transcendental closed forms.

#include "trigint/exact_core.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace trigint {

using Real = boost::multiprecision::mpfr_float_100;

inline constexpr int kMaxDigits = 100;
inline constexpr int kDefaultDigits = 50;

/// A Real tagged with the number of significant digits it is reported to.
struct PrecisionFloat {
  Real value;
  int digits = kDefaultDigits;

  /// Rounded to `digits` significant digits.
  std::string to_string() const;
  double to_double() const { return value.convert_to<double>(); }
};

/// Throws std::invalid_argument unless 1 <= digits <= kMaxDigits.
int checked_digits(int digits);

std::string format_real(const Real& x, int digits);

Real to_real(const Rational& q);

const Real& pi_real();
const Real& euler_gamma_real();
const Real& log2_real();

/// ξ = γ + 2 log 2, the constant behind Γ'(1/2) = -√π ξ.
const Real& xi_real();

/// Reduce an angle into [-π, π).
Real reduce_angle(const Real& x);

}  // namespace trigint
