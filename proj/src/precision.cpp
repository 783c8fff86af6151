#include "trigint/precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>
#include <stdexcept>

namespace trigint {

int checked_digits(int digits) {
  if (digits < 1 || digits > kMaxDigits)
    throw std::invalid_argument("digits must lie in [1, " + std::to_string(kMaxDigits) + "]");
  return digits;
}

std::string format_real(const Real& x, int digits) {
  return x.str(checked_digits(digits), std::ios_base::fmtflags(0));
}

std::string PrecisionFloat::to_string() const { return format_real(value, digits); }

Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q).str()) /
         Real(boost::multiprecision::denominator(q).str());
}

const Real& pi_real() {
  static const Real v = boost::math::constants::pi<Real>();
  return v;
}

const Real& euler_gamma_real() {
  static const Real v = boost::math::constants::euler<Real>();
  return v;
}

const Real& log2_real() {
  static const Real v = boost::math::constants::ln_two<Real>();
  return v;
}

const Real& xi_real() {
  static const Real v = euler_gamma_real() + 2 * log2_real();
  return v;
}

Real reduce_angle(const Real& x) {
  const Real two_pi = 2 * pi_real();
  Real r = x - two_pi * floor((x + pi_real()) / two_pi);
  return r;
}

}  // namespace trigint
