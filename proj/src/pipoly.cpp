#include "trigint/pipoly.hpp"

#include <stdexcept>

namespace trigint {

PiPoly::PiPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

PiPoly::PiPoly(const Rational& constant) : coeffs_{constant} { normalize(); }

PiPoly PiPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return PiPoly(std::move(v));
}

PiPoly PiPoly::half_pi_power(std::size_t k) {
  return monomial(pow2(-static_cast<long>(k)), k);
}

Rational PiPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

void PiPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

PiPoly& PiPoly::operator*=(const PiPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

PiPoly& PiPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

namespace {

std::string superscript(std::size_t k) {
  static const char* const kDigits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string digits = std::to_string(k);
  std::string out;
  for (char c : digits) out += kDigits[c - '0'];
  return out;
}

const char* const kMinus = "−";

}  // namespace

std::string PiPoly::to_text() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += kMinus;
    } else {
      out += negative ? std::string(" ") + kMinus + " " : std::string(" + ");
    }
    first = false;
    const BigInt num = abs(boost::multiprecision::numerator(c));
    const BigInt den = boost::multiprecision::denominator(c);
    if (idx == 0) {
      out += num.str();
    } else {
      if (num != 1) out += num.str();
      out += "π";
      if (idx > 1) out += superscript(idx);
    }
    if (den != 1) out += "/" + den.str();
  }
  return out;
}

std::string PiPoly::to_latex() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const BigInt num = abs(boost::multiprecision::numerator(c));
    const BigInt den = boost::multiprecision::denominator(c);
    std::string top;
    if (idx == 0) {
      top = num.str();
    } else {
      if (num != 1) top = num.str() + " ";
      top += "\\pi";
      if (idx > 1) top += "^{" + std::to_string(idx) + "}";
    }
    out += den == 1 ? top : "\\frac{" + top + "}{" + den.str() + "}";
  }
  return out;
}

nlohmann::json PiPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(to_fraction_string(c));
  return nlohmann::json{{"pi_coeffs", arr}};
}

PiPoly PiPoly::from_json(const nlohmann::json& j) {
  std::vector<Rational> v;
  for (const auto& s : j.at("pi_coeffs")) v.push_back(parse_rational(s.get<std::string>()));
  return PiPoly(std::move(v));
}

Real PiPoly::evaluate() const {
  Real acc = 0;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) acc = acc * pi_real() + to_real(coeffs_[idx]);
  return acc;
}

PiPoly pipoly_combine(PolyOp op, const PiPoly& a, const std::variant<PiPoly, Rational>& b) {
  switch (op) {
    case PolyOp::add:
      return std::visit([&](const auto& rhs) { return a + PiPoly(rhs); }, b);
    case PolyOp::mul:
      return std::visit([&](const auto& rhs) { return a * PiPoly(rhs); }, b);
    case PolyOp::scale:
      if (const auto* s = std::get_if<Rational>(&b)) return a * *s;
      throw std::invalid_argument("scale needs a Rational operand");
  }
  throw std::invalid_argument("unknown PolyOp");
}

PrecisionFloat pipoly_eval(const PiPoly& p, int digits) {
  if (digits < 10 || digits > kMaxDigits)
    throw std::invalid_argument("pipoly_eval: digits must lie in [10, 100]");
  return PrecisionFloat{p.evaluate(), digits};
}

}  // namespace trigint
