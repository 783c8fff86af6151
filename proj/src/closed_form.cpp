#include "trigint/closed_form.hpp"

#include "trigint/euler_sums.hpp"
#include "trigint/recurrence.hpp"

#include <stdexcept>

namespace trigint {

std::vector<unsigned> BranchExpansion::pi_powers() const {
  std::vector<unsigned> out;
  for (unsigned j = 0; j < coeffs.size(); ++j) out.push_back(power(j));
  return out;
}

nlohmann::json BranchExpansion::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coeffs) cs.push_back(to_fraction_string(c));
  return {{"parity", parity == Parity::even ? "even" : "odd"},
          {"n", n},
          {"p", p},
          {"pi_powers", pi_powers()},
          {"coeffs", cs},
          {"star", star ? nlohmann::json(to_fraction_string(*star)) : nlohmann::json(nullptr)}};
}

namespace {

// Fill coeffs/star by reading the assembled polynomial (used for p ∈ {0,1}).
BranchExpansion from_assembled(Parity parity, unsigned n, unsigned p, PiPoly assembled) {
  BranchExpansion e{parity, n, p, {}, std::nullopt, std::move(assembled)};
  for (unsigned j = 0; j <= p / 2; ++j) e.coeffs.push_back(e.assembled.coeff(e.power(j)));
  if (p % 2 == 1) e.star = e.assembled.coeff(0);
  return e;
}

PiPoly assemble(const BranchExpansion& e) {
  PiPoly out;
  for (unsigned j = 0; j < e.coeffs.size(); ++j) out += PiPoly::monomial(e.coeffs[j], e.power(j));
  if (e.star) out += PiPoly(*e.star);
  return out;
}

}  // namespace

BranchExpansion even_branch(unsigned n, unsigned p) {
  if (p == 0) return from_assembled(Parity::even, n, p, base_value(BaseKind::wallis, 2 * n));
  if (p == 1) return from_assembled(Parity::even, n, p, base_value(BaseKind::cn1, 2 * n));

  const unsigned xi = p / 2;
  const BigInt central = binomial(2 * long(n), n);
  const BigInt pf = factorial(p);
  const BigInt two_pow = BigInt(1) << (2 * n + p + 1);

  BranchExpansion e{Parity::even, n, p, {}, std::nullopt, {}};
  for (unsigned j = 0; j <= xi; ++j) {
    const Rational pref = make_rational(central * pf * sign_pow(j), two_pow * factorial(p + 1 - 2 * j));
    e.coeffs.push_back(pref * nested_sum(SumKind::even, j, n));
  }
  if (p % 2 == 1) {
    const Rational pref = make_rational(central * pf * sign_pow(xi + 1), two_pow);
    e.star = n == 0 ? Rational(0) : Rational(pref * tail_coupled_sum(SumKind::even, xi, n));
  }
  e.assembled = assemble(e);
  return e;
}

BranchExpansion odd_branch(unsigned n, unsigned p) {
  if (p == 0) return from_assembled(Parity::odd, n, p, base_value(BaseKind::wallis, 2 * n + 1));
  if (p == 1) return from_assembled(Parity::odd, n, p, base_value(BaseKind::cn1, 2 * n + 1));

  const unsigned xi = p / 2;
  const BigInt central = binomial(2 * long(n), n);
  const BigInt pf = factorial(p);
  const BigInt den_common = BigInt(2 * n + 1) * central;

  BranchExpansion e{Parity::odd, n, p, {}, std::nullopt, {}};
  for (unsigned j = 0; j <= xi; ++j) {
    // 2^{2n+2j-p} may have either sign of exponent.
    const Rational pref = make_rational(pf * sign_pow(j), den_common * factorial(p - 2 * j)) *
                          pow2(long(2 * n + 2 * j) - long(p));
    e.coeffs.push_back(pref * nested_sum(SumKind::odd, j, n));
  }
  if (p % 2 == 1) {
    const Rational pref = make_rational(pf * sign_pow(xi + 1) * (BigInt(1) << (2 * n)), den_common);
    e.star = pref * tail_coupled_sum(SumKind::odd, xi, n);
  }
  e.assembled = assemble(e);
  return e;
}

Rational coeff_via_recurrence(unsigned n, unsigned p, unsigned j) {
  if (j > 2) throw std::invalid_argument("coeff_via_recurrence: only depths j <= 2 are supported");
  if (j > p / 2) return Rational(0);
  FirstOrderProblem<Rational> prob;
  prob.a = [](unsigned k) { return Rational(2 * k); };
  prob.b = [](unsigned k) { return Rational(2 * k - 1); };
  if (j == 0) {
    prob.r = [](unsigned) { return Rational(0); };
    prob.z0 = make_rational(BigInt(1), BigInt(p + 1) * (BigInt(1) << (p + 1)));
  } else {
    const long pp = static_cast<long>(p) * (static_cast<long>(p) - 1);
    prob.r = [p, j, pp](unsigned k) {
      return Rational(-pp, 2 * long(k)) * coeff_via_recurrence(k, p - 2, j - 1);
    };
    prob.z0 = Rational(0);
  }
  return solve_first_order(prob, n);
}

StarTermReport star_term_report(Parity parity, unsigned n, unsigned p) {
  if (p % 2 == 0) throw std::invalid_argument("star_term_report: p must be odd");
  const unsigned xi = p / 2;
  const SumKind kind = parity == Parity::even ? SumKind::even : SumKind::odd;
  const unsigned first = parity == Parity::even ? 1 : 0;
  // Σ_{k₁≤…≤k_p≤n} Π w(k_i) · tail(k_p) = Σ_k w(k) tail(k) N_{p-1}(k)
  Rational sum(0);
  for (unsigned k = first; k <= n; ++k)
    sum += nested_weight(kind, k) * central_tail(kind, k) * nested_sum(kind, p - 1, k);
  const BigInt central = binomial(2 * long(n), n);
  const BigInt pf = factorial(p);
  Rational pref = parity == Parity::even
                      ? make_rational(central * pf * sign_pow(xi), BigInt(1) << (2 * n))
                      : make_rational(pf * sign_pow(xi) * (BigInt(1) << (2 * n)), BigInt(2 * n + 1) * central);
  const unsigned big_n = parity == Parity::even ? 2 * n : 2 * n + 1;
  return {parity, n, p, pref * sum, c_complete(big_n, p).coeff(0)};
}

}  // namespace trigint
