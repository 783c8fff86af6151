#pragma once

/**
 * @file closed_form.hpp
 * @brief Non-recursive expansions of the complete integrals by parity of n.
 *
 * Even branch, X_n(p) = c(2n,p), ξ = ⌊p/2⌋:
 *
 *   X_n(p) = Σ_{j=0}^{ξ} a_j π^{p+1-2j} + [p odd]·a*
 *   a_j = (-1)^j C(2n,n) p! / (2^{2n+p+1} (p+1-2j)!) · E_j(n)
 *   a*  = (-1)^{ξ+1} C(2n,n) p! / 2^{2n+p+1} · Σ_{1≤j₀≤k₁≤…≤k_ξ≤n} T_{j₀} Π 1/k_i²
 *
 * Odd branch, Y_n(p) = c(2n+1,p):
 *
 *   Y_n(p) = Σ_{j=0}^{ξ} b_j π^{p-2j} + [p odd]·b*
 *   b_j = (-1)^j p! 2^{2n+2j-p} / ((2n+1) C(2n,n) (p-2j)!) · O_j(n)
 *   b*  = (-1)^{ξ+1} p! 2^{2n} / ((2n+1) C(2n,n)) · Σ_{0≤j₀≤k₁≤…≤k_ξ≤n} U_{j₀} Π 1/(2k_i+1)²
 *
 * E_j, O_j, T, U are defined in euler_sums.hpp. The star sums attach the
 * central-tail term to the smallest index of the tuple.
 */

#include "trigint/exact_core.hpp"
#include "trigint/pipoly.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace trigint {

enum class Parity { even, odd };

struct BranchExpansion {
  Parity parity = Parity::even;
  unsigned n = 0;
  unsigned p = 0;
  std::vector<Rational> coeffs;  // j = 0..⌊p/2⌋
  std::optional<Rational> star;  // present iff p is odd
  PiPoly assembled;

  /// Power of π multiplied by coeffs[j].
  unsigned power(unsigned j) const { return (parity == Parity::even ? p + 1 : p) - 2 * j; }
  std::vector<unsigned> pi_powers() const;

  /// {"parity","n","p","pi_powers","coeffs","star"}
  nlohmann::json to_json() const;
};

BranchExpansion even_branch(unsigned n, unsigned p);
BranchExpansion odd_branch(unsigned n, unsigned p);

/// Coefficient a_{n,p,p+1-2j} of the even branch for j ∈ {0,1,2}, computed
/// by iterating the coefficient recurrences
///   2n a_{n,p,·} = (2n-1) a_{n-1,p,·} - (p(p-1)/(2n)) a_{n,p-2,·}
/// from a_{0,p,p+1} = 1/((p+1)2^{p+1}), a_{0,p,p+1-2j} = 0 (j ≥ 1).
/// Returns 0 when j > ⌊p/2⌋. Throws std::invalid_argument for j > 2.
Rational coeff_via_recurrence(unsigned n, unsigned p, unsigned j);

/// The star term with the tail tied to the LARGEST index of a depth-p
/// tuple and sign (-1)^ξ, prefactor C(2n,n)p!/2^{2n} (even) or
/// p!2^{2n}/((2n+1)C(2n,n)) (odd). Kept for comparison only; it does not
/// reproduce c(·,p).
struct StarTermReport {
  Parity parity;
  unsigned n;
  unsigned p;
  Rational largest_index_form;
  Rational recurrence_value;  // constant term of c_complete
  bool agree() const { return largest_index_form == recurrence_value; }
};

/// Requires p odd.
StarTermReport star_term_report(Parity parity, unsigned n, unsigned p);

}  // namespace trigint
