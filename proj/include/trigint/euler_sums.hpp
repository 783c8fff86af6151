#pragma once

/**
 * @file euler_sums.hpp
 * @brief Finite nested sums over nondecreasing index tuples and the
 *        central-binomial tail sums.
 *
 *   even:  E_j(n) = Σ_{1 ≤ k₁ ≤ … ≤ k_j ≤ n} 1/(k₁²⋯k_j²)
 *   odd:   O_j(n) = Σ_{0 ≤ k₁ ≤ … ≤ k_j ≤ n} 1/((2k₁+1)²⋯(2k_j+1)²)
 *
 * Both obey values[j][n] = values[j][n-1] + w(n)·values[j-1][n] with
 * w(n) = 1/n² (even) or 1/(2n+1)² (odd).
 *
 * Tail terms:
 *   even:  T_k = 2^{2k}/(k² C(2k,k)),      k ≥ 1,  Σ T_k → π²/2
 *   odd:   U_k = C(2k,k)/(2^{2k}(2k+1)),   k ≥ 0,  Σ U_k → π/2
 */

#include "trigint/exact_core.hpp"
#include "trigint/precision.hpp"

#include <cstddef>
#include <mutex>
#include <vector>

namespace trigint {

enum class SumKind { even, odd };

/// Weight w(k) of one index in a nested sum.
Rational nested_weight(SumKind kind, unsigned k);

/// Term T_k (even) or U_k (odd) of the central tail.
Rational central_term(SumKind kind, unsigned k);

/**
 * Incrementally grown table of a nested-sum family. Row 0 is the base row;
 * rows j ≥ 1 follow the nested recurrence. With `tail_weighted` the base row
 * holds the central-tail partial sums instead of 1, which makes
 * values[j][n] = Σ_{j₀ ≤ k₁ ≤ … ≤ k_j ≤ n} tail_term(j₀)·Π w(k_i).
 *
 * Lookups lock internally; a table may be shared between threads.
 */
class NestedSumTable {
 public:
  NestedSumTable(SumKind kind, bool tail_weighted = false);

  SumKind kind() const { return kind_; }
  Rational at(unsigned depth, unsigned bound);

 private:
  void grow(unsigned depth, unsigned bound);
  Rational base(unsigned bound) const;

  SumKind kind_;
  bool tail_weighted_;
  std::mutex mutex_;
  std::vector<std::vector<Rational>> values_;  // values_[depth][bound]
};

Rational nested_sum(SumKind kind, unsigned depth, unsigned bound);

/// Exact partial sum of the central tail up to index m (even from k = 1,
/// odd from k = 0). Even kind with m = 0 throws std::domain_error.
Rational central_tail(SumKind kind, unsigned long m);

/// Same partial sum carried in 100-digit floating arithmetic; usable for
/// m far beyond what the exact fraction can hold.
Real central_tail_numeric(SumKind kind, unsigned long m);

/**
 * Tail-coupled nested sum: the innermost (smallest) index carries the tail
 * term instead of w(k).
 *   even:  Σ_{1 ≤ j₀ ≤ k₁ ≤ … ≤ k_d ≤ n} T_{j₀} Π 1/k_i²
 *   odd:   Σ_{0 ≤ j₀ ≤ k₁ ≤ … ≤ k_d ≤ n} U_{j₀} Π 1/(2k_i+1)²
 * For d = 0 this is central_tail(kind, n).
 */
Rational tail_coupled_sum(SumKind kind, unsigned depth, unsigned bound);

}  // namespace trigint
