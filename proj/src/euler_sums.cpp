#include "trigint/euler_sums.hpp"

#include <stdexcept>

namespace trigint {

Rational nested_weight(SumKind kind, unsigned k) {
  const BigInt base = kind == SumKind::even ? BigInt(k) : BigInt(2 * BigInt(k) + 1);
  if (base == 0) throw std::domain_error("nested_weight: even index must be >= 1");
  return make_rational(BigInt(1), base * base);
}

Rational central_term(SumKind kind, unsigned k) {
  if (kind == SumKind::even) {
    if (k == 0) throw std::domain_error("central_term: even tail starts at k = 1");
    BigInt kk(k);
    return make_rational(BigInt(1) << (2 * k), kk * kk * binomial(2 * long(k), k));
  }
  return make_rational(binomial(2 * long(k), k), (BigInt(1) << (2 * k)) * (2 * BigInt(k) + 1));
}

NestedSumTable::NestedSumTable(SumKind kind, bool tail_weighted)
    : kind_(kind), tail_weighted_(tail_weighted) {}

Rational NestedSumTable::base(unsigned bound) const {
  if (!tail_weighted_) return Rational(1);
  if (kind_ == SumKind::even && bound == 0) return Rational(0);
  return central_tail(kind_, bound);
}

void NestedSumTable::grow(unsigned depth, unsigned bound) {
  if (values_.size() <= depth) values_.resize(depth + 1);
  for (unsigned j = 0; j <= depth; ++j) {
    auto& row = values_[j];
    for (unsigned n = static_cast<unsigned>(row.size()); n <= bound; ++n) {
      if (j == 0) {
        // The base row is a running sum for tail-weighted tables.
        if (tail_weighted_ && n > 0) {
          row.push_back(row[n - 1] + central_term(kind_, n));
        } else {
          row.push_back(base(n));
        }
        continue;
      }
      const auto& prev = values_[j - 1];
      if (n == 0) {
        // even: empty index range; odd: the single tuple k = 0 with weight 1.
        row.push_back(kind_ == SumKind::even ? Rational(0) : prev[0]);
        continue;
      }
      row.push_back(row[n - 1] + nested_weight(kind_, n) * prev[n]);
    }
  }
}

Rational NestedSumTable::at(unsigned depth, unsigned bound) {
  std::lock_guard lock(mutex_);
  if (values_.size() <= depth || values_[depth].size() <= bound) grow(depth, bound);
  return values_[depth][bound];
}

namespace {

NestedSumTable& shared_table(SumKind kind, bool tail_weighted) {
  static NestedSumTable even(SumKind::even), odd(SumKind::odd);
  static NestedSumTable even_tail(SumKind::even, true), odd_tail(SumKind::odd, true);
  if (tail_weighted) return kind == SumKind::even ? even_tail : odd_tail;
  return kind == SumKind::even ? even : odd;
}

}  // namespace

Rational nested_sum(SumKind kind, unsigned depth, unsigned bound) {
  return shared_table(kind, false).at(depth, bound);
}

Rational tail_coupled_sum(SumKind kind, unsigned depth, unsigned bound) {
  return shared_table(kind, true).at(depth, bound);
}

Rational central_tail(SumKind kind, unsigned long m) {
  if (kind == SumKind::even && m == 0)
    throw std::domain_error("central_tail: even kind sums from k = 1, m must be >= 1");
  Rational sum(0);
  const unsigned long first = kind == SumKind::even ? 1 : 0;
  for (unsigned long k = first; k <= m; ++k) sum += central_term(kind, static_cast<unsigned>(k));
  return sum;
}

Real central_tail_numeric(SumKind kind, unsigned long m) {
  if (kind == SumKind::even && m == 0)
    throw std::domain_error("central_tail: even kind sums from k = 1, m must be >= 1");
  // ratio = C(2k,k)/4^k, advanced by the exact factor (2k-1)/(2k).
  Real ratio = 1;
  Real sum = kind == SumKind::odd ? Real(1) : Real(0);
  for (unsigned long k = 1; k <= m; ++k) {
    ratio *= Real(2 * k - 1) / Real(2 * k);
    if (kind == SumKind::even) {
      sum += 1 / (ratio * Real(k) * Real(k));
    } else {
      sum += ratio / Real(2 * k + 1);
    }
  }
  return sum;
}

}  // namespace trigint
