#pragma once

// Verification sweeps driving the CLI `verify` command and the acceptance
// suite. Case order is fixed by the loops, so reports are deterministic.

#include "trigint/exact_core.hpp"
#include "trigint/verification.hpp"

#include <vector>

namespace trigint {

struct CompleteSweepBounds {
  unsigned max_n = 8;
  unsigned max_p = 8;
  double tol = 1e-10;
  bool exact_closed_form = true;  // also compare branch expansions exactly
};

struct HalfLineSweepBounds {
  unsigned max_n = 3;
  std::vector<Rational> ps{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  std::vector<double> bs{0.0, 0.5, 1.5707963267948966};
  double tol = 1e-6;
};

struct ExamplesSweepBounds {
  double consistency_tol = 1e-12;
  double oracle_tol = 1e-5;
  double fresnel_tol = 1e-9;
  unsigned max_n = 3;
};

VerificationReport verify_complete(const CompleteSweepBounds& bounds);
VerificationReport verify_halfline(const HalfLineSweepBounds& bounds);
VerificationReport verify_examples(const ExamplesSweepBounds& bounds);

/// Re[Lⁿ] with L = ∫₀^∞ log x e^{ix²} dx = (√π/4) e^{iπ/4} (-ξ + iπ/2):
/// the n-fold log integral assembled from the one-dimensional factor.
double multidim_by_factorization(unsigned n);

}  // namespace trigint
