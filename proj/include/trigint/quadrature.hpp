#pragma once

/**
 * @file quadrature.hpp
 * @brief Numerical ground truth for the exact and closed-form evaluators.
 *
 * integrate_finite is a globally adaptive 21-point Gauss-Kronrod rule with
 * bisection of the panel carrying the largest |K21 - G10| estimate.
 *
 * integrate_halfline_osc handles ∫₀^∞ x^{-p} [log x] trig^{2n+1}(x+b) dx:
 *  - head [0, z₀] up to the first zero z₀ ≥ π/2 of trig(x+b), integrated
 *    after x = u^{1/(1-p)}, which turns x^{-p} dx into du/(1-p);
 *  - arches [z₀ + mπ, z₀ + (m+1)π] between consecutive zeros, whose
 *    integrals alternate in sign;
 *  - accelerate_alternating on the partial sums.
 *
 * Everything runs in double precision.
 */

#include "trigint/trig_kind.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace trigint {

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  std::size_t subdivisions = 0;
  bool converged = false;
  /// Half-line integrals only: head + cumulative arch sums.
  std::vector<double> partial_sums;
};

using RealFunction = std::function<double(double)>;

/// Requires a < b finite and tol >= 1e-13 (std::invalid_argument otherwise).
/// Hitting max_subdivisions yields converged = false with the best value.
QuadratureResult integrate_finite(const RealFunction& f, double a, double b, double tol,
                                  std::size_t max_subdivisions = 2000);

/// ∫₀^{x_end} x^{-p} g(x) dx for 0 <= p < 1, via x = u^{1/(1-p)}.
QuadratureResult integrate_singular_head(const RealFunction& g, double p, double x_end, double tol,
                                         std::size_t max_subdivisions = 2000);

struct OscillatorySpec {
  double p = 0.5;  // exponent of x^{-p}, 0 <= p < 1
  TrigKind kind = TrigKind::cos;
  unsigned n = 0;  // trig power is 2n+1
  double b = 0;
  bool log_weight = false;  // multiply by log x
  double tol = 1e-6;
  unsigned max_arches = 60;
};

QuadratureResult integrate_halfline_osc(const OscillatorySpec& spec);

struct Acceleration {
  double value = 0;
  double error_estimate = 0;
};

/// Iterated pairwise averaging of partial sums of an alternating series.
/// Throws std::invalid_argument with fewer than 6 partial sums.
Acceleration accelerate_alternating(std::span<const double> partial_sums);

}  // namespace trigint
