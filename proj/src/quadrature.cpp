#include "trigint/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace trigint {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
// Odd indices of kXgk are the Gauss abscissae.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod21(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = 0;
  double resk = kWgk[10] * fc;
  for (int j = 0; j < 5; ++j) {
    const int jtw = 2 * j + 1;
    const double dx = half * kXgk[jtw];
    const double fsum = f(center - dx) + f(center + dx);
    resg += kWg[j] * fsum;
    resk += kWgk[jtw] * fsum;
  }
  for (int j = 0; j < 5; ++j) {
    const int jtwm1 = 2 * j;
    const double dx = half * kXgk[jtwm1];
    resk += kWgk[jtwm1] * (f(center - dx) + f(center + dx));
  }
  resk *= half;
  resg *= half;
  // Round-off floor so panels on a flat integrand can still be accepted.
  const double floor = 50 * std::numeric_limits<double>::epsilon() * std::fabs(resk);
  return {a, b, resk, std::max(std::fabs(resk - resg), floor)};
}

}  // namespace

QuadratureResult integrate_finite(const RealFunction& f, double a, double b, double tol,
                                  std::size_t max_subdivisions) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrate_finite: need finite a < b");
  if (!(tol >= 1e-13)) throw std::invalid_argument("integrate_finite: tol must be >= 1e-13");

  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod21(f, a, b);
  double total = first.value;
  double error = first.error;
  panels.push(first);
  std::size_t subdivisions = 0;

  while (error > tol && subdivisions < max_subdivisions) {
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) break;  // interval exhausted in double
    Panel left = gauss_kronrod21(f, worst.a, mid);
    Panel right = gauss_kronrod21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }

  // Re-sum from the panels to shed the drift of the running updates.
  double value = 0, err = 0;
  while (!panels.empty()) {
    value += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  QuadratureResult r;
  r.value = value;
  r.error_estimate = err;
  r.subdivisions = subdivisions;
  r.converged = std::isfinite(value) && err <= tol;
  return r;
}

QuadratureResult integrate_singular_head(const RealFunction& g, double p, double x_end, double tol,
                                         std::size_t max_subdivisions) {
  if (!(p >= 0 && p < 1)) throw std::invalid_argument("integrate_singular_head: need 0 <= p < 1");
  if (!(x_end > 0)) throw std::invalid_argument("integrate_singular_head: need x_end > 0");
  const double q = 1 - p;
  const double u_end = std::pow(x_end, q);
  auto h = [&](double u) { return g(std::pow(u, 1 / q)) / q; };
  return integrate_finite(h, 0.0, u_end, tol, max_subdivisions);
}

Acceleration accelerate_alternating(std::span<const double> partial_sums) {
  const std::size_t n = partial_sums.size();
  if (n < 6) throw std::invalid_argument("accelerate_alternating: need at least 6 partial sums");
  std::vector<double> level(partial_sums.begin(), partial_sums.end());
  std::vector<double> diagonal{level.back()};
  while (level.size() > 1) {
    for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = 0.5 * (level[i] + level[i + 1]);
    level.pop_back();
    diagonal.push_back(level.back());
  }
  // Deepest level whose step to the previous one is smallest.
  std::size_t best = 1;
  double best_step = std::fabs(diagonal[1] - diagonal[0]);
  for (std::size_t L = 2; L < diagonal.size(); ++L) {
    const double step = std::fabs(diagonal[L] - diagonal[L - 1]);
    if (step <= best_step) {
      best = L;
      best_step = step;
    }
  }
  double err = best_step;
  if (best + 1 < diagonal.size()) err = std::max(err, std::fabs(diagonal[best + 1] - diagonal[best]));
  err += 4 * std::numeric_limits<double>::epsilon() * std::fabs(diagonal[best]) * static_cast<double>(n);
  return {diagonal[best], err};
}

QuadratureResult integrate_halfline_osc(const OscillatorySpec& spec) {
  if (!(spec.p >= 0 && spec.p < 1))
    throw std::invalid_argument("integrate_halfline_osc: need 0 <= p < 1");
  if (spec.max_arches < 6) throw std::invalid_argument("integrate_halfline_osc: need >= 6 arches");
  constexpr double kPi = std::numbers::pi;
  const int power = static_cast<int>(2 * spec.n + 1);
  auto trig_power = [&](double x) {
    const double t = spec.kind == TrigKind::cos ? std::cos(x + spec.b) : std::sin(x + spec.b);
    return std::pow(t, power);
  };
  auto weight = [&](double x) { return spec.log_weight ? std::log(x) : 1.0; };

  // Zeros of trig(x+b) sit at offset + mπ.
  const double offset = spec.kind == TrigKind::cos ? kPi / 2 - spec.b : -spec.b;
  const double first_zero = offset + std::ceil((kPi / 2 - offset) / kPi) * kPi;

  constexpr double kInnerTol = 1e-13;
  QuadratureResult out;
  out.converged = true;
  const auto head = integrate_singular_head(
      [&](double x) { return weight(x) * trig_power(x); }, spec.p, first_zero, kInnerTol, 5000);
  out.converged &= head.converged;
  out.subdivisions += head.subdivisions;
  double quad_error = head.error_estimate;
  double running = head.value;

  out.partial_sums.reserve(spec.max_arches);
  for (unsigned m = 0; m < spec.max_arches; ++m) {
    const double lo = first_zero + m * kPi;
    const double hi = lo + kPi;
    const auto arch = integrate_finite(
        [&](double x) { return std::pow(x, -spec.p) * weight(x) * trig_power(x); }, lo, hi, kInnerTol);
    out.converged &= arch.converged;
    out.subdivisions += arch.subdivisions;
    quad_error += arch.error_estimate;
    running += arch.value;
    out.partial_sums.push_back(running);
  }
  const auto acc = accelerate_alternating(out.partial_sums);
  out.value = acc.value;
  out.error_estimate = acc.error_estimate + quad_error;
  out.converged = out.converged && out.error_estimate <= spec.tol;
  return out;
}

}  // namespace trigint
