#pragma once

// Adaptive Gauss–Kronrod (10/21 point) quadrature for complex-valued
// integrands on finite intervals.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "types.hpp"

namespace gfresnel {

struct QuadratureResult {
  complex value{};
  double error = 0.0;
  /// ∫|f| over the interval, the natural scale for oscillatory integrands.
  double abs_integral = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;

  QuadratureResult& operator+=(const QuadratureResult& o) {
    value += o.value;
    error += o.error;
    abs_integral += o.abs_integral;
    evaluations += o.evaluations;
    converged = converged && o.converged;
    return *this;
  }
};

struct AdaptiveOptions {
  double abs_tol = 0.0;
  /// Relative to ∫|f|, not |∫f|, so cancelling panels terminate.
  double rel_tol = 1e-13;
  std::size_t max_intervals = 400;
};

namespace detail {

// Kronrod abscissae; odd indices are the Gauss 10-point nodes.
inline constexpr std::array<double, 11> kronrod21_x = {
    0.00000000000000000000000000000000000e+00, 1.48874338981631210884826001129719985e-01,
    2.94392862701460198131126603103865566e-01, 4.33395394129247190799265943165784162e-01,
    5.62757134668604683339000099272694141e-01, 6.79409568299024406234327365114873576e-01,
    7.80817726586416897063717578345042377e-01, 8.65063366688984510732096688423493049e-01,
    9.30157491355708226001207180059508346e-01, 9.73906528517171720077964012084452053e-01,
    9.95657163025808080735527280689002848e-01};
inline constexpr std::array<double, 11> kronrod21_w = {
    1.49445554002916905664936468389821204e-01, 1.47739104901338491374841515972068046e-01,
    1.42775938577060080797094273138717061e-01, 1.34709217311473325928054001771706833e-01,
    1.23491976262065851077958109831074160e-01, 1.09387158802297641899210590325804960e-01,
    9.31254545836976055350654650833663444e-02, 7.50396748109199527670431409161900094e-02,
    5.47558965743519960313813002445801764e-02, 3.25581623079647274788189724593897606e-02,
    1.16946388673718742780643960621920484e-02};
inline constexpr std::array<double, 5> gauss10_w = {
    2.95524224714752870173892994651338329e-01, 2.69266719309996355091226921569469353e-01,
    2.19086362515982043995534934228163192e-01, 1.49451349150580593145776339657697332e-01,
    6.66713443086881375935688098933317929e-02};

}  // namespace detail

/// One 21-point Kronrod panel with the QUADPACK error heuristic.
template <class F>
QuadratureResult gauss_kronrod_21(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<complex, 21> values;
  values[0] = f(center);
  for (std::size_t j = 1; j < 11; ++j) {
    const double dx = half * detail::kronrod21_x[j];
    values[2 * j - 1] = f(center - dx);
    values[2 * j] = f(center + dx);
  }

  complex kronrod = detail::kronrod21_w[0] * values[0];
  complex gauss{};
  double resabs = detail::kronrod21_w[0] * std::abs(values[0]);
  for (std::size_t j = 1; j < 11; ++j) {
    const complex pair = values[2 * j - 1] + values[2 * j];
    kronrod += detail::kronrod21_w[j] * pair;
    resabs += detail::kronrod21_w[j] * (std::abs(values[2 * j - 1]) + std::abs(values[2 * j]));
    if (j % 2 == 1) gauss += detail::gauss10_w[j / 2] * pair;
  }
  const complex mean = 0.5 * kronrod;
  double resasc = detail::kronrod21_w[0] * std::abs(values[0] - mean);
  for (std::size_t j = 1; j < 11; ++j) {
    resasc += detail::kronrod21_w[j] *
              (std::abs(values[2 * j - 1] - mean) + std::abs(values[2 * j] - mean));
  }

  const double scale = std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  resasc *= scale;
  resabs *= scale;
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);

  QuadratureResult r;
  r.value = kronrod * half;
  r.error = err;
  r.abs_integral = resabs;
  r.evaluations = 21;
  return r;
}

/// Globally adaptive bisection on [a, b]: the panel with the largest error
/// estimate is split until the total error meets the tolerance or the
/// interval budget is spent (then `converged` is false).
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, const AdaptiveOptions& opts = {}) {
  struct Piece {
    double a, b;
    QuadratureResult r;
    bool operator<(const Piece& o) const { return r.error < o.r.error; }
  };
  if (a == b) return {};

  std::priority_queue<Piece> heap;
  Piece first{a, b, gauss_kronrod_21(f, a, b)};
  QuadratureResult total = first.r;
  heap.push(first);

  auto satisfied = [&] {
    return total.error <= std::max(opts.abs_tol, opts.rel_tol * total.abs_integral);
  };

  while (!satisfied()) {
    if (heap.size() >= opts.max_intervals) {
      total.converged = false;
      break;
    }
    Piece worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
      total.converged = false;  // interval no longer divisible in double
      break;
    }
    heap.pop();
    Piece left{worst.a, mid, gauss_kronrod_21(f, worst.a, mid)};
    Piece right{mid, worst.b, gauss_kronrod_21(f, mid, worst.b)};
    total.value += left.r.value + right.r.value - worst.r.value;
    total.error += left.r.error + right.r.error - worst.r.error;
    total.abs_integral += left.r.abs_integral + right.r.abs_integral - worst.r.abs_integral;
    total.evaluations += left.r.evaluations + right.r.evaluations;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the incremental updates.
  if (heap.size() > 1) {
    QuadratureResult fresh;
    fresh.converged = total.converged;
    fresh.evaluations = total.evaluations;
    while (!heap.empty()) {
      const Piece& piece = heap.top();
      fresh.value += piece.r.value;
      fresh.error += piece.r.error;
      fresh.abs_integral += piece.r.abs_integral;
      heap.pop();
    }
    total = fresh;
  }
  return total;
}

}  // namespace gfresnel
