#pragma once

// Engine for one-sided power-phase integrals
//
//   ∫₀^∞ e^{±iλx^p} x^{q-1} ψ(x) dx,     p > 0, q > 0,
//
// where ψ is smooth (a cutoff χ(εx), an Abel damping e^{-τx}, or a Schwartz
// amplitude). The half line is split into
//   - a near-origin piece [0, x₀] integrated in u = x^q, which removes the
//     x^{q-1} singularity,
//   - half-period panels in t = x^p on [x₀, X], where the phase is linear,
//   - a tail [X, ∞) replaced by the boundary terms of repeated integration
//     by parts with the transpose of L = (1/(±iλp x^{p-1})) d/dx.
// When ψ dies out (or has compact support) within the panel budget, the
// panels simply run to its effective radius and no tail is needed.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "error.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "types.hpp"

namespace gfresnel {

/// A smooth real factor ψ that can report its Taylor data anywhere.
template <class F>
concept SmoothFactor = requires(const F& f, double x, std::size_t degree) {
  { f(x) } -> std::convertible_to<double>;
  { f.series_at(x, x, degree) } -> std::same_as<Series<double>>;
  { f.effective_radius() } -> std::convertible_to<double>;
  { f.compact() } -> std::convertible_to<bool>;
};

/// The phase ±λx^p together with the weight exponent q of x^{q-1}.
struct PowerPhase {
  double p = 1.0;
  double q = 1.0;
  Sign sign = Sign::plus;
  double lambda = 1.0;
};

/// ψ ≡ 1. Lets the transforms below describe the bare Fresnel integrand.
struct UnitFactor {
  double operator()(double) const { return 1.0; }
  Series<double> series_at(double, double, std::size_t degree) const {
    return Series<double>::constant(1.0, degree);
  }
  double effective_radius() const { return std::numeric_limits<double>::infinity(); }
  bool compact() const { return false; }
};

/// The integrand after `times` integrations by parts against the phase.
///
/// With κ = ±i/(λp), after k steps the integrand is
///   G_k(x) = κ^k x^{q-1-kp} Σ_l c[k][l] (x^l ψ^{(l)}(x) / l!),
/// and  ∫_{x₀}^∞ e g = Σ_{k<times} B_k(x₀) + ∫_{x₀}^∞ e G_times  where
///   B_k(x₀) = e(x₀) x₀^q (κ x₀^{-p})^{k+1} Σ_l c[k][l] S_l
/// and S_l are the Taylor coefficients of u ↦ ψ(x₀(1+u)). Each step lowers
/// the order of the integrand in x by p.
class IbpTransform {
 public:
  IbpTransform(PowerPhase phase, unsigned times) : phase_(phase), times_(times) {
    if (!(phase.p > 0.0)) throw domain_error("integration by parts needs p > 0");
    if (!(phase.lambda > 0.0)) throw domain_error("integration by parts needs lambda > 0");
    table_.assign(times + 1, {});
    table_[0] = {1.0};
    for (unsigned k = 0; k < times; ++k) {
      const double beta = phase.q - 1.0 - k * phase.p;
      auto& next = table_[k + 1];
      next.assign(k + 2, 0.0);
      for (unsigned l = 0; l <= k; ++l) {
        const double c = table_[k][l];
        next[l] += c * (beta + l + 1.0 - phase.p);
        next[l + 1] += c * (l + 1.0);
      }
    }
  }

  /// Smallest number of steps after which the transformed tail is
  /// absolutely integrable: q - 1 - kp < -1.
  static unsigned required_times(double p, double q) {
    if (!(p > 0.0)) throw domain_error("required_times needs p > 0");
    return static_cast<unsigned>(std::floor(q / p)) + 1;
  }

  unsigned times() const noexcept { return times_; }
  const PowerPhase& phase() const noexcept { return phase_; }
  /// Power of x that bounds |G_times| at infinity, uniformly in the cutoff scale.
  double order() const noexcept { return phase_.q - 1.0 - times_ * phase_.p; }
  bool absolutely_integrable() const noexcept { return order() < -1.0; }
  const std::vector<std::vector<double>>& table() const noexcept { return table_; }

  complex kappa() const { return complex(0.0, sign_factor(phase_.sign) / (phase_.lambda * phase_.p)); }

  /// G_k(x) from the scaled Taylor coefficients S_l of u ↦ ψ(x(1+u)).
  complex integrand(unsigned k, double x, const Series<double>& scaled) const {
    check_degree(k, scaled);
    double sum = 0.0;
    for (unsigned l = 0; l <= k; ++l) sum += table_[k][l] * scaled[l];
    return std::pow(kappa(), static_cast<int>(k)) * std::pow(x, phase_.q - 1.0 - k * phase_.p) * sum;
  }

  template <SmoothFactor F>
  complex integrand(double x, const F& psi) const {
    return integrand(times_, x, psi.series_at(x, x, times_));
  }

  /// B_k(x₀) without the phase factor e(x₀).
  complex boundary_term(unsigned k, double x0, const Series<double>& scaled) const {
    check_degree(k, scaled);
    double sum = 0.0;
    for (unsigned l = 0; l <= k; ++l) sum += table_[k][l] * scaled[l];
    const complex ratio = kappa() * std::pow(x0, -phase_.p);
    return std::pow(x0, phase_.q) * std::pow(ratio, static_cast<int>(k + 1)) * sum;
  }

  /// Σ_{k<times} B_k(x₀), phase factor included.
  template <SmoothFactor F>
  complex boundary(double x0, const F& psi) const {
    const Series<double> scaled = psi.series_at(x0, x0, times_);
    complex sum{};
    for (unsigned k = 0; k < times_; ++k) sum += boundary_term(k, x0, scaled);
    return phase_at(x0) * sum;
  }

  complex phase_at(double x) const {
    return std::polar(1.0, sign_factor(phase_.sign) * phase_.lambda * std::pow(x, phase_.p));
  }

 private:
  void check_degree(unsigned k, const Series<double>& s) const {
    if (k > times_) throw domain_error("integration-by-parts stage beyond the prepared table");
    if (s.degree() < k) throw domain_error("Taylor data too short for the integration-by-parts stage");
  }

  PowerPhase phase_;
  unsigned times_;
  std::vector<std::vector<double>> table_;
};

struct EngineOptions {
  /// Half-period panels allowed before the tail expansion becomes mandatory.
  std::size_t panel_budget = 60000;
  /// First tail split is placed where λX^p reaches this value.
  double tail_phase = 64.0;
  unsigned max_tail_terms = 60;
  double rel_tol = 1e-13;
};

struct PhaseIntegral {
  complex value{};
  double error = 0.0;
  double abs_scale = 0.0;
  std::size_t evaluations = 0;
  std::size_t panels = 0;
  /// Upper end of the direct quadrature; the tail starts here when used.
  double split = 0.0;
  bool tail_used = false;
  unsigned tail_terms = 0;
};

namespace detail {

struct TailSum {
  complex value{};
  double error = 0.0;
  unsigned terms = 0;
  bool converged = false;
};

template <SmoothFactor F>
TailSum ibp_tail(const PowerPhase& phase, const F& psi, double x, unsigned max_terms, double abs_tol) {
  const IbpTransform transform(phase, max_terms);
  const Series<double> scaled = psi.series_at(x, x, max_terms);
  TailSum tail;
  if (scaled.is_zero()) {
    tail.converged = true;
    return tail;
  }
  double previous = std::numeric_limits<double>::infinity();
  int small_in_a_row = 0;
  for (unsigned k = 0; k < max_terms; ++k) {
    const complex term = transform.boundary_term(k, x, scaled);
    const double size = std::abs(term);
    if (!std::isfinite(size)) break;
    if (k > 2 && size > previous && size > abs_tol) break;  // past the smallest term
    tail.value += term;
    tail.error = size;
    tail.terms = k + 1;
    previous = size;
    if (size <= abs_tol) {
      if (++small_in_a_row == 2) {
        tail.converged = true;
        break;
      }
    } else {
      small_in_a_row = 0;
    }
  }
  tail.value *= transform.phase_at(x);
  if (!tail.converged) tail.converged = tail.error <= abs_tol;
  return tail;
}

}  // namespace detail

/// ∫₀^∞ e^{±iλx^p} x^{q-1} ψ(x) dx for real p, q > 0.
template <SmoothFactor F>
PhaseIntegral integrate_power_phase(const PowerPhase& phase, const F& psi, const EngineOptions& opts = {}) {
  const double p = phase.p;
  const double q = phase.q;
  const double lambda = phase.lambda;
  const double sigma = sign_factor(phase.sign);
  if (!(p > 0.0) || !(q > 0.0) || !(lambda > 0.0)) {
    throw domain_error("power-phase integral requires p > 0, q > 0 and lambda > 0");
  }

  PhaseIntegral out;
  AdaptiveOptions adaptive;
  adaptive.rel_tol = opts.rel_tol;
  adaptive.max_intervals = 200;

  // Near origin, u = x^q:  (1/q) ∫₀^{U} e^{iσλ u^{p/q}} ψ(u^{1/q}) du.
  const double t_near = std::max(1.0, 2.0 * q / p) / lambda;
  const double radius = psi.effective_radius();
  const double t_dead = std::isfinite(radius) ? std::pow(radius, p) : std::numeric_limits<double>::infinity();
  const double t_near_end = std::min(t_near, t_dead);
  {
    const double u_end = std::pow(t_near_end, q / p);
    auto f = [&](double u) {
      if (u <= 0.0) return complex(psi(0.0) / q, 0.0);
      return std::polar(psi(std::pow(u, 1.0 / q)) / q, sigma * lambda * std::pow(u, p / q));
    };
    adaptive.max_intervals = 2000;
    const QuadratureResult near = integrate_adaptive(f, 0.0, u_end, adaptive);
    adaptive.max_intervals = 200;
    if (!near.converged && near.error > 1e-9 * std::max(near.abs_integral, 1e-300)) {
      throw quadrature_error("near-origin quadrature did not converge");
    }
    out.value += near.value;
    out.error += near.error;
    out.abs_scale += near.abs_integral;
    out.evaluations += near.evaluations;
  }
  if (t_near_end >= t_dead) {
    out.split = radius;
    return out;
  }

  const double period = std::numbers::pi / lambda;
  auto panel_count = [&](double t_end) { return (t_end - t_near_end) / period; };

  // Half-period panels in t = x^p on [t_near_end, t_end]; phase bookkeeping is
  // done relative to each panel start to keep large λt arguments exact.
  auto direct = [&](double t_end) {
    const auto n = static_cast<std::size_t>(std::ceil(panel_count(t_end) - 1e-12));
    const complex start_phase = std::polar(1.0, sigma * lambda * t_near_end);
    for (std::size_t j = 0; j < n; ++j) {
      const double a = t_near_end + j * period;
      const double b = std::min(t_end, a + period);
      if (b <= a) break;
      const complex panel_phase = (j % 2 == 0 ? 1.0 : -1.0) * start_phase;
      auto f = [&](double t) {
        const double weight = std::pow(t, q / p - 1.0) / p * psi(std::pow(t, 1.0 / p));
        return weight * panel_phase * std::polar(1.0, sigma * lambda * (t - a));
      };
      QuadratureResult r = integrate_adaptive(f, a, b, adaptive);
      if (!r.converged && r.error > 1e-9 * std::max(r.abs_integral, 1e-300)) {
        throw quadrature_error("oscillatory panel quadrature did not converge");
      }
      out.value += r.value;
      out.error += r.error;
      out.abs_scale += r.abs_integral;
      out.evaluations += r.evaluations;
    }
    out.panels += n;
  };

  const bool dead_affordable = std::isfinite(t_dead) && panel_count(t_dead) <= static_cast<double>(opts.panel_budget);
  if (psi.compact() && dead_affordable) {
    direct(t_dead);
    out.split = radius;
    return out;
  }

  double t_split = std::max(opts.tail_phase / lambda, t_near_end);
  for (;;) {
    if (std::isfinite(t_dead) && t_split >= t_dead && dead_affordable) {
      direct(t_dead);
      out.split = radius;
      return out;
    }
    if (panel_count(t_split) > static_cast<double>(opts.panel_budget)) {
      throw quadrature_error("oscillatory quadrature exceeds its panel budget (p=" + std::to_string(p) +
                             ", q=" + std::to_string(q) + ", lambda=" + std::to_string(lambda) + ")");
    }
    const double x_split = std::pow(t_split, 1.0 / p);
    // Absolute target from the size of the integrand near the split.
    const double scale = std::max(out.abs_scale, std::pow(x_split, q) * std::abs(psi(x_split)) / (lambda * p * t_split));
    const auto tail = detail::ibp_tail(phase, psi, x_split, opts.max_tail_terms, 1e-3 * opts.rel_tol * std::max(scale, 1e-300));
    if (tail.converged) {
      direct(t_split);
      out.value += tail.value;
      out.error += tail.error;
      out.split = x_split;
      out.tail_used = true;
      out.tail_terms = tail.terms;
      return out;
    }
    t_split *= 4.0;
  }
}

}  // namespace gfresnel
