#pragma once

// Oscillatory integrals as ε→0 limits of cutoff-regularized integrals, plus
// the two independent oracles (rotated contour, Abel damping).

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "cutoff.hpp"
#include "error.hpp"
#include "extrapolation.hpp"
#include "fresnel.hpp"
#include "oscillatory.hpp"
#include "quadrature.hpp"
#include "special_functions.hpp"
#include "types.hpp"

namespace gfresnel {

/// Result of a regularized evaluation. The error estimate is the last
/// Cauchy difference of the extrapolants plus the largest quadrature error
/// among the samples that fed the final extrapolant (heuristic factor 1).
struct QuadratureOutcome {
  complex value{};
  double error_estimate = 0.0;
  std::vector<std::pair<double, complex>> per_epsilon_values;
  bool converged = false;
};

/// ψ(x) = ε^k χ^{(k)}(εx), i.e. d^k/dx^k [χ(εx)]. A negative ε reflects the
/// cutoff, which the full-line integrals need on the negative half line.
class ScaledCutoff {
 public:
  ScaledCutoff(const CutoffFunction& chi, double eps, unsigned derivative = 0)
      : chi_(&chi), eps_(eps), k_(derivative) {}

  double operator()(double x) const {
    if (k_ == 0) return (*chi_)(eps_ * x);
    return std::pow(eps_, static_cast<int>(k_)) * chi_->derivative(k_, eps_ * x);
  }

  Series<double> series_at(double x, double scale, std::size_t degree) const {
    const double t0 = eps_ * x;
    const Series<double> base = chi_->series_at(t0, eps_ * scale, degree + k_);
    if (k_ == 0) return base;
    // d^k/du^k of χ(εx + εscale·u), divided by scale^k.
    Series<double> out(degree);
    for (std::size_t m = 0; m <= degree; ++m) {
      double falling = 1.0;
      for (std::size_t j = 1; j <= k_; ++j) falling *= static_cast<double>(m + j);
      out[m] = base[m + k_] * falling / std::pow(scale, static_cast<int>(k_));
    }
    return out;
  }

  double effective_radius() const { return chi_->effective_radius() / std::abs(eps_); }
  bool compact() const { return chi_->compact(); }

 private:
  const CutoffFunction* chi_;
  double eps_;
  unsigned k_;
};

/// ψ(x) = e^{-τx}.
class AbelDamping {
 public:
  explicit AbelDamping(double tau) : tau_(tau) {}
  double operator()(double x) const { return std::exp(-tau_ * x); }
  Series<double> series_at(double x, double scale, std::size_t degree) const {
    return Series<double>::linear(-tau_ * x, -tau_ * scale, degree).exp();
  }
  double effective_radius() const { return 52.0 / tau_; }
  bool compact() const { return false; }

 private:
  double tau_;
};

namespace detail {

inline void require_real_positive(const FresnelParams& params) {
  if (!(params.p > 0.0)) throw domain_error("p must be positive");
  if (params.q.imag() != 0.0 || !(params.q.real() > 0.0)) {
    throw domain_error("q must be a positive real for the oscillatory integral");
  }
}

/// Evaluates `sample(ε)` over the schedule and extrapolates to ε = 0 in
/// h = ε² (even cutoffs) or h = ε. When the last extrapolants have not
/// settled, the schedule is continued by halving ε up to `max_extension`
/// more times.
template <class Sample>
QuadratureOutcome extrapolate_schedule(const EpsilonSchedule& schedule, bool even, Sample&& sample,
                                       unsigned max_extension = 8) {
  schedule.validate();
  QuadratureOutcome out;
  std::vector<double> h;
  std::vector<complex> values;
  std::vector<double> errors;
  double scale = 0.0;
  auto add = [&](double eps) {
    const PhaseIntegral r = sample(eps);
    out.per_epsilon_values.emplace_back(eps, r.value);
    h.push_back(even ? eps * eps : eps);
    values.push_back(r.value);
    errors.push_back(r.error);
    scale = std::max(scale, std::abs(r.value));
  };
  for (const double eps : schedule.values) add(eps);

  Extrapolation ex = extrapolate_to_zero(h, values, schedule.order, 1e-8, scale);
  for (unsigned extra = 0; !ex.converged && extra < max_extension; ++extra) {
    add(0.5 * out.per_epsilon_values.back().first);
    ex = extrapolate_to_zero(h, values, schedule.order, 1e-8, scale);
  }
  const auto window = static_cast<std::ptrdiff_t>(schedule.order + 1);
  const double quad_error = *std::max_element(errors.end() - window, errors.end());
  out.value = ex.value;
  out.error_estimate = ex.difference + quad_error;
  out.converged = ex.converged;
  if (!ex.converged && !ex.differences_decreasing) {
    throw convergence_error("epsilon extrapolation did not settle: last Cauchy difference " +
                            std::to_string(ex.difference));
  }
  return out;
}

}  // namespace detail

/// Os-∫₀^∞ e^{±iλx^p} x^{q-1} dx as lim_{ε→0} ∫₀^∞ e^{±iλx^p} x^{q-1} χ(εx) dx.
inline QuadratureOutcome regularized_integral(const FresnelParams& params, Sign sign, const CutoffFunction& chi,
                                              const EpsilonSchedule& schedule = EpsilonSchedule::geometric(),
                                              double lambda = 1.0, const EngineOptions& options = {}) {
  detail::require_real_positive(params);
  const PowerPhase phase{params.p, params.q.real(), sign, lambda};
  return detail::extrapolate_schedule(schedule, chi.even(), [&](double eps) {
    return integrate_power_phase(phase, ScaledCutoff(chi, eps), options);
  });
}

/// lim_{ε→0} ∫₀^∞ e^{±ix^p} x^{q-1} (d/dx)^k χ(εx) dx, which vanishes for k ≥ 1.
inline QuadratureOutcome chi_derivative_integral(const FresnelParams& params, Sign sign, unsigned k,
                                                 const CutoffFunction& chi,
                                                 const EpsilonSchedule& schedule = EpsilonSchedule::geometric()) {
  detail::require_real_positive(params);
  if (k == 0) throw domain_error("chi_derivative_integral requires k >= 1");
  const PowerPhase phase{params.p, params.q.real(), sign, 1.0};
  return detail::extrapolate_schedule(schedule, chi.even(), [&](double eps) {
    return integrate_power_phase(phase, ScaledCutoff(chi, eps, k));
  });
}

/// Os-∫_{-∞}^{∞} e^{±iλx^m} dx, both half lines regularized by the same χ(εx).
inline QuadratureOutcome regularized_full_line(unsigned m, Sign sign, const CutoffFunction& chi,
                                               const EpsilonSchedule& schedule = EpsilonSchedule::geometric(),
                                               double lambda = 1.0) {
  if (m == 0) throw domain_error("full-line phase power must be >= 1");
  const PowerPhase right{static_cast<double>(m), 1.0, sign, lambda};
  const PowerPhase left{static_cast<double>(m), 1.0, (m % 2 == 0) ? sign : flip(sign), lambda};
  return detail::extrapolate_schedule(schedule, chi.even(), [&](double eps) {
    PhaseIntegral r = integrate_power_phase(right, ScaledCutoff(chi, eps));
    const PhaseIntegral l = integrate_power_phase(left, ScaledCutoff(chi, -eps));
    r.value += l.value;
    r.error += l.error;
    return r;
  });
}

/// The integrand of the tail after `times` integrations by parts against
/// e^{±ix^p}; see IbpTransform.
inline IbpTransform ibp_precondition(const FresnelParams& params, Sign sign, unsigned times) {
  detail::require_real_positive(params);
  return IbpTransform(PowerPhase{params.p, params.q.real(), sign, 1.0}, times);
}

/// e^{±iπq/(2p)} ∫₀^∞ e^{-t^p} t^{q-1} dt by quadrature only. The substitution
/// u = t^q turns the integral into (1/q) ∫₀^∞ e^{-u^{p/q}} du.
inline complex rotated_contour_oracle(const FresnelParams& params, Sign sign) {
  detail::require_real_positive(params);
  const double p = params.p;
  const double q = params.q.real();
  const double r = p / q;
  auto f = [r](double u) { return complex(std::exp(-std::pow(u, r)), 0.0); };
  AdaptiveOptions opts;
  opts.rel_tol = 1e-15;
  opts.max_intervals = 4000;
  const double u_end = std::pow(745.0, 1.0 / r);
  QuadratureResult total = integrate_adaptive(f, 0.0, std::min(1.0, u_end), opts);
  if (u_end > 1.0) total += integrate_adaptive(f, 1.0, u_end, opts);
  if (!total.converged && total.error > 1e-12 * total.abs_integral) {
    throw quadrature_error("rotated-contour quadrature exceeded its refinement budget");
  }
  return exp_i_pi(sign_factor(sign) * 0.5 * q / p) * total.value.real() / q;
}

/// lim_{τ→0} ∫₀^∞ e^{±ix} x^{q-1} e^{-τx} dx, extrapolated over a τ schedule
/// mirroring the ε schedule (linear in τ).
inline QuadratureOutcome abel_oracle(double q, Sign sign = Sign::plus,
                                     const EpsilonSchedule& schedule = EpsilonSchedule::geometric()) {
  if (!(q > 0.0)) throw domain_error("abel_oracle requires q > 0");
  const PowerPhase phase{1.0, q, sign, 1.0};
  return detail::extrapolate_schedule(schedule, false, [&](double tau) {
    return integrate_power_phase(phase, AbelDamping(tau));
  });
}

}  // namespace gfresnel
