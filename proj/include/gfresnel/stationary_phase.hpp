#pragma once

// Stationary phase expansions for power phases with a degenerate critical
// point at 0, and the numerical harness that checks their orders.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "amplitude.hpp"
#include "error.hpp"
#include "fresnel.hpp"
#include "oscillatory.hpp"
#include "quadrature.hpp"
#include "types.hpp"

namespace gfresnel {

struct ExpansionTerm {
  double exponent = 0.0;  // the term is coefficient · λ^{-exponent}
  complex coefficient{};
};

struct AsymptoticExpansion {
  std::vector<ExpansionTerm> terms;
  /// The remainder after these terms is O(λ^{-remainder_exponent}).
  double remainder_exponent = 0.0;

  complex partial_sum(double lambda) const {
    complex sum{};
    for (const auto& t : terms) sum += t.coefficient * std::pow(lambda, -t.exponent);
    return sum;
  }
};

/// ∫₀^∞ e^{±iλx^p} a(x) dx ~ Σ_{k<N} p^{-1} e^{±iπ(k+1)/(2p)} Γ((k+1)/p) a^{(k)}(0)/k! λ^{-(k+1)/p}.
inline AsymptoticExpansion half_line_expansion(double p, const Amplitude& a, Sign sign, unsigned N) {
  if (!(p > 0.0)) throw domain_error("half_line_expansion requires p > 0");
  if (!(N + 1.0 > p)) throw domain_error("half_line_expansion requires N + 1 > p");
  AsymptoticExpansion e;
  e.remainder_exponent = (N + 1.0) / p - 1.0;
  for (unsigned k = 0; k < N; ++k) {
    const double tk = a.taylor_coefficient(k);
    const complex c = tk == 0.0 ? complex{} : closed_form({p, complex(k + 1.0)}, sign) * tk;
    e.terms.push_back({(k + 1.0) / p, c});
  }
  return e;
}

/// ∫_{-∞}^{∞} e^{±iλx^m} a(x) dx, m a positive integer.
inline AsymptoticExpansion full_line_expansion(unsigned m, const Amplitude& a, Sign sign, unsigned N) {
  if (m < 1) throw domain_error("full_line_expansion requires m >= 1");
  if (!(N + 1 > m)) throw domain_error("full_line_expansion requires N + 1 > m");
  AsymptoticExpansion e;
  e.remainder_exponent = (N + 1.0) / m - 1.0;
  for (unsigned k = 0; k < N; ++k) {
    const double tk = a.taylor_coefficient(k);
    const complex c = tk == 0.0 ? complex{} : full_line_term_coefficient(m, k, sign) * tk;
    e.terms.push_back({(k + 1.0) / m, c});
  }
  return e;
}

/// ∫₀^∞ e^{±iλx^p} x^{q-1} a(x) dx by direct quadrature (absolutely convergent).
/// λ = 0 switches the phase off.
inline PhaseIntegral weighted_half_line_value(double p, double q, const Amplitude& a, Sign sign, double lambda,
                                              const EngineOptions& options = {}) {
  if (!(p > 0.0) || !(q > 0.0)) throw domain_error("weighted_half_line_value requires p > 0 and q > 0");
  if (lambda == 0.0) {
    // u = x^q removes the endpoint singularity.
    const double end = std::pow(a.effective_radius(), q);
    auto f = [&](double u) { return complex(a(std::pow(u, 1.0 / q)) / q, 0.0); };
    AdaptiveOptions opts;
    opts.max_intervals = 2000;
    const QuadratureResult r = integrate_adaptive(f, 0.0, end, opts);
    PhaseIntegral out;
    out.value = r.value;
    out.error = r.error;
    out.abs_scale = r.abs_integral;
    out.evaluations = r.evaluations;
    out.split = a.effective_radius();
    return out;
  }
  if (!(lambda >= 1.0)) throw domain_error("weighted_half_line_value requires lambda >= 1 (or 0)");
  return integrate_power_phase(PowerPhase{p, q, sign, lambda}, a, options);
}

/// ∫_{-∞}^{∞} e^{±iλx^m} a(x) dx as two half-line quadratures; the left half
/// uses a(-x) and the sign (-1)^m.
inline PhaseIntegral full_line_value(unsigned m, const Amplitude& a, Sign sign, double lambda,
                                     const EngineOptions& options = {}) {
  if (m < 1) throw domain_error("full_line_value requires m >= 1");
  PhaseIntegral right = weighted_half_line_value(m, 1.0, a, sign, lambda, options);
  const PhaseIntegral left = weighted_half_line_value(m, 1.0, a.reflected(), m % 2 == 0 ? sign : flip(sign), lambda, options);
  right.value += left.value;
  right.error += left.error;
  right.abs_scale += left.abs_scale;
  right.evaluations += left.evaluations;
  right.panels += left.panels;
  return right;
}

/// ∫ e^{±iλx²} e^{-x²/2} dx = √(π/(1/2 ∓ iλ)).
inline complex gaussian_quadratic_exact(Sign sign, double lambda) {
  return std::sqrt(std::numbers::pi / complex(0.5, -sign_factor(sign) * lambda));
}

/// Log-spaced grid of `points` values in [lo, hi], all ≥ 1.
inline std::vector<double> lambda_grid(double lo = 1e2, double hi = 1e4, unsigned points = 5) {
  if (!(lo >= 1.0) || !(hi > lo) || points < 2) throw domain_error("lambda grid needs 1 <= lo < hi and >= 2 points");
  std::vector<double> grid(points);
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (unsigned i = 0; i < points; ++i) grid[i] = std::pow(10.0, a + (b - a) * i / (points - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

struct DecaySample {
  double lambda = 0.0;
  double value = 0.0;  // |I(λ)| or |R_N(λ)|
  double noise = 0.0;  // absolute quadrature error behind the value
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;  // log |value| at log λ = 0
  /// Samples clamped up to their noise level (censored mode only).
  unsigned censored = 0;
};

/// Least-squares slope of log|value| against log λ. A value that does not
/// clear its noise level makes the fit degenerate; with `censored` set it is
/// replaced by the noise level instead, which can only make the slope less
/// negative at the large-λ end.
inline SlopeFit decay_slope_fit(std::span<const DecaySample> samples, bool censored = false) {
  if (samples.size() < 4) throw domain_error("slope fit needs at least 4 grid points");
  double lo = samples.front().lambda, hi = lo;
  for (const auto& s : samples) {
    lo = std::min(lo, s.lambda);
    hi = std::max(hi, s.lambda);
  }
  if (!(lo > 0.0) || std::log10(hi / lo) < 2.0 - 1e-9) throw domain_error("slope fit grid must span at least 2 decades");

  SlopeFit fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& s : samples) {
    double v = s.value;
    if (!(v > s.noise) || !(v > 0.0)) {
      if (!censored || !(s.noise > 0.0)) {
        throw convergence_error("degenerate slope fit: value " + std::to_string(v) + " at lambda " +
                                std::to_string(s.lambda) + " is at the quadrature noise floor " +
                                std::to_string(s.noise));
      }
      v = std::max(v, s.noise);
      ++fit.censored;
    }
    const double x = std::log(s.lambda);
    const double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(samples.size());
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

enum class Domain { halfline, line };

inline Domain parse_domain(std::string_view s) {
  if (s == "halfline") return Domain::halfline;
  if (s == "line") return Domain::line;
  throw domain_error("domain must be 'halfline' or 'line'");
}

struct ExpansionPoint {
  double lambda = 0.0;
  complex oracle{};
  double oracle_error = 0.0;
  complex partial_sum{};
  double abs_remainder = 0.0;
};

struct ExpansionReport {
  AsymptoticExpansion expansion;
  std::string oracle_kind;  // "closed_form" or "quadrature"
  std::vector<ExpansionPoint> points;
  SlopeFit fit;
  double threshold = 0.0;  // slopes at or below this pass
  bool slope_pass = false;
  /// C = |R(λ₀)| λ₀^r fitted at the first grid point; worst |R(λ)| λ^r / C on the grid.
  double envelope_constant = 0.0;
  double envelope_ratio = 0.0;
  bool envelope_pass = false;
  bool pass() const { return slope_pass && envelope_pass; }
};

/// Oracle for the expansion of ∫ e^{±iλx^power} a(x) dx on the chosen domain.
inline PhaseIntegral expansion_oracle(Domain domain, double power, const Amplitude& a, Sign sign, double lambda,
                                      std::string* kind = nullptr) {
  const bool plain_gaussian = a.kind() == AmplitudeKind::poly_gaussian && a.polynomial().size() == 1 &&
                              a.polynomial()[0] == 1.0;
  if (domain == Domain::line && power == 2.0 && plain_gaussian) {
    if (kind) *kind = "closed_form";
    PhaseIntegral r;
    r.value = gaussian_quadratic_exact(sign, lambda);
    return r;
  }
  if (kind) *kind = "quadrature";
  if (domain == Domain::halfline) return weighted_half_line_value(power, 1.0, a, sign, lambda);
  if (power != std::floor(power) || power < 1.0) throw domain_error("full-line phase power must be a positive integer");
  return full_line_value(static_cast<unsigned>(power), a, sign, lambda);
}

/// Compares the N-term expansion against its oracle over a λ grid spanning
/// at least two decades.
inline ExpansionReport expansion_vs_oracle(Domain domain, double power, const Amplitude& a, Sign sign, unsigned N,
                                           std::span<const double> grid, bool censored = false) {
  ExpansionReport report;
  if (domain == Domain::line) {
    if (power != std::floor(power) || power < 1.0) throw domain_error("full-line phase power must be a positive integer");
    report.expansion = full_line_expansion(static_cast<unsigned>(power), a, sign, N);
  } else {
    report.expansion = half_line_expansion(power, a, sign, N);
  }
  const double r = report.expansion.remainder_exponent;
  std::vector<DecaySample> samples;
  for (double lambda : grid) {
    ExpansionPoint pt;
    pt.lambda = lambda;
    const PhaseIntegral o = expansion_oracle(domain, power, a, sign, lambda, &report.oracle_kind);
    pt.oracle = o.value;
    pt.oracle_error = o.error;
    pt.partial_sum = report.expansion.partial_sum(lambda);
    pt.abs_remainder = std::abs(pt.oracle - pt.partial_sum);
    report.points.push_back(pt);
    samples.push_back({lambda, pt.abs_remainder, o.error});
  }
  report.fit = decay_slope_fit(samples, censored);
  report.threshold = -r + 0.1;
  report.slope_pass = report.fit.slope <= report.threshold;

  const auto& first = report.points.front();
  report.envelope_constant = first.abs_remainder * std::pow(first.lambda, r);
  double worst = 0.0;
  for (const auto& pt : report.points) {
    worst = std::max(worst, pt.abs_remainder * std::pow(pt.lambda, r) / report.envelope_constant);
  }
  report.envelope_ratio = worst;
  report.envelope_pass = report.envelope_constant > 0.0 && worst <= 1.1;
  return report;
}

/// Leading coefficient c₀ of v(λ) ≈ c₀ λ^{-exponent} (1 + c₁ λ^{-gap}),
/// by least squares of v(λ) λ^{exponent} against λ^{-gap}.
inline complex fit_leading_coefficient(std::span<const double> lambdas, std::span<const complex> values,
                                       double exponent, double gap) {
  if (lambdas.size() != values.size() || lambdas.size() < 2) throw domain_error("leading-coefficient fit needs >= 2 points");
  double sx = 0, sxx = 0;
  complex sy{}, sxy{};
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double x = std::pow(lambdas[i], -gap);
    const complex y = values[i] * std::pow(lambdas[i], exponent);
    sx += x;
    sxx += x * x;
    sy += y;
    sxy += x * y;
  }
  const double n = static_cast<double>(lambdas.size());
  const complex slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return (sy - slope * sx) / n;
}

}  // namespace gfresnel
