#pragma once

// Generalized Fresnel integrals
//
//   Ĩ±_{p,q} = Os-∫₀^∞ e^{±ix^p} x^{q-1} dx = p^{-1} e^{±iπq/(2p)} Γ(q/p),
//
// their continuation in q (simple poles at q = -pj) and in p (simple poles
// at p = -q/j), the generalized Beta function built from them, and the
// coefficients of the full-line stationary phase expansion for x^m.

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "error.hpp"
#include "special_functions.hpp"
#include "types.hpp"

namespace gfresnel {

/// |q + pj| below this (times max(1, pj)) counts as sitting on the pole.
inline constexpr double pole_tolerance = 1e-9;

namespace detail {

/// e^{∓iπj/2}(-1)^j/j!, the residue in q of Ĩ± at q = -pj.
inline complex residue_in_q(unsigned j, Sign sign) {
  return exp_i_pi(-sign_factor(sign) * 0.5 * j) * gamma_residue(j);
}

}  // namespace detail

/// The pole of Ĩ±_{p,·} closest to q, with its residue.
inline PoleReport nearest_pole_in_q(double p, complex q, Sign sign) {
  if (!(p > 0.0)) throw domain_error("p must be positive");
  const double j_real = std::max(0.0, std::round(-q.real() / p));
  const auto j = static_cast<unsigned>(j_real);
  return PoleReport{complex(-p * j, 0.0), 1, detail::residue_in_q(j, sign)};
}

inline bool at_pole_in_q(double p, complex q, Sign sign = Sign::plus) {
  const PoleReport pole = nearest_pole_in_q(p, q, sign);
  const double pj = -pole.location.real();
  return std::abs(q - pole.location) < pole_tolerance * std::max(1.0, pj);
}

/// p^{-1} e^{±iπq/(2p)} Γ(q/p). For real q > 0 this is the oscillatory
/// integral; for p > q > 0 it is also the improper Riemann integral; for
/// other q it is the meromorphic continuation.
inline complex closed_form(const FresnelParams& params, Sign sign) {
  const double p = params.p;
  if (!(p > 0.0)) throw domain_error("closed_form requires p > 0");
  if (at_pole_in_q(p, params.q, sign)) {
    const PoleReport pole = nearest_pole_in_q(p, params.q, sign);
    std::ostringstream msg;
    msg << "q = " << params.q.real() << (params.q.imag() != 0.0 ? "+i..." : "")
        << " is on the pole q = " << pole.location.real() << " of the generalized Fresnel integral";
    throw pole_error(msg.str(), pole);
  }
  const complex ratio = params.q / p;
  return exp_i_pi(sign_factor(sign) * 0.5 * ratio) * gamma(ratio) / p;
}

/// Residue at q = -pj estimated from values beside the pole:
/// (δ Ĩ(q₀+δ) - δ Ĩ(q₀-δ))/2, whose error is O(δ²).
inline complex fitted_residue_in_q(double p, unsigned j, Sign sign, double delta = 1e-5) {
  if (!(p > 0.0)) throw domain_error("fitted_residue_in_q requires p > 0");
  const double q0 = -p * j;
  const complex right = delta * closed_form({p, complex(q0 + delta)}, sign);
  const complex left = -delta * closed_form({p, complex(q0 - delta)}, sign);
  return 0.5 * (right + left);
}

/// Poles q = -pj inside the half-open window [lo, hi), in order of j.
inline std::vector<PoleReport> poles_in_q(double p, double lo, double hi, Sign sign = Sign::plus) {
  if (!(p > 0.0)) throw domain_error("poles_in_q requires p > 0");
  std::vector<PoleReport> out;
  if (!(lo < hi)) return out;
  const double first = std::max(0.0, std::ceil(-hi / p - 1e-12));
  for (double j = first; -p * j >= lo; j += 1.0) {
    const double location = -p * j;
    if (location >= hi) continue;
    const auto jj = static_cast<unsigned>(j);
    out.push_back({complex(location, 0.0), 1, detail::residue_in_q(jj, sign)});
  }
  return out;
}

/// Poles p = -q/j (j ≥ 1) of the continuation in p, for fixed q > 0, inside
/// [lo, hi). Residue in p: e^{∓iπj/2}(-1)^j / (j·j!). Evaluation itself stays
/// restricted to p > 0.
inline std::vector<PoleReport> poles_in_p(double q, double lo, double hi, Sign sign = Sign::plus,
                                          unsigned max_j = 64) {
  if (!(q > 0.0)) throw domain_error("poles_in_p requires q > 0");
  std::vector<PoleReport> out;
  for (unsigned j = 1; j <= max_j; ++j) {
    const double location = -q / j;
    if (location >= lo && location < hi) {
      out.push_back({complex(location, 0.0), 1, detail::residue_in_q(j, sign) / static_cast<double>(j)});
    }
  }
  return out;
}

/// B̃±(p1,p2,p3; q1,q2,q3)
///   = e^{∓iπ/2 (q1/p1 + q2/p2 - q3/p3)} (p1 p2 / p3) Ĩ±_{p1,q1} Ĩ±_{p2,q2} / Ĩ±_{p3,q3}.
/// Reduces to B(q1, q2) for p = (1,1,1) and q3 = q1 + q2.
inline complex generalized_beta(double p1, double p2, double p3, complex q1, complex q2, complex q3, Sign sign) {
  const complex i1 = closed_form({p1, q1}, sign);
  const complex i2 = closed_form({p2, q2}, sign);
  const complex i3 = closed_form({p3, q3}, sign);
  if (i3 == complex{}) throw domain_error("generalized_beta: denominator integral vanished");
  const complex exponent = -sign_factor(sign) * 0.5 * (q1 / p1 + q2 / p2 - q3 / p3);
  return exp_i_pi(exponent) * (p1 * p2 / p3) * i1 * i2 / i3;
}

/// Coefficient of λ^{-(k+1)/m} a^{(k)}(0)/k! in the full-line expansion of
/// ∫ e^{±iλx^m} a(x) dx:
///   m^{-1} (e^{±iπ(k+1)/(2m)} + (-1)^k e^{±(-1)^m iπ(k+1)/(2m)}) Γ((k+1)/m).
inline complex full_line_term_coefficient(unsigned m, unsigned k, Sign sign) {
  if (m == 0) throw domain_error("full_line_term_coefficient requires m >= 1");
  const double angle = sign_factor(sign) * (k + 1.0) / (2.0 * m);
  const double reflected = (m % 2 == 0) ? angle : -angle;
  const double parity = (k % 2 == 0) ? 1.0 : -1.0;
  const complex bracket = exp_i_pi(angle) + parity * exp_i_pi(reflected);
  if (bracket == complex{}) return {};
  return bracket * gamma((k + 1.0) / m) / static_cast<double>(m);
}

}  // namespace gfresnel
