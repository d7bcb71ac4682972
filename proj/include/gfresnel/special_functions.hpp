#pragma once

// Complex Gamma function and the quantities derived from it.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "error.hpp"
#include "types.hpp"

namespace gfresnel {

namespace detail {

// Lanczos coefficients for g = 7, nine terms.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

/// sin(πz) with the real part reduced exactly first, so the result keeps
/// full relative accuracy next to the integers.
inline complex sin_pi(complex z) {
  const double n = std::round(z.real());
  const double f = z.real() - n;  // exact
  const double parity = std::fmod(std::abs(n), 2.0) == 0.0 ? 1.0 : -1.0;
  const double a = std::numbers::pi * f;
  const double b = std::numbers::pi * z.imag();
  return parity * complex(std::sin(a) * std::cosh(b), std::cos(a) * std::sinh(b));
}

/// log Γ(z) for Re z >= 1/2 (any branch of the imaginary part; only exp of it
/// is ever taken).
inline complex log_gamma_right(complex z) {
  z -= 1.0;
  complex series = lanczos_coefficients[0];
  for (std::size_t k = 1; k < lanczos_coefficients.size(); ++k) {
    series += lanczos_coefficients[k] / (z + static_cast<double>(k));
  }
  const complex t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(series);
}

inline bool is_nonpositive_integer(complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace detail

/// cos(πx) and sin(πx) with exact zeros and units at (half-)integers.
inline double cos_pi(double x) {
  const double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  const double a = std::abs(r);
  if (a == 0.5) return 0.0;
  if (a == 0.0) return 1.0;
  if (a == 1.0) return -1.0;
  return std::cos(std::numbers::pi * r);
}

inline double sin_pi(double x) {
  const double r = x - 2.0 * std::round(0.5 * x);
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(std::numbers::pi * r);
}

/// e^{iπx} for complex x.
inline complex exp_i_pi(complex x) {
  const double modulus = std::exp(-std::numbers::pi * x.imag());
  return {modulus * cos_pi(x.real()), modulus * sin_pi(x.real())};
}

/// Residue of Γ at the pole -j, i.e. (-1)^j / j!.
inline double gamma_residue(unsigned j) {
  double r = 1.0;
  for (unsigned k = 1; k <= j; ++k) r /= static_cast<double>(k);
  return (j % 2 == 0) ? r : -r;
}

/// log Γ(z), continued to the whole plane minus the poles by reflection.
/// The imaginary part is not reduced to the principal branch.
inline complex log_gamma(complex z) {
  if (detail::is_nonpositive_integer(z)) {
    const auto j = static_cast<unsigned>(-z.real());
    throw pole_error("Gamma has a pole at z = " + std::to_string(z.real()),
                     PoleReport{z, 1, gamma_residue(j)});
  }
  if (z.real() >= 0.5) return detail::log_gamma_right(z);
  // Γ(z) Γ(1-z) = π / sin(πz)
  return std::log(std::numbers::pi) - std::log(detail::sin_pi(z)) -
         detail::log_gamma_right(1.0 - z);
}

/// Γ(z) for complex z off the nonpositive integers.
///
/// Lanczos (g = 7, 9 terms) on Re z >= 1/2, reflection elsewhere. Relative
/// accuracy is around 1e-14 for |z| up to a few tens.
inline complex gamma(complex z) {
  const complex lg = log_gamma(z);
  if (lg.real() > std::log(std::numeric_limits<double>::max())) {
    throw overflow_error("|Gamma(z)| exceeds the double range");
  }
  if (z.imag() == 0.0) {
    // Keep real arguments exactly real; the sign comes from the reflection.
    const double magnitude = std::exp(lg.real());
    const double sign = std::cos(lg.imag()) < 0.0 ? -1.0 : 1.0;
    return {sign * magnitude, 0.0};
  }
  return std::exp(lg);
}

inline double gamma(double x) { return gamma(complex(x, 0.0)).real(); }

/// Euler Beta function B(q1, q2) = Γ(q1)Γ(q2)/Γ(q1+q2) for q1, q2 > 0.
inline double euler_beta(double q1, double q2) {
  if (!(q1 > 0.0) || !(q2 > 0.0)) {
    throw domain_error("euler_beta requires positive arguments");
  }
  const double lb = log_gamma(q1).real() + log_gamma(q2).real() - log_gamma(q1 + q2).real();
  return std::exp(lb);
}

}  // namespace gfresnel
