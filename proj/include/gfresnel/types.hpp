#pragma once

#include <complex>
#include <string_view>

#include "error.hpp"

namespace gfresnel {

using complex = std::complex<double>;

/// Orientation of the phase e^{±i x^p}. Every formula consumes the sign in
/// the same order as the phase it came from.
enum class Sign { plus, minus };

constexpr double sign_factor(Sign s) noexcept { return s == Sign::plus ? 1.0 : -1.0; }
constexpr Sign flip(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }

inline Sign parse_sign(std::string_view text) {
  if (text == "plus" || text == "+") return Sign::plus;
  if (text == "minus" || text == "-") return Sign::minus;
  throw domain_error("sign must be 'plus' or 'minus'");
}

constexpr std::string_view to_string(Sign s) noexcept {
  return s == Sign::plus ? "plus" : "minus";
}

/// Parameters of the generalized Fresnel integral
/// Os-∫₀^∞ e^{±i x^p} x^{q-1} dx. The exponent q may be complex for the
/// meromorphic continuation; p is a positive real for every evaluation.
struct FresnelParams {
  double p = 1.0;
  complex q = 1.0;
};

}  // namespace gfresnel
