#pragma once

// Polynomial (Richardson/Neville) extrapolation of a sequence of regularized
// values to the limit of vanishing regularization parameter.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "error.hpp"
#include "types.hpp"

namespace gfresnel {

/// Strictly decreasing regularization parameters in (0, 1) and the degree of
/// the extrapolating polynomial.
struct EpsilonSchedule {
  std::vector<double> values;
  unsigned order = 2;

  /// ε_j = 2^{-j} for j = first..last.
  static EpsilonSchedule geometric(int first = 3, int last = 12, unsigned order = 2) {
    EpsilonSchedule s;
    s.order = order;
    for (int j = first; j <= last; ++j) s.values.push_back(std::ldexp(1.0, -j));
    return s;
  }

  void validate() const {
    if (values.size() < order + 2) {
      throw domain_error("epsilon schedule needs at least order + 2 values");
    }
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (!(values[j] > 0.0 && values[j] < 1.0)) throw domain_error("epsilon values must lie in (0, 1)");
      if (j > 0 && !(values[j] < values[j - 1])) throw domain_error("epsilon schedule must be strictly decreasing");
    }
  }
};

struct Extrapolation {
  complex value{};
  /// |T_last - T_prev| between the last two extrapolants.
  double difference = 0.0;
  std::vector<complex> extrapolants;
  bool converged = false;
  /// The last three Cauchy differences shrink (or there are fewer than three).
  bool differences_decreasing = true;
};

/// Value at h = 0 of the polynomial through the given points (Neville).
inline complex neville_at_zero(std::span<const double> h, std::span<const complex> v) {
  std::vector<complex> p(v.begin(), v.end());
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      p[i] = (h[i + m] * p[i] - h[i] * p[i + 1]) / (h[i + m] - h[i]);
    }
  }
  return p[0];
}

/// Extrapolates windows of `order + 1` consecutive samples to h = 0.
/// Converged when the last two extrapolants differ by less than
/// rel_tol·max(|T_last|, scale); `scale` guards limits that are zero.
inline Extrapolation extrapolate_to_zero(std::span<const double> h, std::span<const complex> v, unsigned order,
                                         double rel_tol, double scale) {
  if (h.size() != v.size() || h.size() < order + 2) {
    throw domain_error("extrapolation needs at least order + 2 samples");
  }
  Extrapolation out;
  const std::size_t window = order + 1;
  for (std::size_t end = window; end <= h.size(); ++end) {
    out.extrapolants.push_back(neville_at_zero(h.subspan(end - window, window), v.subspan(end - window, window)));
  }
  const auto& t = out.extrapolants;
  out.value = t.back();
  out.difference = std::abs(t[t.size() - 1] - t[t.size() - 2]);
  if (t.size() >= 4) {
    const double d1 = std::abs(t[t.size() - 3] - t[t.size() - 4]);
    const double d2 = std::abs(t[t.size() - 2] - t[t.size() - 3]);
    out.differences_decreasing = d2 <= d1 && out.difference <= d2;
  }
  out.converged = out.difference <= rel_tol * std::max(std::abs(out.value), scale);
  return out;
}

}  // namespace gfresnel
