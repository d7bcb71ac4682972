#pragma once

// Schwartz-class cutoff functions χ with χ(0) = 1, used to regularize
// oscillatory integrals as lim_{ε→0} ∫ e^{iφ(x)} a(x) χ(εx) dx.

#include <cmath>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"
#include "series.hpp"

namespace gfresnel {

enum class CutoffKind { gaussian, sech, bump, custom };

class CutoffFunction {
 public:
  /// Taylor coefficients of s ↦ χ(t0 + scale·s) up to the given degree.
  using SeriesFn = std::function<Series<double>(double t0, double scale, std::size_t degree)>;

  /// e^{-x²}
  static CutoffFunction gaussian() { return CutoffFunction(CutoffKind::gaussian, "gaussian", 7.5, true, false); }
  /// 2/(e^x + e^{-x})
  static CutoffFunction sech() { return CutoffFunction(CutoffKind::sech, "sech", 52.0, true, false); }
  /// exp(1 - 1/(1-x²)) on |x| < 1, zero outside.
  static CutoffFunction bump() { return CutoffFunction(CutoffKind::bump, "bump", 1.0, true, true); }

  /// Programmatic hook. `series` must reproduce χ(0) = 1 and be safe to call
  /// concurrently. `radius` bounds the region where |χ| is not negligible.
  static CutoffFunction custom(std::string name, SeriesFn series, double radius, bool even,
                               bool compact) {
    CutoffFunction c(CutoffKind::custom, std::move(name), radius, even, compact);
    c.custom_ = std::move(series);
    if (std::abs(c(0.0) - 1.0) > 1e-14) throw domain_error("a cutoff must satisfy chi(0) = 1");
    return c;
  }

  static CutoffFunction from_name(std::string_view name) {
    if (name == "gaussian") return gaussian();
    if (name == "sech") return sech();
    if (name == "bump") return bump();
    throw domain_error("unknown cutoff '" + std::string(name) + "' (gaussian, sech, bump)");
  }

  CutoffKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  /// |χ(x)| is below ~1e-22 for |x| beyond this radius (or exactly zero when compact).
  double effective_radius() const noexcept { return radius_; }
  bool even() const noexcept { return even_; }
  bool compact() const noexcept { return compact_; }

  double operator()(double x) const {
    switch (kind_) {
      case CutoffKind::gaussian:
        return std::exp(-x * x);
      case CutoffKind::sech:
        return 1.0 / std::cosh(x);
      case CutoffKind::bump:
        return std::abs(x) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - x * x)) : 0.0;
      case CutoffKind::custom:
        return custom_(x, 1.0, 0)[0];
    }
    return 0.0;
  }

  Series<double> series_at(double t0, double scale, std::size_t degree) const {
    using S = Series<double>;
    const S y = S::linear(t0, scale, degree);
    switch (kind_) {
      case CutoffKind::gaussian:
        return (-(y * y)).exp();
      case CutoffKind::sech: {
        if (t0 < 0.0) return series_at(-t0, -scale, degree);
        // 2e^{-y} / (1 + e^{-2y}) stays finite for large y.
        const S e1 = (-y).exp();
        if (e1[0] == 0.0) return S(degree);
        const S e2 = (-2.0 * y).exp();
        return 2.0 * (e1 * (e2 + 1.0).reciprocal());
      }
      case CutoffKind::bump: {
        if (std::abs(t0) >= 1.0) return S(degree);
        const S w = (-(y * y)) + 1.0;
        const S v = (-w.reciprocal()) + 1.0;
        if (v[0] < -745.0) return S(degree);
        return v.exp();
      }
      case CutoffKind::custom:
        return custom_(t0, scale, degree);
    }
    return S(degree);
  }

  /// χ^{(k)}(x)
  double derivative(unsigned k, double x) const {
    const Series<double> s = series_at(x, 1.0, k);
    double factorial = 1.0;
    for (unsigned j = 2; j <= k; ++j) factorial *= j;
    return s[k] * factorial;
  }

 private:
  CutoffFunction(CutoffKind kind, std::string name, double radius, bool even, bool compact)
      : kind_(kind), name_(std::move(name)), radius_(radius), even_(even), compact_(compact) {}

  CutoffKind kind_;
  std::string name_;
  double radius_;
  bool even_;
  bool compact_;
  SeriesFn custom_;
};

}  // namespace gfresnel
