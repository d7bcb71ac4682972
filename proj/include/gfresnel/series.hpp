#pragma once

// Truncated power series arithmetic. Used for exact Taylor data of
// amplitudes and cutoffs at arbitrary points.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace gfresnel {

/// Coefficients c_0..c_d of Σ c_k h^k, truncated at a fixed degree d.
template <class T>
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t degree) : c_(degree + 1, T{}) {}
  Series(std::size_t degree, std::span<const T> coefficients) : c_(degree + 1, T{}) {
    for (std::size_t k = 0; k < c_.size() && k < coefficients.size(); ++k) c_[k] = coefficients[k];
  }

  static Series constant(T value, std::size_t degree) {
    Series s(degree);
    s.c_[0] = value;
    return s;
  }

  /// value + slope·h
  static Series linear(T value, T slope, std::size_t degree) {
    Series s(degree);
    s.c_[0] = value;
    if (degree >= 1) s.c_[1] = slope;
    return s;
  }

  std::size_t degree() const noexcept { return c_.size() - 1; }
  T& operator[](std::size_t k) { return c_[k]; }
  const T& operator[](std::size_t k) const { return c_[k]; }
  std::span<const T> coefficients() const noexcept { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != T{}) return false;
    return true;
  }

  T evaluate(T h) const {
    T acc{};
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * h + c_[k];
    return acc;
  }

  Series& operator+=(const Series& o) {
    for (std::size_t k = 0; k < c_.size() && k < o.c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (std::size_t k = 0; k < c_.size() && k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Series& operator*=(T s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Series& operator+=(T s) {
    c_[0] += s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, T s) { return a *= s; }
  friend Series operator*(T s, Series a) { return a *= s; }
  friend Series operator+(Series a, T s) { return a += s; }
  friend Series operator-(Series a) { return a *= T(-1); }

  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t d = std::min(a.degree(), b.degree());
    Series r(d);
    for (std::size_t i = 0; i <= d; ++i) {
      if (a.c_[i] == T{}) continue;
      for (std::size_t j = 0; i + j <= d; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  /// d/dh, one degree lower.
  Series derivative() const {
    Series r(degree() == 0 ? 0 : degree() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = c_[k] * static_cast<T>(k);
    return r;
  }

  Series reciprocal() const {
    if (c_[0] == T{}) throw std::domain_error("series reciprocal of a zero constant term");
    Series r(degree());
    const T inv = T(1) / c_[0];
    r.c_[0] = inv;
    for (std::size_t n = 1; n < c_.size(); ++n) {
      T acc{};
      for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
      r.c_[n] = -acc * inv;
    }
    return r;
  }

  /// exp of the series. Returns an exact zero series when e^{c_0} underflows,
  /// so huge higher coefficients never meet a zero prefactor.
  Series exp() const {
    using std::exp;
    Series r(degree());
    r.c_[0] = exp(c_[0]);
    if (r.c_[0] == T{}) return r;
    for (std::size_t n = 1; n < c_.size(); ++n) {
      T acc{};
      for (std::size_t k = 1; k <= n; ++k) acc += static_cast<T>(k) * c_[k] * r.c_[n - k];
      r.c_[n] = acc / static_cast<T>(n);
    }
    return r;
  }

  /// (series)^a for a nonzero constant term, by the J.C.P. Miller recurrence.
  Series pow(double a) const {
    using std::pow;
    if (c_[0] == T{}) throw std::domain_error("series power of a zero constant term");
    Series r(degree());
    r.c_[0] = pow(c_[0], a);
    for (std::size_t n = 1; n < c_.size(); ++n) {
      T acc{};
      for (std::size_t k = 1; k <= n; ++k) {
        acc += ((a + 1.0) * static_cast<double>(k) - static_cast<double>(n)) * c_[k] * r.c_[n - k];
      }
      r.c_[n] = acc / (static_cast<double>(n) * c_[0]);
    }
    return r;
  }

 private:
  std::vector<T> c_{T{}};
};

}  // namespace gfresnel
