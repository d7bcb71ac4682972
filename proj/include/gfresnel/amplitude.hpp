#pragma once

// Schwartz amplitudes a(x) with exact Taylor data, the inputs of the
// stationary phase expansions.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "series.hpp"

namespace gfresnel {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x > lo && x < hi; }
};

enum class AmplitudeKind { poly_gaussian, bump, custom };

class Amplitude {
 public:
  /// Taylor coefficients of s ↦ a(x0 + scale·s).
  using SeriesFn = std::function<Series<double>(double x0, double scale, std::size_t degree)>;

  static constexpr unsigned default_taylor_cap = 16;

  /// P(x) e^{-x²/2} with P = Σ c_k x^k.
  static Amplitude poly_gaussian(std::vector<double> coefficients) {
    Amplitude a(AmplitudeKind::poly_gaussian);
    a.poly_ = std::move(coefficients);
    if (a.poly_.empty()) a.poly_ = {0.0};
    a.radius_ = a.gaussian_radius();
    return a;
  }

  static Amplitude gaussian() { return poly_gaussian({1.0}); }

  /// exp(-1/(1 - ((x-c)/r)²)) on (lo, hi), c = (lo+hi)/2, r = (hi-lo)/2; zero outside.
  static Amplitude bump(double lo, double hi) {
    if (!(lo < hi)) throw domain_error("bump support needs lo < hi");
    Amplitude a(AmplitudeKind::bump);
    a.support_ = Interval{lo, hi};
    a.radius_ = std::max(std::abs(lo), std::abs(hi));
    return a;
  }

  /// User amplitude. `taylor` lists a^{(k)}(0)/k!; no derivatives are
  /// inferred. Taylor data away from 0 is available only through `series`.
  static Amplitude custom(std::string name, std::function<double(double)> eval, std::vector<double> taylor,
                          double effective_radius, std::optional<Interval> support = std::nullopt,
                          SeriesFn series = {}) {
    Amplitude a(AmplitudeKind::custom);
    a.name_ = std::move(name);
    a.eval_ = std::move(eval);
    a.poly_ = std::move(taylor);
    a.radius_ = effective_radius;
    a.support_ = support;
    a.series_ = std::move(series);
    return a;
  }

  AmplitudeKind kind() const noexcept { return kind_; }
  const std::vector<double>& polynomial() const noexcept { return poly_; }
  std::optional<Interval> support() const noexcept { return support_; }
  bool compact() const noexcept { return support_.has_value(); }
  /// |a| is below ~1e-22 of its scale beyond this radius (exact zero when compact).
  double effective_radius() const noexcept { return radius_; }
  unsigned taylor_cap() const noexcept {
    return kind_ == AmplitudeKind::custom ? static_cast<unsigned>(poly_.size()) - 1 : default_taylor_cap;
  }

  /// a(-x) = a(x) by construction (not probed numerically).
  bool even() const {
    switch (kind_) {
      case AmplitudeKind::poly_gaussian:
        for (std::size_t k = 1; k < poly_.size(); k += 2)
          if (poly_[k] != 0.0) return false;
        return true;
      case AmplitudeKind::bump:
        return support_->lo == -support_->hi;
      case AmplitudeKind::custom:
        return false;
    }
    return false;
  }

  std::string description() const {
    std::ostringstream os;
    switch (kind_) {
      case AmplitudeKind::poly_gaussian:
        if (poly_.size() == 1 && poly_[0] == 1.0) return "gaussian";
        os << "poly:";
        for (std::size_t k = 0; k < poly_.size(); ++k) os << (k ? "," : "") << poly_[k];
        os << ";gaussian";
        return os.str();
      case AmplitudeKind::bump:
        os << "bump:" << support_->lo << "," << support_->hi;
        return os.str();
      case AmplitudeKind::custom:
        return name_;
    }
    return {};
  }

  double operator()(double x) const {
    switch (kind_) {
      case AmplitudeKind::poly_gaussian: {
        double p = 0.0;
        for (std::size_t k = poly_.size(); k-- > 0;) p = p * x + poly_[k];
        return p * std::exp(-0.5 * x * x);
      }
      case AmplitudeKind::bump: {
        if (!support_->contains(x)) return 0.0;
        const double y = (x - center()) / half_width();
        return std::exp(-1.0 / (1.0 - y * y));
      }
      case AmplitudeKind::custom:
        return eval_(x);
    }
    return 0.0;
  }

  Series<double> series_at(double x0, double scale, std::size_t degree) const {
    using S = Series<double>;
    switch (kind_) {
      case AmplitudeKind::poly_gaussian: {
        const S x = S::linear(x0, scale, degree);
        S p(degree);
        for (std::size_t k = poly_.size(); k-- > 0;) p = p * x + poly_[k];
        return p * (-0.5 * (x * x)).exp();
      }
      case AmplitudeKind::bump: {
        // All derivatives vanish outside the open support, including at 0
        // when 0 is not inside it.
        if (!support_->contains(x0)) return S(degree);
        const S y = S::linear((x0 - center()) / half_width(), scale / half_width(), degree);
        const S w = (-(y * y)) + 1.0;
        const S v = -w.reciprocal();
        if (v[0] < -745.0) return S(degree);
        return v.exp();
      }
      case AmplitudeKind::custom: {
        if (series_) return series_(x0, scale, degree);
        if (x0 != 0.0) throw domain_error("custom amplitude '" + name_ + "' has Taylor data only at 0");
        if (degree > taylor_cap()) throw domain_error("Taylor degree exceeds the custom amplitude's data");
        S s(degree);
        double power = 1.0;
        for (std::size_t k = 0; k <= degree; ++k, power *= scale) s[k] = poly_[k] * power;
        return s;
      }
    }
    return S(degree);
  }

  /// a^{(k)}(0)/k!
  double taylor_coefficient(unsigned k) const {
    check_cap(k);
    return series_at(0.0, 1.0, k)[k];
  }

  /// a^{(k)}(0)
  double derivative_at_zero(unsigned k) const { return taylor_coefficient(k) * factorial(k); }

  /// a^{(k)}(x)
  double derivative(unsigned k, double x) const {
    if (kind_ == AmplitudeKind::custom && !series_ && x != 0.0) {
      if (k == 0) return eval_(x);
      throw domain_error("custom amplitude '" + name_ + "' has no derivative data away from 0");
    }
    return series_at(x, 1.0, k)[k] * factorial(k);
  }

  /// x ↦ a(-x)
  Amplitude reflected() const {
    Amplitude r = *this;
    switch (kind_) {
      case AmplitudeKind::poly_gaussian:
        for (std::size_t k = 1; k < r.poly_.size(); k += 2) r.poly_[k] = -r.poly_[k];
        break;
      case AmplitudeKind::bump:
        r.support_ = Interval{-support_->hi, -support_->lo};
        break;
      case AmplitudeKind::custom: {
        for (std::size_t k = 1; k < r.poly_.size(); k += 2) r.poly_[k] = -r.poly_[k];
        r.eval_ = [f = eval_](double x) { return f(-x); };
        if (series_) r.series_ = [s = series_](double x0, double sc, std::size_t d) { return s(-x0, -sc, d); };
        if (support_) r.support_ = Interval{-support_->hi, -support_->lo};
        r.name_ = name_ + " (reflected)";
        break;
      }
    }
    return r;
  }

  static double factorial(unsigned k) {
    double f = 1.0;
    for (unsigned j = 2; j <= k; ++j) f *= j;
    return f;
  }

 private:
  explicit Amplitude(AmplitudeKind kind) : kind_(kind) {}

  double center() const { return 0.5 * (support_->lo + support_->hi); }
  double half_width() const { return 0.5 * (support_->hi - support_->lo); }

  void check_cap(unsigned k) const {
    if (k > taylor_cap()) {
      throw domain_error("Taylor order " + std::to_string(k) + " exceeds the cap " + std::to_string(taylor_cap()));
    }
  }

  double gaussian_radius() const {
    double total = 0.0;
    for (double c : poly_) total += std::abs(c);
    if (total == 0.0) return 0.0;
    for (double r = 1.0;; r += 0.25) {
      double bound = 0.0;
      for (std::size_t k = poly_.size(); k-- > 0;) bound = bound * r + std::abs(poly_[k]);
      if (bound * std::exp(-0.5 * r * r) < 1e-22 * total) return r;
    }
  }

  AmplitudeKind kind_;
  std::vector<double> poly_;  // P coefficients, or the custom Taylor list
  std::optional<Interval> support_;
  double radius_ = std::numeric_limits<double>::infinity();
  std::string name_;
  std::function<double(double)> eval_;
  SeriesFn series_;
};

/// a^{(k)}(0) (not divided by k!).
inline double taylor_at_zero(const Amplitude& a, unsigned k) { return a.derivative_at_zero(k); }

/// sup over the grid x ∈ [-50, 50] (step 1e-3) of |x|^j |a^{(k)}(x)|.
inline double schwartz_decay_report(const Amplitude& a, unsigned j, unsigned k) {
  double best = 0.0;
  for (int i = -50000; i <= 50000; ++i) {
    const double x = i * 1e-3;
    const double v = std::pow(std::abs(x), static_cast<int>(j)) * std::abs(a.derivative(k, x));
    best = std::max(best, v);
  }
  return best;
}

namespace detail {

inline std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string item(text.substr(0, comma));
    // Accept a Unicode minus for hand-typed specs.
    if (auto pos = item.find("−"); pos != std::string::npos) item.replace(pos, 3, "-");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw domain_error("malformed number '" + item + "' in amplitude spec");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Amplitude spec strings:
///   gaussian                     e^{-x²/2}
///   poly:c0,c1,...;gaussian      (c0 + c1 x + ...) e^{-x²/2}
///   bump:lo,hi                   smooth bump supported on (lo, hi)
inline Amplitude parse_amplitude(std::string_view spec) {
  if (spec == "gaussian") return Amplitude::gaussian();
  if (spec.starts_with("poly:")) {
    const auto semi = spec.find(';');
    if (semi == std::string_view::npos || spec.substr(semi + 1) != "gaussian") {
      throw domain_error("poly amplitude must read 'poly:c0,c1,...;gaussian'");
    }
    return Amplitude::poly_gaussian(detail::parse_number_list(spec.substr(5, semi - 5)));
  }
  if (spec.starts_with("bump:")) {
    const auto v = detail::parse_number_list(spec.substr(5));
    if (v.size() != 2) throw domain_error("bump amplitude must read 'bump:lo,hi'");
    return Amplitude::bump(v[0], v[1]);
  }
  throw domain_error("unknown amplitude spec '" + std::string(spec) + "' (gaussian | poly:c0,...;gaussian | bump:lo,hi)");
}

// ---------------------------------------------------------------------------
// Several variables (n ≤ 3).

using MultiIndex = std::array<unsigned, 3>;

/// Truncated Taylor table T[α] = ∂^α a(0)/α! for |α| ≤ degree, n ≤ 3.
class TaylorTable {
 public:
  TaylorTable(unsigned dimension, unsigned degree) : n_(dimension), degree_(degree) {
    if (dimension < 1 || dimension > 3) throw domain_error("dimension must be 1, 2 or 3");
    const std::size_t side = degree + 1;
    data_.assign(n_ == 1 ? side : n_ == 2 ? side * side : side * side * side, 0.0);
  }

  unsigned dimension() const noexcept { return n_; }
  unsigned degree() const noexcept { return degree_; }

  static unsigned order(const MultiIndex& a) { return a[0] + a[1] + a[2]; }

  double operator[](const MultiIndex& a) const {
    if (!valid(a)) return 0.0;
    return data_[index(a)];
  }
  void set(const MultiIndex& a, double v) {
    if (!valid(a)) throw domain_error("multi-index outside the Taylor table");
    data_[index(a)] = v;
  }
  void add(const MultiIndex& a, double v) { set(a, (*this)[a] + v); }

  /// Visits every α with |α| ≤ degree.
  template <class F>
  void for_each(F&& f) const {
    const unsigned d1 = n_ >= 2 ? degree_ : 0;
    const unsigned d2 = n_ >= 3 ? degree_ : 0;
    for (unsigned a0 = 0; a0 <= degree_; ++a0)
      for (unsigned a1 = 0; a1 <= d1 && a0 + a1 <= degree_; ++a1)
        for (unsigned a2 = 0; a2 <= d2 && a0 + a1 + a2 <= degree_; ++a2) f(MultiIndex{a0, a1, a2});
  }

  friend TaylorTable operator*(const TaylorTable& a, const TaylorTable& b) {
    if (a.n_ != b.n_) throw domain_error("Taylor tables of different dimension");
    TaylorTable r(a.n_, std::min(a.degree_, b.degree_));
    a.for_each([&](const MultiIndex& i) {
      const double ai = a[i];
      if (ai == 0.0 || order(i) > r.degree_) return;
      b.for_each([&](const MultiIndex& j) {
        if (order(i) + order(j) > r.degree_) return;
        r.add({i[0] + j[0], i[1] + j[1], i[2] + j[2]}, ai * b[j]);
      });
    });
    return r;
  }

  /// Σ T[α] x^α
  double evaluate(std::span<const double> x) const {
    double sum = 0.0;
    for_each([&](const MultiIndex& a) {
      double term = (*this)[a];
      for (unsigned d = 0; d < n_; ++d) term *= std::pow(x[d], static_cast<int>(a[d]));
      sum += term;
    });
    return sum;
  }

 private:
  bool valid(const MultiIndex& a) const {
    for (unsigned d = n_; d < 3; ++d)
      if (a[d] != 0) return false;
    return order(a) <= degree_;
  }
  std::size_t index(const MultiIndex& a) const {
    const std::size_t side = degree_ + 1;
    return a[0] + side * (a[1] + side * a[2]);
  }

  unsigned n_;
  unsigned degree_;
  std::vector<double> data_;
};

/// a ∈ S(ℝⁿ), n ≤ 3, with its Taylor table at 0.
class MultivariateAmplitude {
 public:
  using Evaluator = std::function<double(std::span<const double>)>;

  /// P(x) e^{-|x|²/2}; `poly` lists (α, coefficient of x^α).
  static MultivariateAmplitude poly_gaussian(unsigned n, const std::vector<std::pair<MultiIndex, double>>& poly,
                                             unsigned degree_cap = 12) {
    TaylorTable p(n, degree_cap);
    for (const auto& [alpha, c] : poly) {
      if (TaylorTable::order(alpha) > degree_cap) throw domain_error("polynomial degree exceeds the Taylor cap");
      p.add(alpha, c);
    }
    MultivariateAmplitude a(n, p * gaussian_table(n, degree_cap));
    a.poly_ = poly;
    a.evaluator_ = [poly, n](std::span<const double> x) {
      double r2 = 0.0;
      for (unsigned d = 0; d < n; ++d) r2 += x[d] * x[d];
      double value = 0.0;
      for (const auto& [alpha, c] : poly) {
        double term = c;
        for (unsigned d = 0; d < n; ++d) term *= std::pow(x[d], static_cast<int>(alpha[d]));
        value += term;
      }
      return value * std::exp(-0.5 * r2);
    };
    return a;
  }

  /// e^{-|x|²/2}
  static MultivariateAmplitude gaussian(unsigned n, unsigned degree_cap = 12) {
    return poly_gaussian(n, {{MultiIndex{0, 0, 0}, 1.0}}, degree_cap);
  }

  /// Caller-supplied table and evaluator; no consistency is inferred.
  static MultivariateAmplitude custom(TaylorTable table, Evaluator evaluator) {
    MultivariateAmplitude a(table.dimension(), std::move(table));
    a.evaluator_ = std::move(evaluator);
    return a;
  }

  unsigned dimension() const noexcept { return table_.dimension(); }
  unsigned degree_cap() const noexcept { return table_.degree(); }
  const TaylorTable& taylor() const noexcept { return table_; }
  /// Polynomial factor of a poly_gaussian amplitude (empty for custom).
  const std::vector<std::pair<MultiIndex, double>>& polynomial() const noexcept { return poly_; }
  bool is_poly_gaussian() const noexcept { return !poly_.empty(); }

  double operator()(std::span<const double> x) const { return evaluator_(x); }

 private:
  MultivariateAmplitude(unsigned n, TaylorTable table) : table_(std::move(table)) { (void)n; }

  static TaylorTable gaussian_table(unsigned n, unsigned degree) {
    // e^{-|x|²/2} = Π_d Σ_m (-1/2)^m x_d^{2m} / m!
    std::vector<double> one(degree + 1, 0.0);
    double c = 1.0;
    for (unsigned m = 0; 2 * m <= degree; ++m) {
      one[2 * m] = c;
      c *= -0.5 / (m + 1.0);
    }
    TaylorTable t(n, degree);
    t.for_each([&](const MultiIndex& a) {
      double v = 1.0;
      for (unsigned d = 0; d < n; ++d) v *= one[a[d]];
      t.set(a, v);
    });
    return t;
  }

  TaylorTable table_;
  std::vector<std::pair<MultiIndex, double>> poly_;
  Evaluator evaluator_;
};

}  // namespace gfresnel
