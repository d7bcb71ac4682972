#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gfresnel/regularization.hpp"

using namespace gfresnel;

namespace {

const std::pair<double, double> core_pairs[] = {{1, 1}, {2, 1}, {2, 3}, {3, 2}};

}  // namespace

TEST(Extrapolation, NevilleIsExactOnPolynomials) {
  const std::vector<double> h{0.4, 0.2, 0.1};
  std::vector<complex> v;
  for (double x : h) v.push_back(3.0 - 2.0 * x + 5.0 * x * x);
  EXPECT_NEAR(neville_at_zero(h, v).real(), 3.0, 1e-13);
}

TEST(Extrapolation, ScheduleValidation) {
  EXPECT_NO_THROW(EpsilonSchedule::geometric().validate());
  EpsilonSchedule bad;
  bad.values = {0.5, 0.6, 0.1, 0.05};
  EXPECT_THROW(bad.validate(), domain_error);
  bad.values = {0.5, 0.25};
  EXPECT_THROW(bad.validate(), domain_error);
}

TEST(Cutoff, DerivativesAgreeWithFiniteDifferences) {
  for (const auto& chi : {CutoffFunction::gaussian(), CutoffFunction::sech(), CutoffFunction::bump()}) {
    for (double x : {-0.7, 0.0, 0.3, 0.9}) {
      const double h = 1e-5;
      const double fd = (chi(x + h) - chi(x - h)) / (2 * h);
      EXPECT_NEAR(chi.derivative(1, x), fd, 1e-7) << chi.name() << " " << x;
    }
    EXPECT_EQ(chi(0.0), 1.0) << chi.name();
  }
  EXPECT_EQ(CutoffFunction::bump()(1.5), 0.0);
  EXPECT_THROW((void)CutoffFunction::from_name("box"), domain_error);
}

TEST(Regularized, MatchesClosedFormUnderEveryCutoff) {
  for (auto [p, q] : core_pairs) {
    const complex exact = closed_form({p, q}, Sign::plus);
    for (const auto& chi : {CutoffFunction::gaussian(), CutoffFunction::sech(), CutoffFunction::bump()}) {
      const auto r = regularized_integral({p, q}, Sign::plus, chi);
      EXPECT_LT(std::abs(r.value - exact), 1e-8) << p << "," << q << " " << chi.name();
      EXPECT_TRUE(r.converged);
      EXPECT_GE(r.per_epsilon_values.size(), 10u);
    }
  }
}

TEST(Regularized, MinusSign) {
  const auto r = regularized_integral({2, 3}, Sign::minus, CutoffFunction::gaussian());
  EXPECT_LT(std::abs(r.value - closed_form({2, 3}, Sign::minus)), 1e-8);
}

TEST(Regularized, LambdaScaling) {
  const double lambda = 10;
  const auto r = regularized_integral({2, 1}, Sign::plus, CutoffFunction::gaussian(), EpsilonSchedule::geometric(), lambda);
  EXPECT_LT(std::abs(r.value - closed_form({2, 1}, Sign::plus) / std::sqrt(lambda)), 1e-8);
}

TEST(Regularized, RejectsNonRealOrNonPositiveParameters) {
  EXPECT_THROW(regularized_integral({2, -1}, Sign::plus, CutoffFunction::gaussian()), domain_error);
  EXPECT_THROW(regularized_integral({2, complex(1, 1)}, Sign::plus, CutoffFunction::gaussian()), domain_error);
}

TEST(Regularized, ChiDerivativeIntegralsVanish) {
  for (auto [p, q] : core_pairs) {
    for (unsigned k : {1u, 2u}) {
      const auto r = chi_derivative_integral({p, q}, Sign::plus, k, CutoffFunction::gaussian());
      EXPECT_LT(std::abs(r.value), 1e-8) << p << "," << q << " k=" << k;
    }
  }
}

TEST(Oracles, RotatedContour) {
  for (double p : {0.5, 1.0, 2.0, 3.0, 7.5}) {
    for (double f : {0.1, 0.5, 0.9}) {
      const complex exact = closed_form({p, f * p}, Sign::plus);
      EXPECT_LT(std::abs(rotated_contour_oracle({p, f * p}, Sign::plus) - exact) / std::abs(exact), 1e-12);
    }
  }
}

TEST(Oracles, AbelDamping) {
  for (double q : {0.5, 1.0, 2.0}) {
    const auto r = abel_oracle(q);
    EXPECT_LT(std::abs(r.value - closed_form({1, q}, Sign::plus)), 1e-8) << q;
  }
}

TEST(FullLine, AiryValue) {
  const auto r = regularized_full_line(3, Sign::plus, CutoffFunction::gaussian(), EpsilonSchedule::geometric(), 1.0 / 3.0);
  EXPECT_NEAR(r.value.real(), 2.2307070518244957414, 1e-8);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-8);
}

TEST(FullLine, ClassicalFresnel) {
  for (Sign s : {Sign::plus, Sign::minus}) {
    const auto r = regularized_full_line(2, s, CutoffFunction::sech());
    const complex expected = std::sqrt(std::numbers::pi) * exp_i_pi(sign_factor(s) * 0.25);
    EXPECT_LT(std::abs(r.value - expected), 1e-8);
  }
}

TEST(Ibp, OrderBookkeeping) {
  EXPECT_EQ(IbpTransform::required_times(2, 3), 2u);
  EXPECT_EQ(IbpTransform::required_times(3, 2), 1u);
  EXPECT_EQ(IbpTransform::required_times(1, 1), 2u);
  const IbpTransform t = ibp_precondition({2, 3}, Sign::plus, 2);
  EXPECT_NEAR(t.order(), 3 - 1 - 4, 0);
  EXPECT_TRUE(t.absolutely_integrable());
  EXPECT_FALSE(ibp_precondition({2, 3}, Sign::plus, 1).absolutely_integrable());
}

TEST(Ibp, TransformPreservesTheIntegral) {
  // ∫_X^∞ e^{ix²} x² e^{-x²/8} dx via boundary terms plus the transformed integrand.
  const PowerPhase phase{2, 3, Sign::plus, 1};
  struct Damped {
    double operator()(double x) const { return std::exp(-x * x / 8); }
    Series<double> series_at(double x, double s, std::size_t d) const {
      const auto y = Series<double>::linear(x, s, d);
      return (-0.125 * (y * y)).exp();
    }
    double effective_radius() const { return 20; }
    bool compact() const { return false; }
  } psi;
  const double X = 1.5;
  const IbpTransform t(phase, 3);
  complex total = t.boundary(X, psi);
  AdaptiveOptions o;
  o.max_intervals = 4000;
  total += integrate_adaptive([&](double x) { return t.phase_at(x) * t.integrand(x, psi); }, X, 20, o).value;
  const auto direct = integrate_adaptive(
      [&](double x) { return std::polar(x * x * psi(x), x * x); }, X, 20, o);
  EXPECT_LT(std::abs(total - direct.value), 1e-9);
}
