#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gfresnel/stationary_phase.hpp"

using namespace gfresnel;

namespace {

const Amplitude g = Amplitude::gaussian();

}  // namespace

TEST(HalfLineExpansion, Terms) {
  const auto e = half_line_expansion(2, g, Sign::plus, 2);
  ASSERT_EQ(e.terms.size(), 2u);
  EXPECT_LT(std::abs(e.terms[0].coefficient - 0.5 * exp_i_pi(0.25) * std::sqrt(std::numbers::pi)), 1e-15);
  EXPECT_EQ(e.terms[1].coefficient, complex(0, 0));
  EXPECT_DOUBLE_EQ(e.terms[0].exponent, 0.5);
  EXPECT_DOUBLE_EQ(e.remainder_exponent, 0.5);

  const auto l = half_line_expansion(1, g, Sign::plus, 3);
  EXPECT_LT(std::abs(l.terms[0].coefficient - complex(0, 1)), 1e-15);
  EXPECT_EQ(l.terms[1].coefficient, complex(0, 0));
  EXPECT_LT(std::abs(l.terms[2].coefficient - complex(0, 1)), 1e-15);

  for (const auto& t : half_line_expansion(2, parse_amplitude("bump:1,2"), Sign::plus, 6).terms) {
    EXPECT_EQ(t.coefficient, complex(0, 0));
  }
}

TEST(HalfLineExpansion, Precondition) {
  EXPECT_THROW(half_line_expansion(3, g, Sign::plus, 2), domain_error);
  EXPECT_NO_THROW(half_line_expansion(2.5, g, Sign::plus, 2));
}

TEST(FullLineExpansion, Terms) {
  const auto e2 = full_line_expansion(2, g, Sign::plus, 2);
  EXPECT_LT(std::abs(e2.terms[0].coefficient - exp_i_pi(0.25) * std::sqrt(std::numbers::pi)), 1e-15);
  const auto e3 = full_line_expansion(3, g, Sign::plus, 3);
  EXPECT_LT(std::abs(e3.terms[0].coefficient - std::sqrt(3.0) / 3 * gfresnel::gamma(1.0 / 3)), 1e-14);
  EXPECT_EQ(e3.terms[1].coefficient, complex(0, 0));
  EXPECT_EQ(e3.terms[2].coefficient, complex(0, 0));
  for (const auto& t : full_line_expansion(1, g, Sign::plus, 4).terms) EXPECT_EQ(t.coefficient, complex(0, 0));
  EXPECT_THROW(full_line_expansion(3, g, Sign::plus, 2), domain_error);
}

TEST(Quadrature, HighPrecisionValues) {
  EXPECT_LT(std::abs(weighted_half_line_value(2, 1, g, Sign::plus, 10).value -
                     complex(0.20292735533533628966, 0.19303448842360443354)),
            1e-12);
  EXPECT_LT(std::abs(weighted_half_line_value(2, 3, g, Sign::plus, 10).value -
                     complex(-0.0091216020277724498284, 0.010602447868155436974)),
            1e-12);
  EXPECT_LT(std::abs(weighted_half_line_value(2, 3, g, Sign::plus, 100).value -
                     complex(-0.0003109639692013942776, 0.00031566372587008622695)),
            1e-13);
  EXPECT_LT(std::abs(weighted_half_line_value(3, 1, g, Sign::plus, 1000).value -
                     complex(0.077333969173705570012, 0.044482497395413899513)),
            1e-13);
  EXPECT_LT(std::abs(weighted_half_line_value(2.5, 1.5, parse_amplitude("poly:1,0,-0.5;gaussian"), Sign::plus, 50).value -
                     complex(0.034328551513104057554, 0.044878118015622440254)),
            1e-13);
  const double m3[] = {0.33319344088818376265, 0.15466793834741114002, 0.071790785260547917466};
  const double lambdas[] = {1e2, 1e3, 1e4};
  for (int i = 0; i < 3; ++i) {
    EXPECT_LT(std::abs(full_line_value(3, g, Sign::plus, lambdas[i]).value - m3[i]), 1e-13);
  }
}

TEST(Quadrature, PhaseOffAndExactGaussian) {
  EXPECT_NEAR(weighted_half_line_value(2, 1, g, Sign::plus, 0).value.real(), std::sqrt(std::numbers::pi / 2), 1e-13);
  for (double l : {1.0, 37.0, 1e4}) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      EXPECT_LT(std::abs(full_line_value(2, g, s, l).value - gaussian_quadratic_exact(s, l)), 1e-13);
    }
  }
  EXPECT_THROW(weighted_half_line_value(2, 1, g, Sign::plus, 0.5), domain_error);
}

TEST(Quadrature, EvenAmplitudeEvenPowerDoublesTheHalfLine) {
  const Amplitude a = parse_amplitude("poly:2,0,-0.3,0,0.01;gaussian");
  for (unsigned m : {2u, 4u}) {
    for (double l : {3.0, 300.0}) {
      const complex full = full_line_value(m, a, Sign::plus, l).value;
      const complex half = weighted_half_line_value(m, 1, a, Sign::plus, l).value;
      EXPECT_LT(std::abs(full - 2.0 * half), 1e-8 * std::abs(full));
    }
  }
}

TEST(Quadrature, LinearPhaseDecaysFast) {
  for (double l : lambda_grid()) {
    EXPECT_LT(std::abs(full_line_value(1, g, Sign::plus, l).value), std::pow(l, -3) * 1e-6) << l;
  }
}

TEST(SlopeFit, RecoversPowerLaws) {
  std::vector<DecaySample> s;
  for (double l : lambda_grid()) s.push_back({l, 3.0 * std::pow(l, -1.25), 0.0});
  const SlopeFit f = decay_slope_fit(s);
  EXPECT_NEAR(f.slope, -1.25, 1e-12);
  EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-10);
}

TEST(SlopeFit, RejectsDegenerateInputs) {
  std::vector<DecaySample> s{{1e2, 1e-3, 0}, {1e3, 1e-4, 0}, {1e4, 1e-5, 0}};
  EXPECT_THROW(decay_slope_fit(s), domain_error);
  s.push_back({1e3, 1e-4, 0});
  EXPECT_NO_THROW(decay_slope_fit(s));
  std::vector<DecaySample> narrow{{1, 1, 0}, {2, 1, 0}, {5, 1, 0}, {50, 1, 0}};
  EXPECT_THROW(decay_slope_fit(narrow), domain_error);
  std::vector<DecaySample> floor{{1e2, 1e-3, 1e-15}, {1e3, 1e-9, 1e-15}, {1e4, 1e-16, 1e-15}, {1e4, 1e-17, 1e-15}};
  EXPECT_THROW(decay_slope_fit(floor), convergence_error);
  const SlopeFit c = decay_slope_fit(floor, true);
  EXPECT_EQ(c.censored, 2u);
}

TEST(Harness, ExactOracleRemainder) {
  const auto grid = lambda_grid();
  const auto r = expansion_vs_oracle(Domain::line, 2, g, Sign::plus, 2, grid);
  EXPECT_EQ(r.oracle_kind, "closed_form");
  EXPECT_TRUE(r.pass());
  EXPECT_NEAR(r.fit.slope, -1.5, 0.02);
  EXPECT_DOUBLE_EQ(r.threshold, -0.4);
  ASSERT_EQ(r.points.size(), 5u);
}

TEST(Harness, DegenerateCubicPhase) {
  const auto grid = lambda_grid();
  const auto r = expansion_vs_oracle(Domain::line, 3, g, Sign::plus, 3, grid);
  EXPECT_EQ(r.oracle_kind, "quadrature");
  EXPECT_TRUE(r.pass());
  EXPECT_NEAR(r.threshold, -1.0 / 3 + 0.1, 1e-15);
  EXPECT_LT(r.envelope_ratio, 1.1);
}

TEST(Harness, HalfLineLeadingCoefficient) {
  const auto grid = lambda_grid(1e3, 1e5, 5);
  std::vector<complex> values;
  for (double l : grid) values.push_back(weighted_half_line_value(3, 1, g, Sign::plus, l).value);
  const complex c0 = fit_leading_coefficient(grid, values, 1.0 / 3, 2.0 / 3);
  const complex expected = exp_i_pi(1.0 / 6) * gfresnel::gamma(1.0 / 3) / 3.0;
  EXPECT_LT(std::abs(c0 - expected), 0.01 * std::abs(expected));
}

TEST(Harness, ConstantFitIsReadFromSmallestLambda) {
  const auto r = expansion_vs_oracle(Domain::halfline, 2, g, Sign::minus, 2, lambda_grid());
  EXPECT_NEAR(r.envelope_constant, r.points[0].abs_remainder * std::pow(1e2, r.expansion.remainder_exponent), 1e-15);
  EXPECT_TRUE(r.pass());
}
