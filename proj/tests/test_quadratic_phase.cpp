#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gfresnel/quadratic_phase.hpp"
#include "random.hpp"

using namespace gfresnel;

namespace {

SymmetricMatrix rows(std::initializer_list<double> v) {
  const std::vector<double> a(v);
  return SymmetricMatrix::from_rows(a);
}

}  // namespace

TEST(SignatureDet, Examples) {
  auto a = signature_and_det(SymmetricMatrix::identity(2));
  EXPECT_EQ(a.signature, 2);
  EXPECT_DOUBLE_EQ(a.determinant, 1);
  a = signature_and_det(rows({1, 0, 0, -1}));
  EXPECT_EQ(a.signature, 0);
  EXPECT_DOUBLE_EQ(a.determinant, -1);
  a = signature_and_det(rows({2, 1, 1, 2}));
  EXPECT_EQ(a.signature, 2);
  EXPECT_NEAR(a.determinant, 3, 1e-14);
}

TEST(SignatureDet, DiagonalInputsAreExact) {
  TestRng rng;
  for (int t = 0; t < 30; ++t) {
    const unsigned n = static_cast<unsigned>(rng.integer(1, 3));
    std::vector<double> d(n);
    int sgn = 0;
    double det = 1;
    for (auto& x : d) {
      x = rng.uniform(0.1, 5) * (rng.integer(0, 1) ? 1 : -1);
      sgn += x > 0 ? 1 : -1;
      det *= x;
    }
    const auto r = signature_and_det(SymmetricMatrix::diagonal(d));
    EXPECT_EQ(r.signature, sgn);
    EXPECT_EQ(r.determinant, det);
  }
}

TEST(SignatureDet, SingularAndAsymmetricInputs) {
  EXPECT_THROW(signature_and_det(rows({1, 1, 1, 1})), domain_error);
  EXPECT_THROW(rows({1, 2, 3, 1}), domain_error);
  EXPECT_THROW(rows({1, 2, 3}), domain_error);
}

TEST(Jacobi, EigenvaluesInvariantUnderOrthogonalConjugation) {
  TestRng rng(3);
  for (int t = 0; t < 30; ++t) {
    const double d[3] = {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    // Q = rotation about z by a, then about x by b
    const double a = rng.uniform(0, 6.3), b = rng.uniform(0, 6.3);
    const double Rz[9] = {std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1};
    const double Rx[9] = {1, 0, 0, 0, std::cos(b), -std::sin(b), 0, std::sin(b), std::cos(b)};
    double Q[9] = {};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) Q[i * 3 + j] += Rz[i * 3 + k] * Rx[k * 3 + j];
    SymmetricMatrix M(3);
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = i; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += Q[i * 3 + k] * d[k] * Q[j * 3 + k];
        M.set(i, j, s);
      }
    const auto e = jacobi_eigen(M);
    EXPECT_LE(e.residual_off_diagonal, 1e-13 * M.frobenius_norm());
    std::vector<double> got(e.values.begin(), e.values.end()), want(d, d + 3);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
  }
}

TEST(QuadraticExpansion, OneDimensionalGaussian) {
  const auto e = quadratic_expansion(SymmetricMatrix::identity(1), MultivariateAmplitude::gaussian(1), 3);
  EXPECT_LT(std::abs(e.prefactor - std::sqrt(2 * std::numbers::pi) * exp_i_pi(0.25)), 1e-15);
  // √(2π/(1 - iλ)) = √(2π) e^{iπ/4} λ^{-1/2} (1 - i/(2λ) - 3/(8λ²) + ...)
  EXPECT_LT(std::abs(e.coefficients[0] - 1.0), 1e-15);
  EXPECT_LT(std::abs(e.coefficients[1] - complex(0, -0.5)), 1e-15);
  EXPECT_LT(std::abs(e.coefficients[2] - complex(-0.375, 0)), 1e-15);
}

TEST(QuadraticExpansion, MatchesRescaledFullLineExpansion) {
  // ⟨x,x⟩/2 at λ equals x² at λ/2.
  const double lambda = 400;
  const auto q = quadratic_expansion(SymmetricMatrix::identity(1), MultivariateAmplitude::gaussian(1), 1);
  const complex lead = q.partial_sum(lambda);
  const complex full = full_line_term_coefficient(2, 0, Sign::plus) * std::pow(lambda / 2, -0.5);
  EXPECT_LT(std::abs(lead - full), 1e-15);
}

TEST(QuadraticExpansion, TwoDimensionalExamples) {
  const auto g2 = MultivariateAmplitude::gaussian(2);
  const auto e = quadratic_expansion(SymmetricMatrix::identity(2), g2, 1);
  EXPECT_LT(std::abs(e.prefactor * e.coefficients[0] - complex(0, 2 * std::numbers::pi)), 1e-14);
  const auto d = quadratic_expansion(rows({1, 0, 0, -1}), g2, 2);
  EXPECT_LT(std::abs(d.prefactor - 2 * std::numbers::pi), 1e-14);
  EXPECT_EQ(std::abs(d.coefficients[1]), 0.0);
  EXPECT_THROW(quadratic_expansion(SymmetricMatrix::identity(2), MultivariateAmplitude::gaussian(2, 2), 3), domain_error);
  EXPECT_THROW(quadratic_expansion(SymmetricMatrix::identity(3), g2, 1), domain_error);
}

TEST(QuadraticOracle, HighPrecisionValues) {
  const auto g2 = MultivariateAmplitude::gaussian(2);
  EXPECT_LT(std::abs(quadratic_oracle(SymmetricMatrix::identity(2), g2, 100).value -
                     complex(0.0006282557051474439033, 0.06282557051474439033)),
            1e-14);
  EXPECT_LT(std::abs(quadratic_oracle(SymmetricMatrix::identity(2), g2, 1000).value -
                     complex(6.2831790240005624764e-6, 0.0062831790240005624764)),
            1e-15);
  EXPECT_LT(std::abs(quadratic_oracle(rows({2, 1, 1, 2}), g2, 100).value -
                     complex(0.00024182513725602868106, 0.036274173612387750844)),
            1e-14);
}

TEST(QuadraticOracle, PolynomialAmplitudeInThreeDimensions) {
  // x₁² e^{-|x|²/2} with A = diag(1, 2, -1): only the first factor changes.
  const auto a = MultivariateAmplitude::poly_gaussian(3, {{{2, 0, 0}, 1.0}});
  const double l = 5;
  auto one = [&](double mu, int b) {
    const complex s(0.5, -0.5 * mu * l);
    return b == 0 ? std::sqrt(std::numbers::pi / s) : 0.5 * std::sqrt(std::numbers::pi) * std::pow(s, -1.5);
  };
  const complex exact = one(1, 2) * one(2, 0) * one(-1, 0);
  const double d[] = {1, 2, -1};
  EXPECT_LT(std::abs(quadratic_oracle(SymmetricMatrix::diagonal(d), a, l).value - exact), 1e-13);
}

TEST(QuadraticOracle, RemainderEnvelope) {
  const auto g2 = MultivariateAmplitude::gaussian(2);
  for (const auto& A : {SymmetricMatrix::identity(2), rows({2, 1, 1, 2}), rows({1, 0.5, 0.5, -2})}) {
    const unsigned N = 2;
    const auto e = quadratic_expansion(A, g2, N);
    const double r = N + 1.0;  // λ^{-N-n/2}
    const double C = std::abs(quadratic_oracle(A, g2, 1e2).value - e.partial_sum(1e2)) * std::pow(1e2, r);
    for (double l : {1e3, 1e4}) {
      const double rem = std::abs(quadratic_oracle(A, g2, l).value - e.partial_sum(l));
      EXPECT_LE(rem * std::pow(l, r), 1.1 * C) << l;
    }
  }
}

TEST(FourierCheck, GaussianIdentity) {
  for (Sign s : {Sign::plus, Sign::minus}) {
    for (double xi : {0.0, 1.0, -2.5}) {
      const auto c = fresnel_fourier_check(s, xi);
      EXPECT_LT(std::abs(c.lhs - c.rhs), 1e-5);
    }
  }
  EXPECT_LT(std::abs(fresnel_fourier_check(Sign::plus, 0).rhs - exp_i_pi(0.25)), 1e-16);
  EXPECT_THROW(fresnel_fourier_check(Sign::plus, 11), domain_error);
}
