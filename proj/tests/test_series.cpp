#include <gtest/gtest.h>

#include <cmath>

#include "gfresnel/series.hpp"
#include "random.hpp"

using namespace gfresnel;
using S = Series<double>;

TEST(Series, ExpOfLinearIsExponentialTaylor) {
  const S e = S::linear(0.3, 2.0, 10).exp();
  double f = 1.0;
  for (std::size_t k = 0; k <= 10; ++k) {
    if (k) f *= static_cast<double>(k);
    EXPECT_NEAR(e[k], std::exp(0.3) * std::pow(2.0, k) / f, 1e-13 * std::exp(0.3) * std::pow(2.0, k));
  }
}

TEST(Series, ReciprocalTimesSelfIsOne) {
  TestRng rng;
  for (int t = 0; t < 20; ++t) {
    S a(8);
    for (std::size_t k = 0; k <= 8; ++k) a[k] = rng.uniform(-1, 1);
    a[0] = rng.uniform(0.5, 2);
    const S one = a * a.reciprocal();
    EXPECT_NEAR(one[0], 1.0, 1e-13);
    for (std::size_t k = 1; k <= 8; ++k) EXPECT_NEAR(one[k], 0.0, 1e-9);
  }
}

TEST(Series, PowHalfSquaresBack) {
  S a(6);
  a[0] = 2.0;
  a[1] = -0.5;
  a[3] = 0.25;
  const S r = a.pow(0.5);
  const S back = r * r;
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_NEAR(back[k], a[k], 1e-14);
}

TEST(Series, DerivativeAndEvaluate) {
  S a(3);
  a[0] = 1;
  a[1] = 2;
  a[2] = 3;
  a[3] = 4;
  const S d = a.derivative();
  EXPECT_EQ(d[0], 2);
  EXPECT_EQ(d[1], 6);
  EXPECT_EQ(d[2], 12);
  EXPECT_NEAR(a.evaluate(0.5), 1 + 1 + 0.75 + 0.5, 1e-15);
}

TEST(Series, ExpUnderflowGivesZero) {
  EXPECT_TRUE(S::constant(-800.0, 4).exp().is_zero());
}
