#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fracdyn/maps.hpp"
#include "support/oracles.hpp"

using namespace fracdyn;
using fracdyn::oracle::central_difference;

TEST(Maps, GompertzCriticalPointValue) {
  const auto spec = MapSpec::gompertz(1.0);
  EXPECT_NEAR(map_eval(spec, 8.0 / 27.0), 1.0, 1e-15);
  EXPECT_NEAR(map_derivative(spec, 8.0 / 27.0), 0.0, 1e-14);
}

TEST(Maps, GompertzFixedZeros) {
  for (double r : {0.0, 0.3, 1.0}) {
    const auto spec = MapSpec::gompertz(r);
    EXPECT_EQ(map_eval(spec, 0.0), 0.0);
    EXPECT_EQ(map_eval(spec, 1.0), 0.0);
  }
}

TEST(Maps, GompertzDerivativeAtOne) {
  EXPECT_NEAR(map_derivative(MapSpec::gompertz(1.0), 1.0), -2.25, 1e-15);
}

TEST(Maps, LogisticExamples) {
  EXPECT_EQ(map_eval(MapSpec::logistic(4.0), 0.5), 1.0);
  EXPECT_EQ(map_derivative(MapSpec::logistic(3.9), 0.5), 0.0);
  EXPECT_EQ(MapSpec::logistic(2.0).p(), 1.0);
}

TEST(Maps, GompertzDomain) {
  const auto spec = MapSpec::gompertz(1.0);
  EXPECT_THROW((void)map_eval(spec, -1e-9), DomainError);
  EXPECT_THROW((void)map_derivative(spec, 0.0), DomainError);
  EXPECT_FALSE(in_domain(spec, -0.1));
  EXPECT_TRUE(in_domain(spec, 0.0));
  EXPECT_TRUE(in_domain(MapSpec::logistic(3.0), -0.1));
  EXPECT_FALSE(in_domain(MapSpec::logistic(3.0), NAN));
}

TEST(Maps, ParameterValidation) {
  EXPECT_NO_THROW(MapSpec::gompertz(0.0));
  EXPECT_NO_THROW(MapSpec::gompertz(1.0, 0.6667));
  EXPECT_NO_THROW(MapSpec::gompertz(0.5, 0.765));
  EXPECT_THROW(MapSpec::gompertz(1.01), std::invalid_argument);
  EXPECT_THROW(MapSpec::gompertz(-0.1), std::invalid_argument);
  EXPECT_THROW(MapSpec::gompertz(1.0, 0.5), std::invalid_argument);
  EXPECT_THROW(MapSpec::gompertz(1.0, 0.77), std::invalid_argument);
  EXPECT_THROW(MapSpec::logistic(4.1), std::invalid_argument);
  EXPECT_THROW(MapSpec::gompertz(1.0).with_r(2.0), std::invalid_argument);
  EXPECT_EQ(MapSpec::gompertz(1.0).with_p(0.7).p(), 0.7);
}

TEST(Maps, DerivativeMatchesFiniteDifference) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> r_dist(0.05, 1.0);
  std::uniform_real_distribution<double> p_dist(0.66, 0.765);
  std::uniform_real_distribution<double> x_dist(0.01, 1.4);
  for (int draw = 0; draw < 10; ++draw) {
    const auto spec = MapSpec::gompertz(r_dist(rng), p_dist(rng));
    for (int i = 0; i < 100; ++i) {
      const double x = x_dist(rng);
      const double exact = map_derivative(spec, x);
      const double fd = central_difference(spec, x, 1e-4 * x);
      ASSERT_LE(std::abs(fd - exact), 1e-6 * std::abs(exact))
          << "r=" << spec.r() << " p=" << spec.p() << " x=" << x;
    }
  }
}

TEST(Maps, GompertzUnimodalOnUnitInterval) {
  for (double r : {0.25, 0.7, 1.0}) {
    const auto spec = MapSpec::gompertz(r);
    double previous = map_eval(spec, 0.0);
    for (int i = 1; i <= 2000; ++i) {
      const double x = i / 2000.0;
      const double y = map_eval(spec, x);
      ASSERT_GE(y, 0.0);
      ASSERT_LE(y, r + 1e-15);
      if (x <= 8.0 / 27.0) {
        ASSERT_GT(y, previous) << x;
      } else if (x - 1.0 / 2000.0 >= 8.0 / 27.0) {
        ASSERT_LT(y, previous) << x;
      }
      previous = y;
    }
  }
}

TEST(Maps, FamilyNames) {
  EXPECT_EQ(family_name(MapFamily::GompertzLike), "gompertz");
  EXPECT_EQ(parse_family("logistic"), MapFamily::Logistic);
  EXPECT_FALSE(parse_family("tent").has_value());
}
