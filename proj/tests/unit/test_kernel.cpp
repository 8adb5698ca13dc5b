#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "nldg/csv.hpp"
#include "nldg/kernel.hpp"
#include "nldg/quadrature.hpp"
#include "oracle.hpp"

using namespace nldg;

TEST(Kernel, RejectsBadParameters) {
  EXPECT_THROW(make_kernel(3.0, 0.5), std::invalid_argument);
  EXPECT_THROW(make_kernel(-0.1, 0.5), std::invalid_argument);
  EXPECT_THROW(make_kernel(0.5, 0.0), std::invalid_argument);
  EXPECT_THROW(make_kernel(0.5, -1.0), std::invalid_argument);
}

TEST(Kernel, SecondMomentIsOne) {
  for (double alpha : {0.0, 0.5, 1.0, 2.0, 2.5, 2.9})
    for (double delta : {1e-6, 0.1, std::numbers::pi / 6, 3.0}) {
      KernelSpec ks = make_kernel(alpha, delta);
      EXPECT_NEAR(2.0 * partial_moment(ks, 2, 0.0, delta), 1.0, 1e-13) << alpha << ' ' << delta;
    }
}

TEST(Kernel, EvaluatesInsideAndVanishesOutside) {
  KernelSpec ks = make_kernel(2.5, 0.4);
  EXPECT_DOUBLE_EQ(kernel_eval(ks, 0.1), ks.scale * std::pow(0.1, -2.5));
  EXPECT_DOUBLE_EQ(kernel_eval(ks, -0.1), kernel_eval(ks, 0.1));
  EXPECT_EQ(kernel_eval(ks, 0.41), 0.0);
  EXPECT_THROW(kernel_eval(ks, 0.0), std::domain_error);
}

TEST(Kernel, PartialMomentsMatchNumericQuadrature) {
  for (double alpha : {0.5, 1.0, 2.0, 2.5})
    for (int p = 0; p <= 6; ++p) {
      KernelSpec ks = make_kernel(alpha, 0.7);
      for (auto [s1, s2] : {std::pair{0.05, 0.3}, std::pair{0.3, 0.31}, std::pair{0.2, 0.7}}) {
        double ref = oracle::moment_numeric(ks, p, s1, s2);
        EXPECT_NEAR(partial_moment(ks, p, s1, s2), ref, 1e-11 * std::abs(ref)) << alpha << ' ' << p;
      }
    }
}

TEST(Kernel, LogarithmicMoment) {
  // p + 1 = alpha
  KernelSpec ks = make_kernel(2.0, 1.0);
  EXPECT_NEAR(partial_moment(ks, 1, 0.1, 0.5), ks.scale * std::log(5.0), 1e-14);
  EXPECT_THROW(partial_moment(ks, 1, 0.0, 0.5), std::domain_error);
  EXPECT_THROW(partial_moment(ks, 0, 0.0, 0.5), std::domain_error);
  EXPECT_THROW(partial_moment(ks, 2, 0.5, 0.1), std::invalid_argument);
  EXPECT_EQ(partial_moment(ks, 2, 0.3, 0.3), 0.0);
}

TEST(Kernel, NearlyCoincidentLimitsKeepRelativeAccuracy) {
  KernelSpec ks = make_kernel(0.5, 1.0);
  const double s = 0.4, d = 1e-9;
  // derivative of the antiderivative at s times d
  double ref = ks.scale * std::pow(s, 2.0 - 0.5) * d;
  EXPECT_NEAR(partial_moment(ks, 2, s, s + d), ref, 1e-6 * ref);
}

TEST(Quadrature, GaussRulesIntegrateTheirDegree) {
  for (int n = 1; n <= 20; ++n) {
    const GaussRule& g = gauss_legendre(n);
    ASSERT_EQ(g.size(), n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) q += g.w[i] * std::pow(g.x[i], p);
      double ref = p % 2 ? 0.0 : 2.0 / (p + 1);
      EXPECT_NEAR(q, ref, 1e-13) << n << ' ' << p;
    }
  }
  EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 10), std::exp(1.0) - 1.0, 1e-14);
}

TEST(Quadrature, LegendreValuesAndDerivatives) {
  std::vector<double> P(6), dP(6);
  const double x = 0.3;
  legendre(x, 5, P);
  legendre_deriv(x, 5, dP);
  EXPECT_DOUBLE_EQ(P[0], 1.0);
  EXPECT_DOUBLE_EQ(P[1], x);
  EXPECT_NEAR(P[2], 0.5 * (3 * x * x - 1), 1e-15);
  EXPECT_NEAR(P[3], 0.5 * (5 * x * x * x - 3 * x), 1e-15);
  EXPECT_NEAR(dP[3], 0.5 * (15 * x * x - 3), 1e-14);
  // endpoint derivative n(n+1)/2
  legendre_deriv(1.0, 5, dP);
  for (int n = 0; n <= 5; ++n) EXPECT_NEAR(dP[n], n * (n + 1) / 2.0, 1e-13);
}

TEST(Csv, Formatting) {
  EXPECT_EQ(format_error(1.6971e-3), "1.697e-03");
  EXPECT_EQ(format_order(2.0006), "2.001");
  EXPECT_EQ(format_sig(0.125, 3), "0.125");
}

TEST(Csv, RealExpressions) {
  const double pi = std::numbers::pi;
  EXPECT_DOUBLE_EQ(parse_real_expr("0.5"), 0.5);
  EXPECT_DOUBLE_EQ(parse_real_expr("pi/6"), pi / 6);
  EXPECT_DOUBLE_EQ(parse_real_expr("2pi"), 2 * pi);
  EXPECT_DOUBLE_EQ(parse_real_expr("2*pi/3"), 2 * pi / 3);
  EXPECT_DOUBLE_EQ(parse_real_expr("-pi"), -pi);
  EXPECT_DOUBLE_EQ(parse_real_expr("1e-6"), 1e-6);
  EXPECT_THROW(parse_real_expr("tau"), std::invalid_argument);
  EXPECT_THROW(parse_real_expr(""), std::invalid_argument);
}
