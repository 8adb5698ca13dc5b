#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "nldg/diagnostics.hpp"

using namespace nldg;

namespace {

FormSet forms(double alpha, double delta, int N, int k) {
  SpacePtr V = make_space(build_mesh(0.0, 1.0, N, delta, BcMode::volume_constraint), k);
  return assemble_forms(V, make_kernel(alpha, delta));
}

}  // namespace

TEST(Diagnostics, NnipgStabilityConstantIsOne) {
  // sym B = E + mu P and G = E + Jsemi + mu P, so the constant is in (0, 1]
  FormSet F = forms(0.5, 0.3, 8, 2);
  double mu = 5.0 * 8;
  double cs = stability_constant(F, PenaltyVariant::nnipg(), mu);
  EXPECT_GT(cs, 0.0);
  EXPECT_LE(cs, 1.0 + 1e-10);
}

TEST(Diagnostics, NipStabilityPositiveForLargePenaltyOnly) {
  FormSet F = forms(2.5, 0.3, 8, 2);
  EXPECT_GT(stability_constant(F, PenaltyVariant::nip(), 5.0 * 8), 0.0);
  EXPECT_LT(stability_constant(F, PenaltyVariant::nip(), 1e-4), 0.0);
}

TEST(Diagnostics, BoundednessSampledBelowExact) {
  FormSet F = forms(0.5, 0.3, 6, 1);
  const double mu = 30.0;
  for (auto var : {PenaltyVariant::nip(), PenaltyVariant::nnipg()}) {
    double ex = boundedness_exact(F, var, mu);
    double sm = boundedness_check(F, var, mu, 500, 11);
    EXPECT_LE(sm, ex * (1 + 1e-10));
    EXPECT_LE(ex, 2.0 + 1e-10);
    EXPECT_GT(sm, 0.0);
  }
  // nBZ is E + mu P, which the norm dominates
  EXPECT_LE(boundedness_exact(F, PenaltyVariant::nbz(1), mu), 1.0 + 1e-10);
}

TEST(Diagnostics, SampledEstimatesAreDeterministic) {
  FormSet F = forms(0.5, 0.3, 6, 1);
  EXPECT_EQ(boundedness_check(F, PenaltyVariant::nip(), 30.0, 100, 5),
            boundedness_check(F, PenaltyVariant::nip(), 30.0, 100, 5));
  EXPECT_EQ(poincare_sampled(F, 30.0, 100, 9), poincare_sampled(F, 30.0, 100, 9));
  C0Estimate a = lemma_c0_estimate(F, 4, 200), b = lemma_c0_estimate(F, 4, 200);
  EXPECT_EQ(a.sampled, b.sampled);
  EXPECT_EQ(a.eigen, b.eigen);
}

TEST(Diagnostics, C0SampleDoesNotExceedTheEigenBound) {
  for (double alpha : {0.5, 2.5}) {
    FormSet F = forms(alpha, 0.25, 8, 2);
    C0Estimate c = lemma_c0_estimate(F, 1, 500);
    EXPECT_GT(c.sampled, 0.0);
    EXPECT_LE(c.sampled, c.eigen * (1 + 1e-8));
    EXPECT_DOUBLE_EQ(lemma_c0(F), c.eigen);
  }
}

TEST(Diagnostics, PoincareAgainstDenseEigenvalue) {
  FormSet F = forms(0.5, 0.3, 6, 1);
  const double mu = 30.0;
  Eigen::MatrixXd G(norm_gram(F, mu));
  // mass is the identity, so the sup ratio is 1/sqrt(lambda_min(G))
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  EXPECT_NEAR(poincare_constant(F, mu), 1.0 / std::sqrt(es.eigenvalues().minCoeff()), 1e-8);
  EXPECT_LE(poincare_sampled(F, mu, 300, 2), poincare_constant(F, mu) * (1 + 1e-10));
}

TEST(Diagnostics, CsvSchema) {
  InequalityReport r;
  r.quantity = "stability";
  r.N = 8;
  r.k = 2;
  r.alpha = 0.5;
  r.delta = 0.3;
  r.mu = 40;
  r.estimate = 0.9;
  r.method = "eigen";
  std::istringstream in(inequality_csv({r}));
  std::string head, row;
  std::getline(in, head);
  std::getline(in, row);
  EXPECT_EQ(head, "quantity,N,k,alpha,delta,mu,estimate,method");
  EXPECT_EQ(row.substr(0, 14), "stability,8,2,");
}
