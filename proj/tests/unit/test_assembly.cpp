#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <tuple>

#include "nldg/assembly.hpp"
#include "oracle.hpp"

using namespace nldg;

namespace {

Eigen::MatrixXd dense(const SpMat& A) { return Eigen::MatrixXd(A); }

double max_abs_diff(const SpMat& A, const Eigen::MatrixXd& B) { return (dense(A) - B).cwiseAbs().maxCoeff(); }

double min_eig(const Eigen::MatrixXd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (A + A.transpose()));
  return es.eigenvalues().minCoeff();
}

}  // namespace

// (alpha, delta, k, N, far-field points) on (0, 1). The default five-point far
// rule is only exact to 1e-8 when the far range is short.
class OracleForms : public ::testing::TestWithParam<std::tuple<double, double, int, int, int>> {};

TEST_P(OracleForms, MatchesBruteForceQuadrature) {
  auto [alpha, delta, k, N, far] = GetParam();
  KernelSpec ks = make_kernel(alpha, delta);
  SpacePtr V = make_space(build_mesh(0.0, 1.0, N, delta, BcMode::volume_constraint), k);
  AssemblyOptions opt;
  opt.far_points = far;
  FormSet F = assemble_forms(V, ks, opt);
  oracle::BruteForms B = oracle::brute_force_forms(*V, ks);
  EXPECT_LT(max_abs_diff(F.E, B.E), 1e-8);
  EXPECT_LT(max_abs_diff(F.Jsym, B.Jsym), 1e-8);
  EXPECT_LT(max_abs_diff(F.Jskew, B.Jskew), 1e-8);
  EXPECT_LT(max_abs_diff(F.P, B.P), 1e-8);
  EXPECT_LT(max_abs_diff(F.Jsemi, B.Jsemi), 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Kernels, OracleForms,
                         ::testing::Values(std::make_tuple(0.5, 0.3, 1, 4, 5), std::make_tuple(2.5, 0.3, 1, 4, 5),
                                           std::make_tuple(0.5, 0.15, 1, 4, 5), std::make_tuple(2.5, 0.15, 2, 4, 5),
                                           std::make_tuple(1.0, 0.55, 2, 4, 20), std::make_tuple(0.5, 0.3, 3, 5, 20),
                                           std::make_tuple(2.0, 0.1, 2, 3, 5)));

TEST(FarField, FivePointRuleConvergesToTheExactForms) {
  KernelSpec ks = make_kernel(1.0, 0.55);
  SpacePtr V = make_space(build_mesh(0.0, 1.0, 4, 0.55, BcMode::volume_constraint), 2);
  oracle::BruteForms B = oracle::brute_force_forms(*V, ks);
  double e5 = max_abs_diff(assemble_forms(V, ks, {1, 5}).E, B.E);
  double e10 = max_abs_diff(assemble_forms(V, ks, {1, 10}).E, B.E);
  EXPECT_LT(e5, 1e-4);
  EXPECT_LT(e10, 1e-2 * e5);
}

TEST(MomentRule, IntegratesItsMonomialsExactly) {
  KernelSpec ks = make_kernel(2.5, 0.7);
  const double hh = 0.2;
  for (int shift : {0, -1}) {
    MomentRule R = make_moment_rule(ks, hh, 3, 7, shift);
    for (int p = 3; p <= 7; ++p) {
      double q = 0.0;
      for (size_t m = 0; m < R.s.size(); ++m) q += R.w[m] * std::pow(R.s[m], p);
      double ref = partial_moment(ks, p + shift, 0.0, hh);
      EXPECT_NEAR(q, ref, 1e-10 * std::abs(ref)) << "p=" << p << " shift=" << shift;
    }
  }
}

TEST(MomentRule, OversampledFitStillExact) {
  KernelSpec ks = make_kernel(0.5, 0.4);
  MomentRule R = make_moment_rule(ks, 0.1, 2, 5, 0, 3);
  EXPECT_EQ(R.s.size(), 12u);
  for (int p = 2; p <= 5; ++p) {
    double q = 0.0;
    for (size_t m = 0; m < R.s.size(); ++m) q += R.w[m] * std::pow(R.s[m], p);
    EXPECT_NEAR(q, partial_moment(ks, p, 0.0, 0.1), 1e-13);
  }
}

TEST(Forms, OversamplingDoesNotChangeTheMatrices) {
  KernelSpec ks = make_kernel(2.5, 0.3);
  SpacePtr V = make_space(build_mesh(0.0, 1.0, 6, 0.3, BcMode::volume_constraint), 2);
  FormSet A = assemble_forms(V, ks);
  FormSet B = assemble_forms(V, ks, {3, 5});
  EXPECT_LT(dense(A.E - B.E).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT(dense(A.Jsym - B.Jsym).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT(dense(A.Jsemi - B.Jsemi).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Forms, SymmetryAndSemidefiniteness) {
  for (double alpha : {0.5, 2.5}) {
    KernelSpec ks = make_kernel(alpha, 0.25);
    SpacePtr V = make_space(build_mesh(0.0, 1.0, 8, 0.25, BcMode::volume_constraint), 2);
    FormSet F = assemble_forms(V, ks);
    Eigen::MatrixXd E = dense(F.E), P = dense(F.P), Js = dense(F.Jsym), Jk = dense(F.Jskew), S = dense(F.Jsemi);
    EXPECT_LT((E - E.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((Js - Js.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((Jk + Jk.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    double scale = E.cwiseAbs().maxCoeff();
    EXPECT_GT(min_eig(E), -1e-10 * scale);
    EXPECT_GT(min_eig(P), -1e-10 * scale);
    EXPECT_GT(min_eig(S), -1e-10 * scale);
  }
}

TEST(Forms, ConstantsInTheNullSpaceWhenPeriodic) {
  KernelSpec ks = make_kernel(0.5, 0.3);
  SpacePtr V = make_space(build_mesh(0.0, 2.0, 10, 0.3, BcMode::periodic), 1);
  FormSet F = assemble_forms(V, ks);
  DGField one = project(V, [](double) { return 1.0; });
  EXPECT_LT((F.E * one.coeffs).norm(), 1e-10);
  EXPECT_LT((F.Jsym * one.coeffs).norm(), 1e-10);
  EXPECT_LT((F.P * one.coeffs).norm(), 1e-10);
}

TEST(Forms, PenaltyWeightIsTheSymmetricSecondMoment) {
  KernelSpec ks = make_kernel(0.5, 1e-6);
  SpacePtr V = make_space(build_mesh(0.0, 1.0, 4, 1e-6, BcMode::volume_constraint), 1);
  FormSet F = assemble_forms(V, ks);
  // delta below h: the window is the whole horizon and its second moment is one
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(V->n_dof(), V->n_dof());
  for (int i = 0; i < V->mesh.n_interfaces(); ++i) {
    Vec r = jump_row(*V, i);
    S += r * r.transpose();
  }
  EXPECT_LT((dense(F.P) - S).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Forms, RejectsMismatchedHorizon) {
  SpacePtr V = make_space(build_mesh(0.0, 1.0, 4, 0.3, BcMode::volume_constraint), 1);
  EXPECT_THROW(assemble_forms(V, make_kernel(0.5, 0.4)), std::invalid_argument);
}

TEST(Compose, SelectsTheInterfaceTerm) {
  KernelSpec ks = make_kernel(0.5, 0.3);
  SpacePtr V = make_space(build_mesh(0.0, 1.0, 5, 0.3, BcMode::volume_constraint), 1);
  FormSet F = assemble_forms(V, ks);
  const double h = 0.2;
  Eigen::MatrixXd E = dense(F.E), P = dense(F.P);
  EXPECT_LT((dense(compose_scheme(F, PenaltyVariant::nbz(1), h)) - (E + std::pow(h, -3) * P)).norm(), 1e-8);
  EXPECT_LT((dense(compose_scheme(F, PenaltyVariant::nip(), h)) - (E + dense(F.Jsym) + 25.0 * P)).norm(), 1e-10);
  EXPECT_LT((dense(compose_scheme(F, PenaltyVariant::nnipg(), h)) - (E + dense(F.Jskew) + 25.0 * P)).norm(), 1e-10);
}

TEST(Compose, NnipgSymmetricPartIsEPlusPenalty) {
  KernelSpec ks = make_kernel(2.5, 0.3);
  SpacePtr V = make_space(build_mesh(0.0, 1.0, 5, 0.3, BcMode::volume_constraint), 2);
  FormSet F = assemble_forms(V, ks);
  Eigen::MatrixXd B = dense(compose_scheme(F, PenaltyVariant::nnipg(), 0.2));
  EXPECT_LT((0.5 * (B + B.transpose()) - dense(F.E) - 25.0 * dense(F.P)).norm(), 1e-10);
}

TEST(Scheme, ParsesNamesAndRejectsUnknown) {
  EXPECT_EQ(parse_scheme("nip"), Scheme::nIP);
  EXPECT_EQ(parse_scheme("nNIPG"), Scheme::nNIPG);
  EXPECT_EQ(parse_scheme("nbz"), Scheme::nBZ);
  EXPECT_THROW(parse_scheme("sipg"), std::invalid_argument);
}

TEST(Load, IntegratesPolynomialSourcesExactly) {
  SpacePtr V = make_space(build_mesh(0.0, 1.0, 3, 0.1, BcMode::volume_constraint), 2);
  Vec b = assemble_load(*V, [](double x) { return x * x; });
  // first basis function on each element is 1/sqrt(h)
  const double h = 1.0 / 3.0;
  for (int e = 0; e < 3; ++e) {
    double a = e * h, c = a + h;
    EXPECT_NEAR(b[V->dof(e, 0)], (c * c * c - a * a * a) / 3.0 / std::sqrt(h), 1e-13);
  }
}
