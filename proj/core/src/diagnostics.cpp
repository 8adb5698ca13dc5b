#include "nldg/diagnostics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nldg/csv.hpp"

namespace nldg {

namespace {

Eigen::MatrixXd dense(const SpMat& A) { return Eigen::MatrixXd(A); }

void require_vc(const FormSet& f) {
  if (f.space->mesh.periodic())
    throw std::invalid_argument("diagnostics need volume-constraint mode (|||.||| vanishes on constants otherwise)");
}

Vec random_vec(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = nd(rng);
  return v;
}

}  // namespace

std::string inequality_csv(const std::vector<InequalityReport>& rows) {
  std::ostringstream os;
  os << "quantity,N,k,alpha,delta,mu,estimate,method\n";
  for (const auto& r : rows)
    os << r.quantity << ',' << r.N << ',' << r.k << ',' << format_sig(r.alpha, 6) << ',' << format_sig(r.delta, 6)
       << ',' << format_sig(r.mu, 6) << ',' << format_sig(r.estimate, 10) << ',' << r.method << '\n';
  return os.str();
}

SpMat norm_gram(const FormSet& forms, double mu) {
  SpMat G = forms.E + forms.Jsemi + mu * forms.P;
  return G;
}

double stability_constant(const FormSet& forms, const PenaltyVariant& variant, double mu) {
  require_vc(forms);
  const double h = forms.space->mesh.h;
  Eigen::MatrixXd B = dense(compose_scheme(forms, variant, h));
  // compose_scheme uses variant.mu_value(h); rebase onto the requested mu
  B += (mu - variant.mu_value(h)) * dense(forms.P);
  Eigen::MatrixXd S = 0.5 * (B + B.transpose());
  Eigen::MatrixXd G = dense(norm_gram(forms, mu));
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(S, G, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("stability_constant: G is not positive definite");
  return es.eigenvalues().minCoeff();
}

C0Estimate lemma_c0_estimate(const FormSet& forms, std::uint64_t seed, int samples) {
  Eigen::MatrixXd J = dense(forms.Jsemi), E = dense(forms.E);
  const int n = static_cast<int>(E.rows());
  const double eps = 1e-12 * E.trace() / n;
  Eigen::MatrixXd Er = E + eps * Eigen::MatrixXd::Identity(n, n);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (J + J.transpose()), Er,
                                                                Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("lemma_c0: eigen-solve failed");
  C0Estimate c;
  c.eigen = es.eigenvalues().maxCoeff();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    Vec v = random_vec(rng, n);
    double num = v.dot(J * v), den = v.dot(Er * v);
    c.sampled = std::max(c.sampled, num / den);
  }
  return c;
}

double lemma_c0(const FormSet& forms) { return lemma_c0_estimate(forms).eigen; }

double boundedness_check(const FormSet& forms, const PenaltyVariant& variant, double mu, int trials,
                         std::uint64_t seed) {
  require_vc(forms);
  const double h = forms.space->mesh.h;
  SpMat B = compose_scheme(forms, variant, h) + (mu - variant.mu_value(h)) * forms.P;
  SpMat G = norm_gram(forms, mu);
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(B.rows());
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    Vec v = random_vec(rng, n), w = random_vec(rng, n);
    // every other trial uses w = v
    if (t % 2 == 1) w = v;
    double num = std::abs(v.dot(B * w));
    double den = std::sqrt(v.dot(G * v) * w.dot(G * w));
    worst = std::max(worst, num / den);
  }
  return worst;
}

double boundedness_exact(const FormSet& forms, const PenaltyVariant& variant, double mu) {
  require_vc(forms);
  const double h = forms.space->mesh.h;
  Eigen::MatrixXd B = dense(compose_scheme(forms, variant, h)) + (mu - variant.mu_value(h)) * dense(forms.P);
  Eigen::MatrixXd G = dense(norm_gram(forms, mu));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw std::runtime_error("boundedness_exact: G is not positive definite");
  Eigen::MatrixXd Gih = es.operatorInverseSqrt();
  Eigen::MatrixXd T = Gih * B * Gih;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(T);
  return svd.singularValues()(0);
}

double poincare_constant(const FormSet& forms, double mu) {
  require_vc(forms);
  Eigen::MatrixXd G = dense(norm_gram(forms, mu));
  // mass matrix is the identity for the orthonormal basis
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
  double lmin = es.eigenvalues().minCoeff();
  if (!(lmin > 0.0)) throw std::runtime_error("poincare_constant: |||.||| is degenerate");
  return 1.0 / std::sqrt(lmin);
}

double poincare_sampled(const FormSet& forms, double mu, int trials, std::uint64_t seed) {
  SpMat G = norm_gram(forms, mu);
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(G.rows());
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    Vec v = random_vec(rng, n);
    worst = std::max(worst, v.norm() / std::sqrt(v.dot(G * v)));
  }
  return worst;
}

}  // namespace nldg
