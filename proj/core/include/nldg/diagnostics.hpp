#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nldg/assembly.hpp"

namespace nldg {

struct InequalityReport {
  std::string quantity;
  int N = 0, k = 0;
  double alpha = 0.0, delta = 0.0, mu = 0.0;
  double estimate = 0.0;
  std::string method;  // "eigen" or "random_sample"
};

std::string inequality_csv(const std::vector<InequalityReport>& rows);

// Gram matrix of |||.|||^2: E + Jsemi + mu P.
SpMat norm_gram(const FormSet& forms, double mu);

// Smallest generalized eigenvalue of (sym B_h, G). Volume-constraint mode only
// (G is singular on constants in periodic mode).
double stability_constant(const FormSet& forms, const PenaltyVariant& variant, double mu);

struct C0Estimate {
  double eigen = 0.0;    // largest eigenvalue of (Jsemi, E + eps I)
  double sampled = 0.0;  // max Rayleigh quotient over random vectors
};
C0Estimate lemma_c0_estimate(const FormSet& forms, std::uint64_t seed = 1, int samples = 1000);
double lemma_c0(const FormSet& forms);

// max |B_h(v, w)| / (|||v||| |||w|||) over seeded random pairs.
double boundedness_check(const FormSet& forms, const PenaltyVariant& variant, double mu, int trials,
                         std::uint64_t seed);
// Exact supremum: largest singular value of G^{-1/2} B_h G^{-1/2}.
double boundedness_exact(const FormSet& forms, const PenaltyVariant& variant, double mu);

// sup ||v||_{L2} / |||v||| over V_h.
double poincare_constant(const FormSet& forms, double mu);
// max of the same ratio over seeded random fields.
double poincare_sampled(const FormSet& forms, double mu, int trials, std::uint64_t seed);

}  // namespace nldg
