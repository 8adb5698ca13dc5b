#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nldg/assembly.hpp"
#include "nldg/problems.hpp"

namespace nldg {

// delta as a function of h: fixed, 2.5h or sqrt(h).
struct DeltaRule {
  enum Kind { fixed, times_h, sqrt_h } kind = fixed;
  double value = 0.0;  // the fixed delta, or the multiplier of h

  double delta_for(double h) const;
  std::string label() const;
  static DeltaRule parse(const std::string& s);  // "pi/6", "2.5h", "sqrt_h", "1e-6"
};

struct SteadyRun {
  DGField u;
  FormSet forms;
  double mu = 0.0;
};

SteadyRun solve_steady_run(const ProblemSpec& problem, int N, int k, const PenaltyVariant& variant,
                           const KernelSpec& ks);

DGField solve_steady(const ProblemSpec& problem, int N, int k, const PenaltyVariant& variant,
                     const KernelSpec& ks);

// Direct sparse solve: LDLT when symmetric, LU otherwise.
Vec solve_linear(const SpMat& A, const Vec& rhs, bool symmetric);

double l2_error(const DGField& u, const ScalarFn& exact, int extra_points = 4);

struct EnergyNorms {
  double e_semi = 0.0, j_semi = 0.0, p_semi = 0.0, triple = 0.0;
};

EnergyNorms energy_norms(const DGField& u, const FormSet& forms, double mu);

struct ConvergenceRow {
  int N = 0;
  double h = 0.0, delta = 0.0, mu = 0.0;
  double l2_error = 0.0;
  std::optional<double> l2_order;
  double energy_error = 0.0;
  std::optional<double> energy_order;
};

struct ConvergenceReport {
  std::string scheme;
  int k = 1;
  double alpha = 0.0;
  std::string delta_rule;
  std::vector<ConvergenceRow> rows;

  std::string to_csv(bool with_rule_column = false) const;
};

double observed_order(double e_prev, double e_cur, double n_prev, double n_cur);

// Energy error is |||P_h u - u_h||| with P_h the L2 projection.
ConvergenceReport convergence_study(const ProblemSpec& problem, const std::vector<int>& Ns, int k,
                                    const PenaltyVariant& variant, double alpha, const DeltaRule& rule);

}  // namespace nldg
