#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "nldg/assembly.hpp"
#include "nldg/convection.hpp"
#include "nldg/problems.hpp"

namespace nldg {

// Additive RK pair: explicit part for convection and sources, diagonally
// implicit part for the nonlocal diffusion.
struct ImexTableau {
  std::string name;
  int order = 0;
  Eigen::MatrixXd AE, AI;
  Eigen::VectorXd bE, bI, c;
  int stages() const { return static_cast<int>(c.size()); }
};

// "cfn64" (6 stages, order 4; default), "ark436" (6 stages, order 4),
// "ark324" (4 stages, order 3).
ImexTableau imex_tableau(const std::string& name = "cfn64");

// Errors of u' = lamE u + lamI u on [0, T] for each step count.
std::vector<double> imex_scalar_errors(const ImexTableau& tab, double lamE, double lamI, double T,
                                       const std::vector<int>& steps);
// Smallest observed order over successive step doublings T/20 .. T/320.
double imex_min_observed_order(const ImexTableau& tab);

struct Snapshot {
  double t = 0.0;
  std::vector<double> x, u;
};

// 8 equispaced points per element, endpoints included as one-sided traces.
Snapshot sample_field(const DGField& u, double t, int per_elem = 8);
std::string snapshots_csv(const std::vector<Snapshot>& snaps);

struct ImexOptions {
  double cfl = -1.0;  // negative: 0.3 / (2k + 1)
  std::optional<FluxKind> flux;
  std::string tableau = "cfn64";
  std::optional<double> sigma;
  std::vector<double> snapshot_times;
  bool strict = false;  // run the order self-test first
};

struct ImexResult {
  DGField u;
  double tau = 0.0;
  int steps = 0;
  std::vector<Snapshot> snapshots;
};

ImexResult imex_evolve(const ProblemSpec& problem, int N, int k, const PenaltyVariant& variant,
                       const KernelSpec& ks, const ImexOptions& opt);
DGField imex_evolve(const ProblemSpec& problem, int N, int k, const PenaltyVariant& variant,
                    const KernelSpec& ks, double cfl);

// ||a - b||_{L2(lo, hi)} for fields on different meshes of the same domain.
double l2_difference(const DGField& a, const DGField& b, double lo, double hi);

}  // namespace nldg
