#pragma once

#include <string>
#include <vector>

#include "nldg/dg_space.hpp"
#include "nldg/kernel.hpp"

namespace nldg {

enum class Scheme { nBZ, nIP, nNIPG };

Scheme parse_scheme(const std::string& s);
std::string to_string(Scheme s);

// mu = c * h^-exponent.
struct PenaltyVariant {
  Scheme tag = Scheme::nIP;
  double c = 5.0;
  int exponent = 1;

  double mu_value(double h) const;

  static PenaltyVariant nip(double c = 5.0) { return {Scheme::nIP, c, 1}; }
  static PenaltyVariant nnipg(double c = 5.0) { return {Scheme::nNIPG, c, 1}; }
  static PenaltyVariant nbz(int k, double c = 1.0) { return {Scheme::nBZ, c, 2 * k + 1}; }
  static PenaltyVariant make(Scheme s, int k, double c);
};

struct FormSet {
  SpMat E, Jsym, Jskew, P, Jsemi;
  KernelSpec kernel;
  SpacePtr space;
};

// Weights w_m at s_m in (0, hhat) with sum w_m F(s_m) = int_0^hhat s^shift gamma(s) F(s) ds
// for every F in span{s^pmin, ..., s^pmax}. Chebyshev samples; oversample > 1 gives a
// least-squares fit on oversample * (pmax - pmin + 1) points.
struct MomentRule {
  std::vector<double> s, w;
};
MomentRule make_moment_rule(const KernelSpec& ks, double hhat, int pmin, int pmax, int shift = 0,
                            int oversample = 1);

struct AssemblyOptions {
  int oversample = 1;
  int far_points = 5;
};

FormSet assemble_forms(SpacePtr space, const KernelSpec& ks, const AssemblyOptions& opt = {});

SpMat compose_scheme(const FormSet& forms, const PenaltyVariant& variant, double h);

// (f, phi) for every basis function, k + extra_points Gauss points per element.
Vec assemble_load(const DGSpace& space, const ScalarFn& f, int extra_points = 3);

}  // namespace nldg
