#pragma once

#include <span>
#include <vector>

namespace nldg {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
  int size() const { return static_cast<int>(x.size()); }
};

// Cached; the returned reference stays valid for the life of the process.
const GaussRule& gauss_legendre(int n);

// Integrate f over [lo, hi] with the n-point rule.
template <class F>
double integrate(F&& f, double lo, double hi, int n) {
  const GaussRule& g = gauss_legendre(n);
  const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
  double acc = 0.0;
  for (int q = 0; q < g.size(); ++q) acc += g.w[q] * f(c + r * g.x[q]);
  return acc * r;
}

// P_0..P_k at xi, written into out (size k+1).
void legendre(double xi, int k, std::span<double> out);
// P_0'..P_k' at xi.
void legendre_deriv(double xi, int k, std::span<double> out);

}  // namespace nldg
