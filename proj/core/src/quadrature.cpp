#include "nldg/quadrature.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace nldg {

namespace {

GaussRule build_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= n; ++j) {
      double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  constexpr int kMax = 128;
  if (n < 1 || n > kMax) throw std::invalid_argument("gauss_legendre: n out of range");
  static std::unique_ptr<GaussRule> cache[kMax + 1];
  static std::once_flag flags[kMax + 1];
  std::call_once(flags[n], [n] { cache[n] = std::make_unique<GaussRule>(build_rule(n)); });
  return *cache[n];
}

void legendre(double xi, int k, std::span<double> out) {
  out[0] = 1.0;
  if (k >= 1) out[1] = xi;
  for (int j = 2; j <= k; ++j)
    out[j] = ((2.0 * j - 1.0) * xi * out[j - 1] - (j - 1.0) * out[j - 2]) / j;
}

void legendre_deriv(double xi, int k, std::span<double> out) {
  // P_j' = P_{j-2}' + (2j-1) P_{j-1}
  double p[64];
  legendre(xi, k, std::span<double>(p, k + 1));
  out[0] = 0.0;
  if (k >= 1) out[1] = 1.0;
  for (int j = 2; j <= k; ++j) out[j] = out[j - 2] + (2.0 * j - 1.0) * p[j - 1];
}

}  // namespace nldg
