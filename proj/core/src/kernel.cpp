#include "nldg/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace nldg {

KernelSpec make_kernel(double alpha, double delta) {
  if (!(alpha < 3.0) || alpha < 0.0)
    throw std::invalid_argument("make_kernel: alpha must lie in [0, 3)");
  if (!(delta > 0.0)) throw std::invalid_argument("make_kernel: delta must be positive");
  KernelSpec ks;
  ks.alpha = alpha;
  ks.delta = delta;
  ks.scale = (3.0 - alpha) / (2.0 * std::pow(delta, 3.0 - alpha));
  return ks;
}

double kernel_eval(const KernelSpec& ks, double s) {
  double a = std::abs(s);
  if (a == 0.0) throw std::domain_error("kernel_eval: singular at s = 0");
  if (a > ks.delta) return 0.0;
  return ks.scale * std::pow(a, -ks.alpha);
}

double partial_moment(const KernelSpec& ks, int p, double s1, double s2) {
  if (s1 < 0.0 || s2 < s1) throw std::invalid_argument("partial_moment: need 0 <= s1 <= s2");
  if (s1 == s2) return 0.0;
  const double e = p + 1.0 - ks.alpha;
  if (s1 == 0.0 && e <= 0.0) throw std::domain_error("partial_moment: divergent at s = 0");
  if (std::abs(e) < 1e-14) return ks.scale * std::log(s2 / s1);
  if (s1 == 0.0) return ks.scale * std::pow(s2, e) / e;
  // s2^e - s1^e without cancellation when s1 ~ s2
  return ks.scale * std::pow(s2, e) * -std::expm1(e * std::log(s1 / s2)) / e;
}

}  // namespace nldg
