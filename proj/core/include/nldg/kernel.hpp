#pragma once

namespace nldg {

// gamma_delta(s) = scale * |s|^-alpha on (-delta, delta), zero outside.
struct KernelSpec {
  double alpha = 0.5;
  double delta = 1.0;
  double scale = 1.25;
};

KernelSpec make_kernel(double alpha, double delta);

double kernel_eval(const KernelSpec& ks, double s);

// int_{s1}^{s2} s^p gamma(s) ds, closed form.
double partial_moment(const KernelSpec& ks, int p, double s1, double s2);

}  // namespace nldg
