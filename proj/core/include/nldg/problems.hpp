#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "nldg/kernel.hpp"
#include "nldg/mesh.hpp"

namespace nldg {

enum class ProblemId { ex1, ex2, ex3, ex4_i, ex4_ii, ex5 };

ProblemId parse_problem(const std::string& s);
std::string to_string(ProblemId id);

struct FluxFunction {
  std::string name;
  std::function<double(double)> f, df;
  bool linear = false;
  bool convex = false;
  double sonic = 0.0;  // minimiser of f when convex
};

FluxFunction linear_flux();
FluxFunction burgers_flux();

struct ProblemSpec {
  ProblemId id = ProblemId::ex1;
  double a = 0.0, b = 1.0;
  BcMode bc = BcMode::volume_constraint;
  bool time_dependent = false;
  // u(x, t); empty when only a reference solution exists
  std::function<double(double, double)> exact;
  std::function<double(double)> initial;
  std::optional<FluxFunction> flux;
  double sigma = 0.0;
  double final_time = 0.0;
  // kernel parameters fixed by the example, if any
  std::optional<double> alpha, delta;
  // source for a given kernel: steady f_delta(x) or time-dependent f_s(x, t)
  std::function<std::function<double(double, double)>(const KernelSpec&, double sigma)> make_source;
  // f_s(x, t) = exp(-t) f_s(x, 0)
  bool source_exp_decay = false;
  // error window for reference comparisons
  double err_lo = 0.0, err_hi = 1.0;
};

ProblemSpec make_problem(ProblemId id);

struct QuadratureError : std::runtime_error {
  double last, previous;
  QuadratureError(const std::string& what, double l, double p)
      : std::runtime_error(what), last(l), previous(p) {}
};

// f_delta(x) = -2 int_0^delta gamma(s) (g(x+s) + g(x-s) - 2 g(x)) ds for g in C^2 on
// each side of the kinks (points where g'' may jump).
double f_delta_smooth(const KernelSpec& ks, const std::function<double(double)>& g,
                      const std::function<double(double)>& g_second, double x, double tol = 1e-12,
                      std::span<const double> kinks = {});

// Same operator applied to the indicator of (j1, j2); closed form.
double f_delta_indicator(const KernelSpec& ks, double x, double j1 = 0.25, double j2 = 0.75);

// Source of the periodic sin^6 convection problem.
double source_ex3(const KernelSpec& ks, double sigma, double x, double t);

}  // namespace nldg
