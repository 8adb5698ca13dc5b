#include "nldg/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "nldg/quadrature.hpp"

namespace nldg {

namespace {

constexpr double kPi = std::numbers::pi;

double sin6(double x) { return std::pow(std::sin(x), 6); }
double sin6_d1(double x) { return 6.0 * std::pow(std::sin(x), 5) * std::cos(x); }
double sin6_d2(double x) {
  double s = std::sin(x), c = std::cos(x);
  return 30.0 * std::pow(s, 4) * c * c - 6.0 * std::pow(s, 6);
}

double zero_ext(double (*f)(double), double x) { return (x > 0.0 && x < kPi) ? f(x) : 0.0; }

double gl10(const std::function<double(double)>& f, double lo, double hi) { return integrate(f, lo, hi, 10); }

double adaptive(const std::function<double(double)>& f, double lo, double hi, double whole, double tol, int depth) {
  double mid = 0.5 * (lo + hi);
  double l = gl10(f, lo, mid), r = gl10(f, mid, hi);
  if (std::abs(l + r - whole) <= tol * std::max(1.0, std::abs(l + r)) || depth >= 40) return l + r;
  return adaptive(f, lo, mid, l, tol, depth + 1) + adaptive(f, mid, hi, r, tol, depth + 1);
}

}  // namespace

ProblemId parse_problem(const std::string& s) {
  if (s == "1" || s == "ex1") return ProblemId::ex1;
  if (s == "2" || s == "ex2") return ProblemId::ex2;
  if (s == "3" || s == "ex3") return ProblemId::ex3;
  if (s == "4" || s == "4i" || s == "4-i" || s == "ex4" || s == "ex4_i") return ProblemId::ex4_i;
  if (s == "4ii" || s == "4-ii" || s == "ex4_ii") return ProblemId::ex4_ii;
  if (s == "5" || s == "ex5") return ProblemId::ex5;
  throw std::invalid_argument("unknown example '" + s + "'");
}

std::string to_string(ProblemId id) {
  switch (id) {
    case ProblemId::ex1: return "ex1";
    case ProblemId::ex2: return "ex2";
    case ProblemId::ex3: return "ex3";
    case ProblemId::ex4_i: return "ex4_i";
    case ProblemId::ex4_ii: return "ex4_ii";
    case ProblemId::ex5: return "ex5";
  }
  return "?";
}

FluxFunction linear_flux() {
  FluxFunction F;
  F.name = "linear";
  F.f = [](double u) { return u; };
  F.df = [](double) { return 1.0; };
  F.linear = true;
  F.convex = true;
  return F;
}

FluxFunction burgers_flux() {
  FluxFunction F;
  F.name = "burgers";
  F.f = [](double u) { return 0.5 * u * u; };
  F.df = [](double u) { return u; };
  F.convex = true;
  F.sonic = 0.0;
  return F;
}

double f_delta_smooth(const KernelSpec& ks, const std::function<double(double)>& g,
                      const std::function<double(double)>& g_second, double x, double tol,
                      std::span<const double> kinks) {
  const double delta = ks.delta;
  std::vector<double> br;
  for (double z : kinks) {
    double d = std::abs(x - z);
    if (d > 1e-14 * std::max(1.0, delta) && d < delta) br.push_back(d);
  }
  std::sort(br.begin(), br.end());
  br.push_back(delta);
  const double d1 = br.front();

  // [0, d1]: D(s) = s^2 Q(s), Q(s) = int_0^1 (1-tau)(g''(x+tau s) + g''(x-tau s)) dtau
  auto Q = [&](double s) {
    return integrate([&](double tau) { return (1.0 - tau) * (g_second(x + tau * s) + g_second(x - tau * s)); },
                     0.0, 1.0, 10);
  };
  const double q0 = g_second(x);
  double body = 0.0, hi = d1;
  double est = q0 * partial_moment(ks, 2, 0.0, d1), prev = est;
  bool done = false;
  for (int piece = 0; piece < 60; ++piece) {
    const double lo = 0.5 * hi;
    body += integrate([&](double s) { return ks.scale * std::pow(s, 2.0 - ks.alpha) * Q(s); }, lo, hi, 10);
    hi = lo;
    prev = est;
    est = body + q0 * partial_moment(ks, 2, 0.0, hi);
    if (piece >= 2 && std::abs(est - prev) < tol * std::max(1.0, std::abs(est))) {
      done = true;
      break;
    }
  }
  if (!done)
    throw QuadratureError("f_delta_smooth: graded quadrature did not converge (last " + std::to_string(est) +
                              ", previous " + std::to_string(prev) + ")",
                          est, prev);

  double total = est;
  const double gx = g(x);
  std::function<double(double)> D = [&](double s) {
    return kernel_eval(ks, s) * (g(x + s) + g(x - s) - 2.0 * gx);
  };
  for (size_t i = 0; i + 1 < br.size(); ++i) {
    const double lo = br[i], up = br[i + 1];
    if (up - lo <= 0.0) continue;
    total += adaptive(D, lo, up, gl10(D, lo, up), tol, 0);
  }
  return -2.0 * total;
}

double f_delta_indicator(const KernelSpec& ks, double x, double j1, double j2) {
  if (x == j1 || x == j2) throw std::domain_error("f_delta_indicator: x sits on a jump");
  const double d = ks.delta;
  const double d1 = std::abs(x - j1), d2 = std::abs(x - j2);
  auto pm0 = [&](double lo, double hi) {
    lo = std::min(lo, d);
    hi = std::min(hi, d);
    return hi > lo ? partial_moment(ks, 0, lo, hi) : 0.0;
  };
  if (x > j1 && x < j2) return 2.0 * (pm0(d1, d) + pm0(d2, d));
  if (x < j1) return -2.0 * pm0(d1, d2);
  return -2.0 * pm0(d2, d1);
}

double source_ex3(const KernelSpec& ks, double sigma, double x, double t) {
  double Lg = sigma != 0.0 ? f_delta_smooth(ks, sin6, sin6_d2, x) : 0.0;
  return std::exp(-t) * (-sin6(x) + sin6_d1(x) + sigma * Lg);
}

ProblemSpec make_problem(ProblemId id) {
  ProblemSpec p;
  p.id = id;
  switch (id) {
    case ProblemId::ex1:
      p.a = 0.0;
      p.b = kPi;
      p.exact = [](double x, double) { return zero_ext(sin6, x); };
      p.make_source = [](const KernelSpec& ks, double) {
        return std::function<double(double, double)>([ks](double x, double) {
          static const double kinks[] = {0.0, kPi};
          return f_delta_smooth(
              ks, [](double y) { return zero_ext(sin6, y); }, [](double y) { return zero_ext(sin6_d2, y); }, x,
              1e-12, kinks);
        });
      };
      p.err_lo = 0.0;
      p.err_hi = kPi;
      break;
    case ProblemId::ex2:
      p.a = 0.0;
      p.b = 1.0;
      p.alpha = 0.5;
      p.delta = 0.125;
      p.exact = [](double x, double) { return (x > 0.25 && x < 0.75) ? 1.0 : 0.0; };
      p.make_source = [](const KernelSpec& ks, double) {
        return std::function<double(double, double)>(
            [ks](double x, double) { return f_delta_indicator(ks, x); });
      };
      p.err_lo = 0.0;
      p.err_hi = 1.0;
      break;
    case ProblemId::ex3:
      p.a = 0.0;
      p.b = kPi;
      p.bc = BcMode::periodic;
      p.time_dependent = true;
      p.exact = [](double x, double t) { return std::exp(-t) * sin6(x); };
      p.initial = sin6;
      p.flux = linear_flux();
      p.sigma = 0.5;
      p.final_time = 2.2;
      p.source_exp_decay = true;
      p.make_source = [](const KernelSpec& ks, double sigma) {
        return std::function<double(double, double)>(
            [ks, sigma](double x, double t) { return source_ex3(ks, sigma, x, t); });
      };
      p.err_lo = 0.0;
      p.err_hi = kPi;
      break;
    case ProblemId::ex4_i:
    case ProblemId::ex4_ii: {
      const double ul = id == ProblemId::ex4_i ? 0.0 : 1.0, ur = 1.0 - ul;
      p.a = -9.0;
      p.b = 9.0;
      p.bc = BcMode::periodic;
      p.time_dependent = true;
      p.initial = [ul, ur](double x) { return x < 0.0 ? ul : ur; };
      p.flux = linear_flux();
      p.sigma = 0.2;
      p.final_time = 2.0;
      p.alpha = 0.5;
      p.delta = 0.125;
      p.err_lo = -2.0;
      p.err_hi = 6.0;
      break;
    }
    case ProblemId::ex5:
      p.a = 0.0;
      p.b = 2.0 * kPi;
      p.bc = BcMode::periodic;
      p.time_dependent = true;
      p.initial = [](double x) { return std::sin(x); };
      p.flux = burgers_flux();
      p.sigma = kPi / 15.0;
      p.final_time = 1.6;
      p.alpha = 0.5;
      p.delta = kPi / 6.0;
      p.err_lo = 0.0;
      p.err_hi = 2.0 * kPi;
      break;
  }
  return p;
}

}  // namespace nldg
