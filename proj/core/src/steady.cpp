#include "nldg/steady.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nldg/csv.hpp"
#include "nldg/quadrature.hpp"

namespace nldg {

double DeltaRule::delta_for(double h) const {
  switch (kind) {
    case fixed: return value;
    case times_h: return value * h;
    case sqrt_h: return std::sqrt(h);
  }
  return value;
}

std::string DeltaRule::label() const {
  switch (kind) {
    case fixed: return format_sig(value, 6);
    case times_h: return format_sig(value, 6) + "h";
    case sqrt_h: return "sqrt_h";
  }
  return "";
}

DeltaRule DeltaRule::parse(const std::string& s) {
  DeltaRule r;
  if (s == "sqrt_h" || s == "sqrt(h)" || s == "sqrth") {
    r.kind = sqrt_h;
    return r;
  }
  if (!s.empty() && s.back() == 'h') {
    r.kind = times_h;
    r.value = parse_real_expr(s.substr(0, s.size() - 1));
    if (!(r.value > 0.0)) throw std::invalid_argument("delta rule: multiplier must be positive");
    return r;
  }
  r.kind = fixed;
  r.value = parse_real_expr(s);
  if (!(r.value > 0.0)) throw std::invalid_argument("delta must be positive");
  return r;
}

Vec solve_linear(const SpMat& A, const Vec& rhs, bool symmetric) {
  if (symmetric) {
    Eigen::SimplicialLDLT<SpMat> ldlt(A);
    if (ldlt.info() != Eigen::Success) throw std::runtime_error("LDLT factorization failed");
    Vec x = ldlt.solve(rhs);
    if (ldlt.info() != Eigen::Success || !x.allFinite()) throw std::runtime_error("LDLT solve failed");
    return x;
  }
  Eigen::SparseLU<SpMat> lu;
  lu.analyzePattern(A);
  lu.factorize(A);
  if (lu.info() != Eigen::Success) throw std::runtime_error("LU factorization failed: " + lu.lastErrorMessage());
  Vec x = lu.solve(rhs);
  if (lu.info() != Eigen::Success || !x.allFinite()) throw std::runtime_error("LU solve failed");
  return x;
}

SteadyRun solve_steady_run(const ProblemSpec& problem, int N, int k, const PenaltyVariant& variant,
                           const KernelSpec& ks) {
  if (problem.time_dependent) throw std::invalid_argument("solve_steady: problem is time dependent");
  Mesh mesh = build_mesh(problem.a, problem.b, N, ks.delta, problem.bc);
  SpacePtr V = make_space(mesh, k);
  SteadyRun run;
  run.forms = assemble_forms(V, ks);
  run.mu = variant.mu_value(mesh.h);
  SpMat B = compose_scheme(run.forms, variant, mesh.h);
  auto src = problem.make_source(ks, 0.0);
  Vec F = assemble_load(*V, [&](double x) { return src(x, 0.0); });
  run.u = DGField(V, solve_linear(B, F, variant.tag == Scheme::nIP));
  return run;
}

DGField solve_steady(const ProblemSpec& problem, int N, int k, const PenaltyVariant& variant,
                     const KernelSpec& ks) {
  return solve_steady_run(problem, N, k, variant, ks).u;
}

double l2_error(const DGField& u, const ScalarFn& exact, int extra_points) {
  const DGSpace& V = *u.space;
  const Mesh& m = V.mesh;
  const GaussRule& g = gauss_legendre(V.k + extra_points);
  double acc = 0.0;
  for (int e = 0; e < m.n_phys; ++e) {
    const double c = 0.5 * (m.xl(e) + m.xr(e)), r = 0.5 * m.width(e);
    for (int q = 0; q < g.size(); ++q) {
      double x = c + r * g.x[q];
      double d = u.eval_in(e, x) - exact(x);
      acc += r * g.w[q] * d * d;
    }
  }
  return std::sqrt(acc);
}

EnergyNorms energy_norms(const DGField& u, const FormSet& forms, double mu) {
  const Vec& v = u.coeffs;
  EnergyNorms n;
  double e2 = v.dot(forms.E * v), j2 = v.dot(forms.Jsemi * v), p2 = v.dot(forms.P * v);
  n.e_semi = std::sqrt(std::max(0.0, e2));
  n.j_semi = std::sqrt(std::max(0.0, j2));
  n.p_semi = std::sqrt(std::max(0.0, p2));
  n.triple = std::sqrt(std::max(0.0, e2 + j2 + mu * p2));
  return n;
}

double observed_order(double e_prev, double e_cur, double n_prev, double n_cur) {
  return std::log(e_prev / e_cur) / std::log(n_cur / n_prev);
}

std::string ConvergenceReport::to_csv(bool with_rule_column) const {
  std::ostringstream os;
  if (with_rule_column) os << "delta_rule,";
  os << "N,h,delta,L2_error,order,energy_error,energy_order\n";
  for (const auto& r : rows) {
    if (with_rule_column) os << delta_rule << ',';
    os << r.N << ',' << format_sig(r.h, 6) << ',' << format_sig(r.delta, 6) << ',' << format_error(r.l2_error) << ','
       << (r.l2_order ? format_order(*r.l2_order) : "") << ',' << format_error(r.energy_error) << ','
       << (r.energy_order ? format_order(*r.energy_order) : "") << '\n';
  }
  return os.str();
}

ConvergenceReport convergence_study(const ProblemSpec& problem, const std::vector<int>& Ns, int k,
                                    const PenaltyVariant& variant, double alpha, const DeltaRule& rule) {
  for (size_t i = 1; i < Ns.size(); ++i)
    if (Ns[i] <= Ns[i - 1]) throw std::invalid_argument("convergence_study: N list must increase");
  ConvergenceReport rep;
  rep.scheme = to_string(variant.tag);
  rep.k = k;
  rep.alpha = alpha;
  rep.delta_rule = rule.label();
  for (int N : Ns) {
    const double h = (problem.b - problem.a) / N;
    KernelSpec ks = make_kernel(alpha, rule.delta_for(h));
    SteadyRun run = solve_steady_run(problem, N, k, variant, ks);
    auto exact = [&](double x) { return problem.exact(x, 0.0); };
    ConvergenceRow row;
    row.N = N;
    row.h = h;
    row.delta = ks.delta;
    row.mu = run.mu;
    // reported as the root-mean-square error over the domain
    row.l2_error = l2_error(run.u, exact) / std::sqrt(problem.b - problem.a);
    DGField proj = project(run.u.space, exact, 6);
    proj.coeffs -= run.u.coeffs;
    row.energy_error = energy_norms(proj, run.forms, run.mu).triple;
    if (!rep.rows.empty()) {
      const auto& p = rep.rows.back();
      row.l2_order = observed_order(p.l2_error, row.l2_error, p.N, N);
      row.energy_order = observed_order(p.energy_error, row.energy_error, p.N, N);
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace nldg
