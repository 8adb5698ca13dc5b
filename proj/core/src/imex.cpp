#include "nldg/imex.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "nldg/csv.hpp"
#include "nldg/quadrature.hpp"

namespace nldg {

namespace {

using Rows = std::vector<std::vector<double>>;

ImexTableau build(std::string name, int order, const Rows& ae, const Rows& ai, const std::vector<double>& be,
                  const std::vector<double>& bi) {
  const int s = static_cast<int>(be.size());
  ImexTableau t;
  t.name = std::move(name);
  t.order = order;
  t.AE = Eigen::MatrixXd::Zero(s, s);
  t.AI = Eigen::MatrixXd::Zero(s, s);
  t.bE = Eigen::VectorXd::Map(be.data(), s);
  t.bI = Eigen::VectorXd::Map(bi.data(), s);
  for (int i = 0; i < s; ++i) {
    for (size_t j = 0; j < ae[i].size(); ++j) t.AE(i, j) = ae[i][j];
    for (size_t j = 0; j < ai[i].size(); ++j) t.AI(i, j) = ai[i][j];
  }
  t.c = t.AE.rowwise().sum();
  return t;
}

ImexTableau cfn64() {
  const std::vector<double> b = {0.0, 25.0 / 24, -49.0 / 48, 125.0 / 16, -85.0 / 12, 1.0 / 4};
  Rows ai = {{0.0},
             {0.0, 1.0 / 4},
             {0.0, 1.0 / 2, 1.0 / 4},
             {0.0, 17.0 / 50, -1.0 / 25, 1.0 / 4},
             {0.0, 371.0 / 1360, -137.0 / 2720, 15.0 / 544, 1.0 / 4},
             b};
  Rows ae = {{},
             {1.0 / 4},
             {-1.0 / 4, 1.0},
             {-13.0 / 100, 43.0 / 75, 8.0 / 75},
             {-6.0 / 85, 42.0 / 85, 179.0 / 1360, -15.0 / 272},
             {0.0, 79.0 / 24, -5.0 / 8, 25.0 / 2, -85.0 / 6}};
  return build("cfn64", 4, ae, ai, b, b);
}

ImexTableau ark436() {
  const std::vector<double> b = {82889.0 / 524892, 0.0, 15625.0 / 83664, 69875.0 / 102672, -2260.0 / 8211, 1.0 / 4};
  Rows ai = {{0.0},
             {1.0 / 4, 1.0 / 4},
             {8611.0 / 62500, -1743.0 / 31250, 1.0 / 4},
             {5012029.0 / 34652500, -654441.0 / 2922500, 174375.0 / 388108, 1.0 / 4},
             {15267082809.0 / 155376265600, -71443401.0 / 120774400, 730878875.0 / 902184768,
              2285395.0 / 8070912, 1.0 / 4},
             b};
  Rows ae = {{},
             {1.0 / 2},
             {13861.0 / 62500, 6889.0 / 62500},
             {-116923316275.0 / 2393684061468, -2731218467317.0 / 15368042101831,
              9408046702089.0 / 11113171139209},
             {-451086348788.0 / 2902428689909, -2682348792572.0 / 7519795681897,
              12662868775082.0 / 11960479115383, 3355817975965.0 / 11060851509271},
             {647845179188.0 / 3216320057751, 73281519250.0 / 8382639484533, 552539513391.0 / 3454668386233,
              3354512671639.0 / 8306763924573, 4040.0 / 17871}};
  return build("ark436", 4, ae, ai, b, b);
}

ImexTableau ark324() {
  const double g = 1767732205903.0 / 4055673282236;
  const std::vector<double> b = {1471266399579.0 / 7840856788654, -4482444167858.0 / 7529755066697,
                                 11266239266428.0 / 11593286722821, g};
  Rows ai = {{0.0}, {g, g}, {2746238789719.0 / 10658868560708, -640167445237.0 / 6845629431997, g}, b};
  Rows ae = {{},
             {1767732205903.0 / 2027836641118},
             {5535828885825.0 / 10492691773637, 788022342437.0 / 10882634858940},
             {6485989280629.0 / 16251701735622, -4246266847089.0 / 9704473918619,
              10755448449292.0 / 10357097424841}};
  return build("ark324", 3, ae, ai, b, b);
}

class StageSolver {
 public:
  StageSolver(const SpMat& K, bool symmetric) : sym_(symmetric) {
    if (sym_) {
      ldlt_ = std::make_unique<Eigen::SimplicialLDLT<SpMat>>(K);
      if (ldlt_->info() != Eigen::Success) throw std::runtime_error("stage matrix factorization failed");
    } else {
      lu_ = std::make_unique<Eigen::SparseLU<SpMat>>();
      lu_->analyzePattern(K);
      lu_->factorize(K);
      if (lu_->info() != Eigen::Success) throw std::runtime_error("stage matrix factorization failed");
    }
  }
  Vec solve(const Vec& r) const {
    Vec x = sym_ ? Vec(ldlt_->solve(r)) : Vec(lu_->solve(r));
    if (!x.allFinite()) throw std::runtime_error("stage solve produced non-finite values");
    return x;
  }

 private:
  bool sym_;
  std::unique_ptr<Eigen::SimplicialLDLT<SpMat>> ldlt_;
  std::unique_ptr<Eigen::SparseLU<SpMat>> lu_;
};

}  // namespace

ImexTableau imex_tableau(const std::string& name) {
  if (name == "cfn64") return cfn64();
  if (name == "ark436") return ark436();
  if (name == "ark324") return ark324();
  throw std::invalid_argument("unknown IMEX tableau '" + name + "' (expected cfn64, ark436 or ark324)");
}

std::vector<double> imex_scalar_errors(const ImexTableau& tab, double lamE, double lamI, double T,
                                       const std::vector<int>& steps) {
  std::vector<double> errs;
  const int s = tab.stages();
  for (int n : steps) {
    const double tau = T / n;
    double u = 1.0;
    std::vector<double> FE(s), FI(s);
    for (int step = 0; step < n; ++step) {
      for (int i = 0; i < s; ++i) {
        double r = u;
        for (int j = 0; j < i; ++j) r += tau * (tab.AE(i, j) * FE[j] + tab.AI(i, j) * FI[j]);
        double U = r / (1.0 - tau * tab.AI(i, i) * lamI);
        FE[i] = lamE * U;
        FI[i] = lamI * U;
      }
      for (int j = 0; j < s; ++j) u += tau * (tab.bE[j] * FE[j] + tab.bI[j] * FI[j]);
    }
    errs.push_back(std::abs(u - std::exp((lamE + lamI) * T)));
  }
  return errs;
}

double imex_min_observed_order(const ImexTableau& tab) {
  const std::vector<int> steps = {20, 40, 80, 160, 320};
  auto e = imex_scalar_errors(tab, -1.0, -2.0, 1.0, steps);
  double worst = 1e9;
  for (size_t i = 1; i < e.size(); ++i) worst = std::min(worst, std::log2(e[i - 1] / e[i]));
  return worst;
}

Snapshot sample_field(const DGField& u, double t, int per_elem) {
  const Mesh& m = u.space->mesh;
  Snapshot s;
  s.t = t;
  for (int e = 0; e < m.n_phys; ++e)
    for (int i = 0; i < per_elem; ++i) {
      double x = m.xl(e) + m.width(e) * i / (per_elem - 1);
      s.x.push_back(x);
      s.u.push_back(u.eval_in(e, x));
    }
  return s;
}

std::string snapshots_csv(const std::vector<Snapshot>& snaps) {
  std::ostringstream os;
  os << "t,x,u\n";
  for (const auto& s : snaps)
    for (size_t i = 0; i < s.x.size(); ++i)
      os << format_sig(s.t, 10) << ',' << format_sig(s.x[i], 12) << ',' << format_sig(s.u[i], 12) << '\n';
  return os.str();
}

ImexResult imex_evolve(const ProblemSpec& problem, int N, int k, const PenaltyVariant& variant,
                       const KernelSpec& ks, const ImexOptions& opt) {
  if (!problem.time_dependent) throw std::invalid_argument("imex_evolve: problem is steady");
  const ImexTableau tab = imex_tableau(opt.tableau);
  if (opt.strict && imex_min_observed_order(tab) < tab.order - 0.2)
    throw std::runtime_error("IMEX tableau '" + tab.name + "' failed its order self-test");

  Mesh mesh = build_mesh(problem.a, problem.b, N, ks.delta, problem.bc);
  SpacePtr V = make_space(mesh, k);
  const FluxFunction F = *problem.flux;
  const FluxKind fk = opt.flux.value_or(F.linear ? FluxKind::upwind : FluxKind::lax_friedrichs);
  const double sigma = opt.sigma.value_or(problem.sigma);
  const double cfl = opt.cfl > 0.0 ? opt.cfl : 0.3 / (2 * k + 1);
  const double tau0 = cfl * mesh.h;
  const bool sym = variant.tag == Scheme::nIP;
  const int n = V->n_dof();

  SpMat B(n, n);
  if (sigma != 0.0) {
    FormSet forms = assemble_forms(V, ks);
    B = sigma * compose_scheme(forms, variant, mesh.h);
  }
  SpMat I(n, n);
  I.setIdentity();

  Vec load0;
  std::function<Vec(double)> source;
  if (problem.make_source) {
    auto src = problem.make_source(ks, sigma);
    if (problem.source_exp_decay) {
      load0 = assemble_load(*V, [&](double x) { return src(x, 0.0); });
      source = [&load0](double t) { return Vec(std::exp(-t) * load0); };
    } else {
      source = [V, src](double t) { return assemble_load(*V, [&](double x) { return src(x, t); }); };
    }
  }

  std::map<double, std::unique_ptr<StageSolver>> solvers;
  auto solver_for = [&](double ta) -> const StageSolver& {
    auto it = solvers.find(ta);
    if (it == solvers.end()) {
      SpMat K = I + ta * B;
      it = solvers.emplace(ta, std::make_unique<StageSolver>(K, sym)).first;
    }
    return *it->second;
  };

  ImexResult res;
  res.tau = tau0;
  DGField u = project(V, problem.initial);
  std::vector<double> stops = opt.snapshot_times;
  std::sort(stops.begin(), stops.end());
  stops.erase(std::remove_if(stops.begin(), stops.end(), [&](double t) { return t < 0 || t > problem.final_time; }),
              stops.end());
  std::vector<double> targets = stops;
  if (targets.empty() || targets.back() < problem.final_time) targets.push_back(problem.final_time);

  const int s = tab.stages();
  std::vector<Vec> FE(s), FI(s);
  double t = 0.0;
  size_t snap_i = 0;
  auto take_snaps = [&] {
    while (snap_i < stops.size() && std::abs(stops[snap_i] - t) <= 1e-9 * std::max(1.0, t))
      res.snapshots.push_back(sample_field(u, stops[snap_i++], 8));
  };
  take_snaps();
  for (double target : targets) {
    while (target - t > 1e-12 * std::max(1.0, target)) {
      double tau = tau0;
      // shorten the step that would overshoot; avoid a sliver step
      if (t + tau >= target - 1e-10 * tau0) tau = target - t;
      for (int i = 0; i < s; ++i) {
        Vec r = u.coeffs;
        for (int j = 0; j < i; ++j) {
          if (tab.AE(i, j) != 0.0) r += tau * tab.AE(i, j) * FE[j];
          if (tab.AI(i, j) != 0.0 && sigma != 0.0) r += tau * tab.AI(i, j) * FI[j];
        }
        Vec U = (tab.AI(i, i) != 0.0 && sigma != 0.0) ? solver_for(tau * tab.AI(i, i)).solve(r) : r;
        FE[i] = -convection_residual(DGField(V, U), fk, F);
        if (source) FE[i] += source(t + tab.c[i] * tau);
        if (sigma != 0.0) FI[i] = -(B * U);
        else FI[i] = Vec::Zero(n);
      }
      for (int j = 0; j < s; ++j) {
        if (tab.bE[j] != 0.0) u.coeffs += tau * tab.bE[j] * FE[j];
        if (tab.bI[j] != 0.0) u.coeffs += tau * tab.bI[j] * FI[j];
      }
      t = (std::abs(t + tau - target) <= 1e-12 * std::max(1.0, target)) ? target : t + tau;
      ++res.steps;
      if (!u.coeffs.allFinite()) throw std::runtime_error("imex_evolve: solution blew up");
    }
    t = target;
    take_snaps();
  }
  res.u = u;
  return res;
}

DGField imex_evolve(const ProblemSpec& problem, int N, int k, const PenaltyVariant& variant, const KernelSpec& ks,
                    double cfl) {
  ImexOptions opt;
  opt.cfl = cfl;
  return imex_evolve(problem, N, k, variant, ks, opt).u;
}

double l2_difference(const DGField& a, const DGField& b, double lo, double hi) {
  const Mesh& ma = a.space->mesh;
  const Mesh& mb = b.space->mesh;
  std::vector<double> pts = {lo, hi};
  for (const Mesh* m : {&ma, &mb})
    for (int e = 0; e <= m->n_phys; ++e) {
      double x = m->interface_x(e);
      if (x > lo && x < hi) pts.push_back(x);
    }
  std::sort(pts.begin(), pts.end());
  const int nq = std::max(a.space->k, b.space->k) + 2;
  const GaussRule& g = gauss_legendre(nq);
  double acc = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const double x0 = pts[i], x1 = pts[i + 1];
    if (x1 - x0 <= 1e-13 * (hi - lo)) continue;
    const double mid = 0.5 * (x0 + x1), r = 0.5 * (x1 - x0);
    const int ea = ma.locate(mid, Side::right), eb = mb.locate(mid, Side::right);
    for (int q = 0; q < nq; ++q) {
      double x = mid + r * g.x[q];
      double va = ea >= 0 ? a.eval_in(ea, x) : 0.0;
      double vb = eb >= 0 ? b.eval_in(eb, x) : 0.0;
      acc += r * g.w[q] * (va - vb) * (va - vb);
    }
  }
  return std::sqrt(acc);
}

}  // namespace nldg
