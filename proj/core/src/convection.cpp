#include "nldg/convection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nldg/quadrature.hpp"

namespace nldg {

FluxKind parse_flux_kind(const std::string& s) {
  if (s == "upwind") return FluxKind::upwind;
  if (s == "lf" || s == "lax_friedrichs" || s == "llf") return FluxKind::lax_friedrichs;
  if (s == "godunov") return FluxKind::godunov;
  throw std::invalid_argument("unknown flux '" + s + "' (expected upwind, lf or godunov)");
}

std::string to_string(FluxKind k) {
  switch (k) {
    case FluxKind::upwind: return "upwind";
    case FluxKind::lax_friedrichs: return "lf";
    case FluxKind::godunov: return "godunov";
  }
  return "?";
}

double numerical_flux(FluxKind kind, const FluxFunction& F, double uL, double uR) {
  switch (kind) {
    case FluxKind::upwind:
      if (!F.linear) throw std::invalid_argument("upwind flux needs a linear flux function");
      return F.df(0.0) >= 0.0 ? F.f(uL) : F.f(uR);
    case FluxKind::lax_friedrichs: {
      double lam = std::max(std::abs(F.df(uL)), std::abs(F.df(uR)));
      return 0.5 * (F.f(uL) + F.f(uR)) - 0.5 * lam * (uR - uL);
    }
    case FluxKind::godunov: {
      if (!F.convex) throw std::invalid_argument("godunov flux implemented for convex f only");
      if (F.linear) return F.df(0.0) >= 0.0 ? F.f(uL) : F.f(uR);
      if (uL <= uR) {
        if (F.sonic > uL && F.sonic < uR) return F.f(F.sonic);
        return std::min(F.f(uL), F.f(uR));
      }
      return std::max(F.f(uL), F.f(uR));
    }
  }
  throw std::logic_error("bad flux kind");
}

Vec convection_residual(const DGField& u, FluxKind kind, const FluxFunction& F) {
  const DGSpace& V = *u.space;
  const Mesh& m = V.mesh;
  const int nl = V.n_local();
  Vec R = Vec::Zero(V.n_dof());
  const GaussRule& g = gauss_legendre(V.k + 2);
  double phi[16], dphi[16];
  for (int e = 0; e < m.n_phys; ++e) {
    const double c = 0.5 * (m.xl(e) + m.xr(e)), r = 0.5 * m.width(e);
    for (int q = 0; q < g.size(); ++q) {
      double x = c + r * g.x[q];
      V.basis(e, x, phi);
      double uh = 0.0;
      for (int i = 0; i < nl; ++i) uh += u.coeffs[V.dof(e, i)] * phi[i];
      double fu = F.f(uh);
      V.basis_deriv(e, x, dphi);
      for (int i = 0; i < nl; ++i) R[V.dof(e, i)] -= r * g.w[q] * fu * dphi[i];
    }
  }
  for (int i = 0; i < m.n_interfaces(); ++i) {
    auto [l, rr] = m.interface_elems(i);
    double um = l >= 0 ? u.eval_in(l, m.xr(l)) : 0.0;
    double up = rr >= 0 ? u.eval_in(rr, m.xl(rr)) : 0.0;
    double fh = numerical_flux(kind, F, um, up);
    if (l >= 0) {
      V.basis(l, m.xr(l), phi);
      for (int a = 0; a < nl; ++a) R[V.dof(l, a)] += fh * phi[a];
    }
    if (rr >= 0) {
      V.basis(rr, m.xl(rr), phi);
      for (int a = 0; a < nl; ++a) R[V.dof(rr, a)] -= fh * phi[a];
    }
  }
  return R;
}

double cell_entropy_production(FluxKind kind, const FluxFunction& F, double uL, double uR) {
  if (uL == uR) return 0.0;
  const double fh = numerical_flux(kind, F, uL, uR);
  return integrate([&](double v) { return F.f(v) - fh; }, uL, uR, 10);
}

}  // namespace nldg
