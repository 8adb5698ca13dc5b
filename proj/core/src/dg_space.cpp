#include "nldg/dg_space.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nldg/quadrature.hpp"

namespace nldg {

DGSpace::DGSpace(Mesh m, int degree) : mesh(std::move(m)), k(degree) {
  if (k < 1) throw std::invalid_argument("DGSpace: degree must be >= 1");
  if (k > 12) throw std::invalid_argument("DGSpace: degree too large");
}

double DGSpace::ref_coord(int e, double x) const {
  return 2.0 * (x - mesh.xl(e)) / mesh.width(e) - 1.0;
}

void DGSpace::basis(int e, double x, double* out) const {
  const double he = mesh.width(e);
  legendre(ref_coord(e, x), k, std::span<double>(out, k + 1));
  for (int i = 0; i <= k; ++i) out[i] *= std::sqrt((2.0 * i + 1.0) / he);
}

void DGSpace::basis_deriv(int e, double x, double* out) const {
  const double he = mesh.width(e);
  legendre_deriv(ref_coord(e, x), k, std::span<double>(out, k + 1));
  for (int i = 0; i <= k; ++i) out[i] *= std::sqrt((2.0 * i + 1.0) / he) * 2.0 / he;
}

SpacePtr make_space(const Mesh& mesh, int k) { return std::make_shared<const DGSpace>(mesh, k); }

double DGField::eval_in(int e, double x) const {
  double phi[16];
  space->basis(e, x, phi);
  double v = 0.0;
  for (int i = 0; i <= space->k; ++i) v += coeffs[space->dof(e, i)] * phi[i];
  return v;
}

DGField project(SpacePtr space, const ScalarFn& f, int extra_points) {
  DGField u(space);
  const int nq = space->k + extra_points;
  const GaussRule& g = gauss_legendre(nq);
  const Mesh& m = space->mesh;
  double phi[16];
  for (int e = 0; e < m.n_phys; ++e) {
    const double c = 0.5 * (m.xl(e) + m.xr(e)), r = 0.5 * m.width(e);
    for (int q = 0; q < nq; ++q) {
      double x = c + r * g.x[q];
      double fx = f(x);
      space->basis(e, x, phi);
      for (int i = 0; i <= space->k; ++i) u.coeffs[space->dof(e, i)] += r * g.w[q] * fx * phi[i];
    }
  }
  return u;
}

double eval_field(const DGField& u, double x, Side side) {
  const Mesh& m = u.space->mesh;
  int e = m.locate(x, side);
  if (e < 0) return 0.0;
  double xe = m.periodic() ? m.wrap(x) : x;
  // the left limit at a wrapped-to-a point sits at the right end of the last cell
  if (m.periodic() && e == m.n_phys - 1 && xe < m.xl(e)) xe += m.length();
  return u.eval_in(e, xe);
}

Vec jump_row(const DGSpace& space, int i) {
  Vec row = Vec::Zero(space.n_dof());
  auto [l, r] = space.mesh.interface_elems(i);
  double phi[16];
  if (r >= 0) {
    space.basis(r, space.mesh.xl(r), phi);
    for (int a = 0; a <= space.k; ++a) row[space.dof(r, a)] += phi[a];
  }
  if (l >= 0) {
    space.basis(l, space.mesh.xr(l), phi);
    for (int a = 0; a <= space.k; ++a) row[space.dof(l, a)] -= phi[a];
  }
  return row;
}

double jump(const DGField& u, int i) {
  const Mesh& m = u.space->mesh;
  if (i < 0 || i >= m.n_interfaces()) throw std::out_of_range("jump: bad interface index");
  auto [l, r] = m.interface_elems(i);
  double right = r >= 0 ? u.eval_in(r, m.xl(r)) : 0.0;
  double left = l >= 0 ? u.eval_in(l, m.xr(l)) : 0.0;
  return right - left;
}

SpMat mass_matrix(const DGSpace& space) {
  // orthonormal basis: identity
  SpMat M(space.n_dof(), space.n_dof());
  M.setIdentity();
  return M;
}

}  // namespace nldg
