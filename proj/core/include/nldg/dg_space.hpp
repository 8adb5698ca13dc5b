#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <functional>
#include <memory>

#include "nldg/mesh.hpp"

namespace nldg {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;
using ScalarFn = std::function<double(double)>;

// Orthonormal Legendre basis on each physical element:
// phi_i = sqrt((2i+1)/h_e) P_i(xi). Ghost elements carry no dofs.
struct DGSpace {
  Mesh mesh;
  int k = 1;

  DGSpace(Mesh m, int degree);

  int n_local() const { return k + 1; }
  int n_elems() const { return mesh.n_phys; }
  int n_dof() const { return (k + 1) * mesh.n_phys; }
  int dof(int e, int i) const { return e * (k + 1) + i; }

  // All k+1 basis values of element e at x (x need not lie inside e).
  void basis(int e, double x, double* out) const;
  void basis_deriv(int e, double x, double* out) const;
  double ref_coord(int e, double x) const;
};

using SpacePtr = std::shared_ptr<const DGSpace>;

SpacePtr make_space(const Mesh& mesh, int k);

struct DGField {
  SpacePtr space;
  Vec coeffs;

  DGField() = default;
  DGField(SpacePtr s) : space(std::move(s)), coeffs(Vec::Zero(space->n_dof())) {}
  DGField(SpacePtr s, Vec c) : space(std::move(s)), coeffs(std::move(c)) {}

  // Value on element e at x using the element polynomial.
  double eval_in(int e, double x) const;
};

// Element-wise L2 projection with k+3 Gauss points per element.
DGField project(SpacePtr space, const ScalarFn& f, int extra_points = 3);

double eval_field(const DGField& u, double x, Side side);

// [[u]] = u(x+) - u(x-) at interface i (see Mesh::n_interfaces).
double jump(const DGField& u, int i);

// Coefficient row of the jump functional at interface i: jump(u, i) = row . u.
Vec jump_row(const DGSpace& space, int i);

SpMat mass_matrix(const DGSpace& space);

}  // namespace nldg
