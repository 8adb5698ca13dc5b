#pragma once

#include <utility>
#include <vector>

namespace nldg {

enum class BcMode { volume_constraint, periodic };
enum class Side { left, right };

// Elements are indexed e = -m .. N+m-1; 0..N-1 are physical. Element e spans
// [nodes[e+m], nodes[e+m+1]].
struct Mesh {
  double a = 0.0, b = 1.0;
  double delta = 0.0;
  int n_phys = 0;
  int m_ghost = 0;
  BcMode bc = BcMode::volume_constraint;
  std::vector<double> nodes;
  double h = 0.0;
  double rho = 0.0;
  double hhat = 0.0;
  double nu = 1.0;

  double xl(int e) const { return nodes[e + m_ghost]; }
  double xr(int e) const { return nodes[e + m_ghost + 1]; }
  double width(int e) const { return xr(e) - xl(e); }
  double length() const { return b - a; }
  bool periodic() const { return bc == BcMode::periodic; }
  bool uniform() const;

  // Interfaces carrying a jump: VC has N+1 (a and b included), periodic N.
  int n_interfaces() const { return periodic() ? n_phys : n_phys + 1; }
  double interface_x(int i) const { return nodes[i + m_ghost]; }
  // Physical element indices on either side of interface i; -1 marks a
  // ghost (pinned) neighbour.
  std::pair<int, int> interface_elems(int i) const;

  // Physical element holding the one-sided limit at x, or -1 when the limit
  // lives in the zero region. Periodic mode wraps x first.
  int locate(double x, Side side) const;
  double wrap(double x) const;
};

Mesh build_mesh(double a, double b, int N, double delta, BcMode bc);

// Points of (hhat, delta] where the element overlap pattern in s changes,
// with hhat and delta included. Empty when delta <= hhat.
std::vector<double> far_field_breakpoints(const Mesh& mesh, double delta);

}  // namespace nldg
