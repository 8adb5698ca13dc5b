#include "nldg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nldg {

bool Mesh::uniform() const {
  return rho >= h * (1.0 - 1e-12);
}

std::pair<int, int> Mesh::interface_elems(int i) const {
  if (periodic()) return {(i - 1 + n_phys) % n_phys, i};
  int l = i - 1, r = i;
  return {l >= 0 ? l : -1, r < n_phys ? r : -1};
}

double Mesh::wrap(double x) const {
  double L = length();
  double y = std::fmod(x - a, L);
  if (y < 0) y += L;
  return a + y;
}

int Mesh::locate(double x, Side side) const {
  if (periodic()) {
    x = wrap(x);
    // x == a from the left belongs to the last element
    if (x == a && side == Side::left) return n_phys - 1;
  } else {
    if (x < a || x > b) return -1;
    if (x == a && side == Side::left) return -1;
    if (x == b && side == Side::right) return -1;
  }
  auto first = nodes.begin() + m_ghost, last = first + n_phys + 1;
  auto it = side == Side::right ? std::upper_bound(first, last, x)
                                : std::lower_bound(first, last, x);
  int e = static_cast<int>(it - first) - 1;
  return std::clamp(e, 0, n_phys - 1);
}

Mesh build_mesh(double a, double b, int N, double delta, BcMode bc) {
  if (N <= 1) throw std::invalid_argument("build_mesh: need N >= 2");
  if (!(delta > 0.0)) throw std::invalid_argument("build_mesh: delta must be positive");
  if (!(b > a)) throw std::invalid_argument("build_mesh: need b > a");
  Mesh m;
  m.a = a;
  m.b = b;
  m.delta = delta;
  m.n_phys = N;
  m.bc = bc;
  const double h = (b - a) / N;
  m.m_ghost = bc == BcMode::periodic ? 0 : static_cast<int>(std::ceil(delta / h - 1e-10));
  const int mg = m.m_ghost;
  m.nodes.resize(N + 2 * mg + 1);
  for (int i = -mg; i <= N + mg; ++i) m.nodes[i + mg] = a + i * h;
  m.nodes[mg] = a;
  m.nodes[mg + N] = b;
  double hmax = 0.0, hmin = 1e300;
  for (size_t i = 0; i + 1 < m.nodes.size(); ++i) {
    double w = m.nodes[i + 1] - m.nodes[i];
    hmax = std::max(hmax, w);
    hmin = std::min(hmin, w);
  }
  m.h = hmax;
  m.rho = hmin;
  m.nu = hmin / hmax;
  m.hhat = std::min(m.rho, delta);
  return m;
}

std::vector<double> far_field_breakpoints(const Mesh& mesh, double delta) {
  std::vector<double> pts;
  const double lo = mesh.hhat;
  if (!(delta > lo)) return pts;
  const double tol = 1e-10 * mesh.h;
  pts.push_back(lo);
  if (mesh.uniform()) {
    for (int l = 1; l * mesh.h < delta + tol; ++l) pts.push_back(l * mesh.h);
  } else {
    const auto& x = mesh.nodes;
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = i + 1; j < x.size() && x[j] - x[i] < delta + tol; ++j) pts.push_back(x[j] - x[i]);
    if (mesh.periodic()) {
      // differences across the wrap
      const double L = mesh.length();
      for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) {
          double d = x[j] + L - x[i];
          if (d < delta + tol) pts.push_back(d);
        }
    }
  }
  pts.push_back(delta);
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double p : pts) {
    if (p < lo - tol || p > delta + tol) continue;
    p = std::clamp(p, lo, delta);
    if (!out.empty() && p - out.back() <= tol) {
      // keep the exact endpoints when a grid point coincides with them
      if (p == delta || p == lo) out.back() = p;
      continue;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace nldg
