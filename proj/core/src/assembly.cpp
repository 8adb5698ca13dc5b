#include "nldg/assembly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "nldg/quadrature.hpp"

namespace nldg {

Scheme parse_scheme(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "nip" || t == "ip") return Scheme::nIP;
  if (t == "nnipg" || t == "nipg") return Scheme::nNIPG;
  if (t == "nbz" || t == "bz") return Scheme::nBZ;
  throw std::invalid_argument("unknown scheme '" + s + "' (expected nip, nnipg or nbz)");
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::nBZ: return "nbz";
    case Scheme::nIP: return "nip";
    case Scheme::nNIPG: return "nnipg";
  }
  return "?";
}

double PenaltyVariant::mu_value(double h) const { return c * std::pow(h, -exponent); }

PenaltyVariant PenaltyVariant::make(Scheme s, int k, double c) {
  switch (s) {
    case Scheme::nBZ: return nbz(k, c);
    case Scheme::nIP: return nip(c);
    case Scheme::nNIPG: return nnipg(c);
  }
  throw std::logic_error("bad scheme");
}

MomentRule make_moment_rule(const KernelSpec& ks, double hhat, int pmin, int pmax, int shift,
                            int oversample) {
  const int n = pmax - pmin + 1;
  if (n < 1) throw std::invalid_argument("make_moment_rule: empty power range");
  const int M = n * std::max(1, oversample);
  Eigen::MatrixXd V(M, n);
  MomentRule r;
  r.s.resize(M);
  for (int m = 0; m < M; ++m) {
    double t = 0.5 * (1.0 - std::cos(std::numbers::pi * (m + 0.5) / M));
    r.s[m] = hhat * t;
    for (int i = 0; i < n; ++i) V(m, i) = std::pow(t, pmin + i);
  }
  Eigen::VectorXd mu(n);
  for (int i = 0; i < n; ++i) {
    int p = pmin + i;
    mu[i] = partial_moment(ks, p + shift, 0.0, hhat) / std::pow(hhat, p);
  }
  // coefficients d = V^+ F, integral = mu . d = (V^+^T mu) . F
  Eigen::VectorXd w = V.completeOrthogonalDecomposition().pseudoInverse().transpose() * mu;
  r.w.assign(w.data(), w.data() + M);
  return r;
}

namespace {

// (row element, col element) -> dense (k+1)x(k+1) block, row-major.
class BlockAccumulator {
 public:
  explicit BlockAccumulator(int nl) : nl_(nl) {}
  double* block(int re, int ce) {
    auto& b = blocks_[{re, ce}];
    if (b.empty()) b.assign(nl_ * nl_, 0.0);
    return b.data();
  }
  SpMat to_sparse(int n) const {
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(blocks_.size() * nl_ * nl_);
    for (const auto& [key, b] : blocks_)
      for (int i = 0; i < nl_; ++i)
        for (int j = 0; j < nl_; ++j)
          if (b[i * nl_ + j] != 0.0) t.emplace_back(key.first * nl_ + i, key.second * nl_ + j, b[i * nl_ + j]);
    SpMat A(n, n);
    A.setFromTriplets(t.begin(), t.end());
    return A;
  }

 private:
  int nl_;
  std::map<std::pair<int, int>, std::vector<double>> blocks_;
};

// Interface-local data: dofs from the left element first, then the right.
struct IfaceLocal {
  int elem[2] = {-1, -1};
  double xl_end = 0.0, xr_start = 0.0;  // x_i seen from the left / right element
  double hleft = 0.0;
};

IfaceLocal iface_local(const Mesh& m, int i) {
  IfaceLocal f;
  auto [l, r] = m.interface_elems(i);
  f.elem[0] = l;
  f.elem[1] = r;
  if (m.periodic()) {
    f.xl_end = m.xr(l);
    f.xr_start = m.xl(r);
    f.hleft = m.width(l);
  } else {
    f.xl_end = m.interface_x(i);
    f.xr_start = m.interface_x(i);
    f.hleft = m.width(i - 1);  // ghost widths are stored too
  }
  return f;
}

// g values of every interface-local basis function at offset t in (0, s):
// x = x_i - t (left element), x + s = x_i + s - t (right element).
void iface_g(const DGSpace& V, const IfaceLocal& f, double s, double t, double* g) {
  const int nl = V.n_local();
  double a[16], b[16];
  if (f.elem[0] >= 0) {
    V.basis(f.elem[0], f.xl_end - t, a);
    V.basis(f.elem[0], f.xl_end, b);
    for (int i = 0; i < nl; ++i) g[i] = -(a[i] - b[i]);
  } else {
    for (int i = 0; i < nl; ++i) g[i] = 0.0;
  }
  if (f.elem[1] >= 0) {
    V.basis(f.elem[1], f.xr_start + s - t, a);
    V.basis(f.elem[1], f.xr_start, b);
    for (int i = 0; i < nl; ++i) g[nl + i] = a[i] - b[i];
  } else {
    for (int i = 0; i < nl; ++i) g[nl + i] = 0.0;
  }
}

// Add c * u w^T into the interface-local 2nl x 2nl product, routed to blocks.
void add_iface_outer(BlockAccumulator& acc, const IfaceLocal& f, int nl, const double* u, const double* w,
                     double c) {
  for (int A = 0; A < 2; ++A) {
    if (f.elem[A] < 0) continue;
    for (int B = 0; B < 2; ++B) {
      if (f.elem[B] < 0) continue;
      double* blk = acc.block(f.elem[A], f.elem[B]);
      for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) blk[i * nl + j] += c * u[A * nl + i] * w[B * nl + j];
    }
  }
}

// Unwrapped element index: [lo, hi) bounds of element pp, base physical index.
struct ElemView {
  int base;
  double lo, hi, shift;
};

ElemView elem_view(const Mesh& m, int pp) {
  if (!m.periodic()) return {pp, m.xl(pp), m.xr(pp), 0.0};
  const int N = m.n_phys;
  int base = ((pp % N) + N) % N;
  double shift = static_cast<double>((pp - base) / N) * m.length();
  return {base, m.xl(base) + shift, m.xr(base) + shift, shift};
}

// Unwrapped index of the element containing x (right-continuous).
int find_elem(const Mesh& m, double x) {
  if (!m.periodic()) {
    auto it = std::upper_bound(m.nodes.begin(), m.nodes.end(), x);
    return static_cast<int>(it - m.nodes.begin()) - 1 - m.m_ghost;
  }
  const double L = m.length();
  double k = std::floor((x - m.a) / L);
  double xw = x - k * L;
  auto first = m.nodes.begin();
  int e = static_cast<int>(std::upper_bound(first, first + m.n_phys + 1, xw) - first) - 1;
  e = std::clamp(e, 0, m.n_phys - 1);
  return e + static_cast<int>(k) * m.n_phys;
}

}  // namespace

FormSet assemble_forms(SpacePtr space, const KernelSpec& ks, const AssemblyOptions& opt) {
  const DGSpace& V = *space;
  const Mesh& m = V.mesh;
  if (std::abs(m.delta - ks.delta) > 1e-12 * ks.delta)
    throw std::invalid_argument("assemble_forms: mesh and kernel disagree on delta");
  if (!(ks.alpha < 3.0)) throw std::invalid_argument("assemble_forms: alpha must be < 3");

  const int k = V.k, nl = V.n_local(), N = m.n_phys, n = V.n_dof();
  const double hhat = m.hhat;
  const GaussRule& gx = gauss_legendre(k + 1);

  BlockAccumulator accE(nl), accSemi(nl), accJs(nl), accJk(nl), accP(nl);

  // Near field, same-element part.
  {
    MomentRule R = make_moment_rule(ks, hhat, 2, 2 * k + 1, 0, opt.oversample);
    double pa[16], pb[16], d[16];
    for (int e = 0; e < N; ++e) {
      double* blk = accE.block(e, e);
      for (size_t q = 0; q < R.s.size(); ++q) {
        const double s = R.s[q];
        const double lo = m.xl(e), hi = m.xr(e) - s;
        const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
        for (int g = 0; g < gx.size(); ++g) {
          double x = c + r * gx.x[g];
          V.basis(e, x + s, pa);
          V.basis(e, x, pb);
          for (int i = 0; i < nl; ++i) d[i] = pa[i] - pb[i];
          double wq = 2.0 * R.w[q] * r * gx.w[g];
          for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nl; ++j) blk[i * nl + j] += wq * d[i] * d[j];
        }
      }
    }
  }

  // Near field, interface parts: E (jump-corrected), J seminorm, and K.
  {
    MomentRule RE = make_moment_rule(ks, hhat, 3, 2 * k + 1, 0, opt.oversample);
    MomentRule RS = make_moment_rule(ks, hhat, 3, 2 * k + 1, -1, opt.oversample);
    MomentRule RK = make_moment_rule(ks, hhat, 2, k + 1, 0, opt.oversample);
    // Penalty weight integrates s^2 gamma over the symmetric window (-hhat, hhat).
    const double p2 = 2.0 * partial_moment(ks, 2, 0.0, hhat);
    double g[32], kappa[32], ell[32];
    for (int i = 0; i < m.n_interfaces(); ++i) {
      IfaceLocal f = iface_local(m, i);
      if (f.elem[0] < 0 && f.elem[1] < 0) continue;

      auto quad_gg = [&](const MomentRule& R, BlockAccumulator& acc, double factor) {
        for (size_t q = 0; q < R.s.size(); ++q) {
          const double s = R.s[q];
          for (int gq = 0; gq < gx.size(); ++gq) {
            double t = 0.5 * s * (1.0 + gx.x[gq]);
            iface_g(V, f, s, t, g);
            add_iface_outer(acc, f, nl, g, g, factor * R.w[q] * 0.5 * s * gx.w[gq]);
          }
        }
      };
      quad_gg(RE, accE, 2.0);
      quad_gg(RS, accSemi, 2.0 * f.hleft);

      for (int a = 0; a < 2 * nl; ++a) kappa[a] = 0.0;
      for (size_t q = 0; q < RK.s.size(); ++q) {
        const double s = RK.s[q];
        for (int gq = 0; gq < gx.size(); ++gq) {
          double t = 0.5 * s * (1.0 + gx.x[gq]);
          iface_g(V, f, s, t, g);
          for (int a = 0; a < 2 * nl; ++a) kappa[a] += RK.w[q] * 0.5 * s * gx.w[gq] * g[a];
        }
      }

      double tr[16];
      for (int a = 0; a < 2 * nl; ++a) ell[a] = 0.0;
      if (f.elem[0] >= 0) {
        V.basis(f.elem[0], f.xl_end, tr);
        for (int a = 0; a < nl; ++a) ell[a] = -tr[a];
      }
      if (f.elem[1] >= 0) {
        V.basis(f.elem[1], f.xr_start, tr);
        for (int a = 0; a < nl; ++a) ell[nl + a] = tr[a];
      }
      // row = test v, col = trial u: [[v]] K(u) -> ell kappa^T
      add_iface_outer(accJs, f, nl, ell, kappa, 2.0);
      add_iface_outer(accJs, f, nl, kappa, ell, 2.0);
      add_iface_outer(accJk, f, nl, ell, kappa, 2.0);
      add_iface_outer(accJk, f, nl, kappa, ell, -2.0);
      add_iface_outer(accP, f, nl, ell, ell, p2);
    }
  }

  // Far field: per s-node, 2 w gamma (2M - C - C^T).
  double diag = 0.0;
  {
    std::vector<double> bp = far_field_breakpoints(m, ks.delta);
    const GaussRule& gs = gauss_legendre(opt.far_points);
    double pa[16], pb[16], C[256];
    for (size_t ib = 0; ib + 1 < bp.size(); ++ib) {
      const double s0 = bp[ib], s1 = bp[ib + 1];
      const double sc = 0.5 * (s0 + s1), sr = 0.5 * (s1 - s0);
      for (int qs = 0; qs < gs.size(); ++qs) {
        const double s = sc + sr * gs.x[qs];
        const double wg = sr * gs.w[qs] * kernel_eval(ks, s);
        diag += 4.0 * wg;
        for (int qe = 0; qe < N; ++qe) {
          const double lo_q = m.xl(qe), hi_q = m.xr(qe);
          for (int pp = find_elem(m, lo_q + s);; ++pp) {
            if (!m.periodic() && pp >= N) break;
            ElemView ev = elem_view(m, pp);
            if (ev.lo - s >= hi_q) break;
            if (!m.periodic() && pp < 0) continue;
            const double lo = std::max(lo_q, ev.lo - s), hi = std::min(hi_q, ev.hi - s);
            if (hi - lo <= 1e-14 * m.h) continue;
            const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
            std::fill(C, C + nl * nl, 0.0);
            for (int g = 0; g < gx.size(); ++g) {
              double x = c + r * gx.x[g];
              V.basis(ev.base, x + s - ev.shift, pa);
              V.basis(qe, x, pb);
              for (int b = 0; b < nl; ++b)
                for (int a = 0; a < nl; ++a) C[b * nl + a] += r * gx.w[g] * pb[b] * pa[a];
            }
            double* bqp = accE.block(qe, ev.base);
            for (int b = 0; b < nl; ++b)
              for (int a = 0; a < nl; ++a) bqp[b * nl + a] -= 2.0 * wg * C[b * nl + a];
            double* bpq = accE.block(ev.base, qe);
            for (int a = 0; a < nl; ++a)
              for (int b = 0; b < nl; ++b) bpq[a * nl + b] -= 2.0 * wg * C[b * nl + a];
          }
        }
      }
    }
  }

  FormSet fs;
  fs.kernel = ks;
  fs.space = space;
  fs.E = accE.to_sparse(n);
  if (diag != 0.0) {
    SpMat D(n, n);
    D.setIdentity();
    fs.E += diag * D;
  }
  fs.Jsemi = accSemi.to_sparse(n);
  fs.Jsym = accJs.to_sparse(n);
  fs.Jskew = accJk.to_sparse(n);
  fs.P = accP.to_sparse(n);
  return fs;
}

SpMat compose_scheme(const FormSet& forms, const PenaltyVariant& variant, double h) {
  const double mu = variant.mu_value(h);
  SpMat B = forms.E + mu * forms.P;
  if (variant.tag == Scheme::nIP) B += forms.Jsym;
  if (variant.tag == Scheme::nNIPG) B += forms.Jskew;
  B.makeCompressed();
  return B;
}

Vec assemble_load(const DGSpace& V, const ScalarFn& f, int extra_points) {
  const Mesh& m = V.mesh;
  const int nq = V.k + extra_points;
  const GaussRule& g = gauss_legendre(nq);
  Vec F = Vec::Zero(V.n_dof());
  double phi[16];
  for (int e = 0; e < m.n_phys; ++e) {
    const double c = 0.5 * (m.xl(e) + m.xr(e)), r = 0.5 * m.width(e);
    for (int q = 0; q < nq; ++q) {
      double x = c + r * g.x[q];
      double fx = f(x);
      V.basis(e, x, phi);
      for (int i = 0; i <= V.k; ++i) F[V.dof(e, i)] += r * g.w[q] * fx * phi[i];
    }
  }
  return F;
}

}  // namespace nldg
