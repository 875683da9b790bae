#include "qph/fem1d.hpp"

#include <algorithm>
#include <cmath>

namespace qph {

namespace {
// 2-point Gauss-Legendre on [0,1].
constexpr double kGaussNode0 = 0.21132486540518713;
constexpr double kGaussNode1 = 0.7886751345948129;
}  // namespace

SegmentMesh SegmentMesh::uniform(double x0, double x1, int node_count) {
  if (node_count < 2) throw ValidationError("mesh needs at least 2 nodes");
  SegmentMesh m;
  m.nodes.resize(node_count);
  const double h = (x1 - x0) / (node_count - 1);
  for (int i = 0; i < node_count; ++i) m.nodes[i] = x0 + h * i;
  m.nodes.front() = x0;
  m.nodes.back() = x1;
  return m;
}

Tridiag assemble_helmholtz(const SegmentMesh& mesh, const CoefFn& coef,
                           cplx omega2_complex) {
  const int n = mesh.size();
  Tridiag t;
  t.dl.assign(n - 1, cplx(0));
  t.du.assign(n - 1, cplx(0));
  t.d.assign(n, cplx(0));
  for (int e = 0; e + 1 < n; ++e) {
    const double x0 = mesh.nodes[e], x1 = mesh.nodes[e + 1];
    const double h = x1 - x0;
    double k_e = 0.0;        // int mu over the element
    double m00 = 0.0, m01 = 0.0, m11 = 0.0;  // int rho * phi_i phi_j
    for (double g : {kGaussNode0, kGaussNode1}) {
      const double x = x0 + g * h;
      double mu, rho;
      coef(x, mu, rho);
      const double w = 0.5 * h;
      k_e += w * mu;
      const double p0 = 1.0 - g, p1 = g;
      m00 += w * rho * p0 * p0;
      m01 += w * rho * p0 * p1;
      m11 += w * rho * p1 * p1;
    }
    const double stiff = k_e / (h * h);
    t.d[e] += stiff - omega2_complex * m00;
    t.d[e + 1] += stiff - omega2_complex * m11;
    t.du[e] += -stiff - omega2_complex * m01;
    t.dl[e] += -stiff - omega2_complex * m01;
  }
  return t;
}

std::vector<cplx> assemble_load(const SegmentMesh& mesh,
                                const std::function<double(double)>& f) {
  const int n = mesh.size();
  std::vector<cplx> b(n, cplx(0));
  for (int e = 0; e + 1 < n; ++e) {
    const double x0 = mesh.nodes[e], x1 = mesh.nodes[e + 1];
    const double h = x1 - x0;
    for (double g : {kGaussNode0, kGaussNode1}) {
      const double x = x0 + g * h;
      const double w = 0.5 * h * f(x);
      b[e] += w * (1.0 - g);
      b[e + 1] += w * g;
    }
  }
  return b;
}

double weighted_l2_sq(const SegmentMesh& mesh, const std::vector<cplx>& u,
                      const std::function<double(double)>& w) {
  double acc = 0.0;
  for (int e = 0; e + 1 < mesh.size(); ++e) {
    const double x0 = mesh.nodes[e], x1 = mesh.nodes[e + 1];
    const double h = x1 - x0;
    for (double g : {kGaussNode0, kGaussNode1}) {
      const double x = x0 + g * h;
      const cplx val = (1.0 - g) * u[e] + g * u[e + 1];
      acc += 0.5 * h * w(x) * std::norm(val);
    }
  }
  return acc;
}

double l2_norm_sq(const SegmentMesh& mesh, const std::vector<cplx>& u) {
  double acc = 0.0;
  for (int e = 0; e + 1 < mesh.size(); ++e) {
    const double h = mesh.nodes[e + 1] - mesh.nodes[e];
    const cplx a = u[e], b = u[e + 1];
    acc += h / 3.0 * (std::norm(a) + (a * std::conj(b)).real() + std::norm(b));
  }
  return acc;
}

double h1_norm_sq(const SegmentMesh& mesh, const std::vector<cplx>& u) {
  double acc = l2_norm_sq(mesh, u);
  for (int e = 0; e + 1 < mesh.size(); ++e) {
    const double h = mesh.nodes[e + 1] - mesh.nodes[e];
    acc += std::norm(u[e + 1] - u[e]) / h;
  }
  return acc;
}

double h1_error_sq(const SegmentMesh& mesh, const std::vector<cplx>& u,
                   const std::vector<cplx>& v) {
  std::vector<cplx> diff(u.size());
  for (size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - v[i];
  return h1_norm_sq(mesh, diff);
}

cplx p1_eval(const SegmentMesh& mesh, const std::vector<cplx>& u, double x) {
  const auto& nd = mesh.nodes;
  auto it = std::upper_bound(nd.begin(), nd.end(), x);
  int e = static_cast<int>(it - nd.begin()) - 1;
  e = std::clamp(e, 0, mesh.size() - 2);
  const double h = nd[e + 1] - nd[e];
  const double g = (x - nd[e]) / h;
  return (1.0 - g) * u[e] + g * u[e + 1];
}

}  // namespace qph
