#ifndef QPH_FEM1D_HPP
#define QPH_FEM1D_HPP

#include <functional>
#include <vector>

#include "qph/types.hpp"

namespace qph {

struct SegmentMesh {
  std::vector<double> nodes;  // strictly increasing

  static SegmentMesh uniform(double x0, double x1, int node_count);
  int size() const { return static_cast<int>(nodes.size()); }
  double length() const { return nodes.back() - nodes.front(); }
};

// P1 assembly of  -(mu u')' - rho*(omega^2 + i eps) u  as complex
// tridiagonal bands, coefficients evaluated analytically at 2-point Gauss
// nodes per element.
struct Tridiag {
  std::vector<cplx> dl, d, du;  // sizes n-1, n, n-1
};

using CoefFn = std::function<void(double /*x*/, double& /*mu*/, double& /*rho*/)>;

Tridiag assemble_helmholtz(const SegmentMesh& mesh, const CoefFn& coef,
                           cplx omega2_complex);

// Load vector for a right-hand side f (elementwise 2-point Gauss).
std::vector<cplx> assemble_load(const SegmentMesh& mesh,
                                const std::function<double(double)>& f);

// Mass-weighted integral of |u|^2 with weight w, u piecewise linear.
double weighted_l2_sq(const SegmentMesh& mesh, const std::vector<cplx>& u,
                      const std::function<double(double)>& w);

// Plain Sobolev quantities of a P1 function.
double l2_norm_sq(const SegmentMesh& mesh, const std::vector<cplx>& u);
double h1_norm_sq(const SegmentMesh& mesh, const std::vector<cplx>& u);
double h1_error_sq(const SegmentMesh& mesh, const std::vector<cplx>& u,
                   const std::vector<cplx>& v);

// Linear interpolation of a P1 function at x inside the mesh.
cplx p1_eval(const SegmentMesh& mesh, const std::vector<cplx>& u, double x);

}  // namespace qph

#endif
