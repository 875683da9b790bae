#include "qph/interior.hpp"

#include <algorithm>
#include <cmath>

#include "qph/lapack.hpp"

namespace qph {

namespace {

SegmentMesh interior_mesh(const MediumSpec& medium, double target_h) {
  std::vector<double> breaks = {medium.a_left, medium.a_right};
  for (const auto& p : medium.perturbation) {
    breaks.push_back(p.x_lo);
    breaks.push_back(p.x_hi);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](double a, double b) {
                             return std::abs(a - b) < 1e-14;
                           }),
               breaks.end());
  SegmentMesh mesh;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double len = breaks[i + 1] - breaks[i];
    const int cells = std::max(1, static_cast<int>(std::ceil(len / target_h)));
    for (int c = 0; c < cells; ++c)
      mesh.nodes.push_back(breaks[i] + len * c / cells);
  }
  mesh.nodes.push_back(breaks.back());
  return mesh;
}

}  // namespace

InteriorSolution solve_interior(const MediumSpec& medium, double omega,
                                double epsilon, cplx lambda_left,
                                cplx lambda_right, const SourceSpec& source,
                                double target_h) {
  const double z = medium.impedance.value(omega);
  for (cplx lam : {lambda_left, lambda_right}) {
    if (std::abs(lam + 1.0) <= 1e-10)
      throw NumericalError("RtR coefficient at the impedance pole; interior "
                           "boundary condition undefined");
  }
  const cplx dtn_l = dtn_from_rtr(lambda_left, z);
  const cplx dtn_r = dtn_from_rtr(lambda_right, z);

  InteriorSolution sol;
  sol.mesh = interior_mesh(medium, target_h);
  sol.omega = omega;
  sol.epsilon = epsilon;
  sol.z = z;
  const int n = sol.mesh.size();

  Tridiag t = assemble_helmholtz(
      sol.mesh,
      [&](double x, double& mu, double& rho) {
        effective_coefficient(medium, x, mu, rho);
      },
      cplx(omega * omega, epsilon));
  // natural boundary terms of the DtN form: + dtn * u * conj(v) at both ends
  t.d[0] += dtn_l;
  t.d[n - 1] += dtn_r;

  std::vector<cplx> rhs =
      assemble_load(sol.mesh, [&](double x) { return source.eval(x); });

  lapack::TFactor factor(std::move(t.dl), std::move(t.d), std::move(t.du));
  const double rcond = factor.rcond();
  if (rcond < 1e-14)
    throw NumericalError("interior system nearly singular; omega^2 may sit "
                         "at a discrete trapped mode");
  factor.solve(rhs);
  sol.values = std::move(rhs);
  sol.robin_out_left = (dtn_l - iu * z) * sol.values.front();
  sol.robin_out_right = (dtn_r - iu * z) * sol.values.back();
  return sol;
}

FieldSolution assemble_full(const InteriorSolution& interior,
                            const FundamentalPair& fund_left,
                            const FundamentalPair& fund_right,
                            const MediumSpec& medium, int n_cells,
                            const SegmentMesh& cell_mesh) {
  FieldSolution field;
  field.interior = interior;
  field.left = reconstruct_halfline(fund_left, medium, medium.a_left, n_cells,
                                    cell_mesh);
  field.right = reconstruct_halfline(fund_right, medium, medium.a_right,
                                     n_cells, cell_mesh);
  for (auto& cell : field.left.cells)
    for (auto& v : cell) v *= interior.robin_out_left;
  for (auto& cell : field.right.cells)
    for (auto& v : cell) v *= interior.robin_out_right;
  return field;
}

void field_samples(const FieldSolution& field, std::vector<double>& x,
                   std::vector<cplx>& u) {
  x.clear();
  u.clear();
  // left tail, outermost first
  for (int c = field.left.n_cells - 1; c >= 0; --c) {
    const auto& vals = field.left.cells[c];
    for (int i = static_cast<int>(vals.size()) - 1; i >= 0; --i) {
      x.push_back(field.left.node_x(c, i));
      u.push_back(vals[i]);
    }
  }
  for (int i = 0; i < field.interior.mesh.size(); ++i) {
    x.push_back(field.interior.mesh.nodes[i]);
    u.push_back(field.interior.values[i]);
  }
  for (int c = 0; c < field.right.n_cells; ++c) {
    const auto& vals = field.right.cells[c];
    for (size_t i = 0; i < vals.size(); ++i) {
      x.push_back(field.right.node_x(c, static_cast<int>(i)));
      u.push_back(vals[i]);
    }
  }
}

}  // namespace qph
