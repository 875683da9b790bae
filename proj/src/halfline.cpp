#include "qph/halfline.hpp"

#include <cmath>

#include "qph/parallel.hpp"

namespace qph {

PropScatterSymbols build_symbols(const FundamentalPair& fund, double delta) {
  const int K = fund.phi0.K;
  const double nu_delta = side_nu(fund.side) * delta;
  const auto phi_g = fund.phi0.grid_values(K);
  const auto phi_shift = shifted(fund.phi0, -nu_delta).grid_values(K);
  const auto psi_shift = shifted(fund.psi0, -nu_delta).grid_values(K);

  double phi_min = 1e300, phi_max = 0.0;
  for (const auto& v : phi_g) {
    phi_min = std::min(phi_min, std::abs(v));
    phi_max = std::max(phi_max, std::abs(v));
  }
  if (phi_min < 1e-10 * phi_max)
    throw NumericalError("fundamental eigenfunction vanishes on the grid; "
                         "propagation symbol undefined");

  std::vector<cplx> p(K), s(K);
  for (int j = 0; j < K; ++j) {
    p[j] = fund.lambda0 * phi_shift[j] / phi_g[j];
    s[j] = psi_shift[j] / phi_g[j];
  }
  PropScatterSymbols out;
  out.side = fund.side;
  out.p = to_fourier(p);
  out.s_sym = to_fourier(s);
  return out;
}

cplx rtr_coefficient(const FundamentalPair& fund, const RtRSymbols& symbols,
                     double a, double theta1, double delta) {
  if (symbols.side != fund.side)
    throw ValidationError("rtr_coefficient: side mismatch");
  const double s_star = a * theta1;
  const double nu_delta = side_nu(fund.side) * delta;
  const cplx phi_at = fund.phi0.eval(s_star);
  if (std::abs(phi_at) == 0.0)
    throw NumericalError("phi0 vanishes at the endpoint fiber offset");
  const cplx t00 = symbols.interp(symbols.t00, s_star);
  const cplx t10 = symbols.interp(symbols.t10, s_star);
  const cplx psi_at = fund.psi0.eval(s_star + nu_delta);
  return t00 + psi_at / phi_at * t10;
}

cplx dtn_from_rtr(cplx lambda_rtr, double z) {
  if (std::abs(lambda_rtr + 1.0) <= 1e-12)
    throw NumericalError("RtR coefficient at the impedance pole "
                         "(Lambda = -1); DtN conversion undefined");
  return iu * z * (lambda_rtr - 1.0) / (lambda_rtr + 1.0);
}

HalflineField reconstruct_halfline(const FundamentalPair& fund,
                                   const MediumSpec& medium, double a,
                                   int n_cells, const SegmentMesh& mesh) {
  HalflineField field;
  field.side = fund.side;
  field.a = a;
  field.n_cells = n_cells;
  field.cell_mesh = mesh;
  field.lambda0 = fund.lambda0;
  field.cells.resize(n_cells);

  const double theta1 = medium.cut.theta1;
  const double delta = medium.cut.delta();
  const double nu_delta = side_nu(fund.side) * delta;
  const double s_star = a * theta1;
  const cplx phi_at = fund.phi0.eval(s_star);
  if (std::abs(phi_at) == 0.0)
    throw NumericalError("phi0 vanishes at the endpoint fiber offset");

  parallel_for(n_cells, [&](int n) {
    const double s_n = s_star + n * nu_delta;
    CellSolution e0, e1;
    solve_cell_pair(medium, fund.side, s_n, fund.omega, fund.epsilon, fund.z,
                    mesh, e0, e1);
    const cplx w_phi = fund.phi0.eval(s_n);
    const cplx w_psi = fund.psi0.eval(s_n + nu_delta);
    const cplx growth = std::pow(fund.lambda0, n) / phi_at;
    std::vector<cplx> vals(mesh.size());
    for (int i = 0; i < mesh.size(); ++i)
      vals[i] = growth * (w_phi * e0.values[i] + w_psi * e1.values[i]);
    field.cells[n] = std::move(vals);
  });
  return field;
}

DecayFit decay_rate_fit(const HalflineField& field) {
  DecayFit fit;
  const int n = field.n_cells;
  if (n < 8)
    throw ValidationError("decay_rate_fit needs at least 8 cells");
  fit.cell_norms.resize(n);
  for (int c = 0; c < n; ++c)
    fit.cell_norms[c] =
        std::sqrt(l2_norm_sq(field.cell_mesh, field.cells[c]));

  // least squares on log norms vs cell index
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int c = 0; c < n; ++c) {
    const double y = std::log(std::max(fit.cell_norms[c], 1e-300));
    sx += c;
    sy += y;
    sxx += static_cast<double>(c) * c;
    sxy += c * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  fit.rate = std::exp(slope);
  double rss = 0;
  for (int c = 0; c < n; ++c) {
    const double y = std::log(std::max(fit.cell_norms[c], 1e-300));
    const double r = y - (intercept + slope * c);
    rss += r * r;
  }
  fit.fit_residual = std::sqrt(rss / n);
  return fit;
}

HalfguideField reconstruct_halfguide(const FundamentalPair& fund,
                                     const MediumSpec& medium,
                                     const FourierFn& boundary_data,
                                     int n_cells, int ny1, int ny2_per_cell,
                                     const SegmentMesh& mesh) {
  HalfguideField out;
  out.ny1 = ny1;
  out.ny2_per_cell = ny2_per_cell;
  out.n_cells = n_cells;
  const double delta = medium.cut.delta();
  const double theta2 = medium.cut.theta2;
  const double nu_delta = side_nu(fund.side) * delta;

  PropScatterSymbols ps = build_symbols(fund, delta);
  const Mat p_op = shift_matrix(boundary_data.K, nu_delta) *
                   multiplication_matrix(ps.p);
  const Mat s_op = shift_matrix(boundary_data.K, nu_delta) *
                   multiplication_matrix(ps.s_sym);

  out.y1.resize(ny1);
  for (int i = 0; i < ny1; ++i) out.y1[i] = (i + 0.5) / ny1;
  out.y2.resize(static_cast<size_t>(n_cells) * ny2_per_cell);
  out.values.assign(out.y2.size() * ny1, cplx(0));

  Vec phi_n = fourier_to_vec(boundary_data);
  for (int n = 0; n < n_cells; ++n) {
    const FourierFn phi_f = vec_to_fourier(phi_n);
    const FourierFn psi_f = vec_to_fourier(s_op * phi_n);
    for (int j = 0; j < ny2_per_cell; ++j) {
      const double t = (j + 0.5) / ny2_per_cell;  // within-cell y2
      const size_t row = static_cast<size_t>(n) * ny2_per_cell + j;
      out.y2[row] = n + t;
      const double x = t / theta2;
      for (int i = 0; i < ny1; ++i) {
        const double s = (fund.side == Side::Right) ? out.y1[i] - delta * t
                                                    : out.y1[i] + delta * t;
        CellSolution e0, e1;
        solve_cell_pair(medium, fund.side, s, fund.omega, fund.epsilon,
                        fund.z, mesh, e0, e1);
        const cplx v0 = phi_f.eval(s);
        const cplx v1 = psi_f.eval(s + nu_delta);
        out.values[row * ny1 + i] =
            v0 * p1_eval(mesh, e0.values, x) + v1 * p1_eval(mesh, e1.values, x);
      }
    }
    phi_n = p_op * phi_n;
  }
  return out;
}

}  // namespace qph
