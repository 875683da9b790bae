#ifndef QPH_HALFLINE_HPP
#define QPH_HALFLINE_HPP

#include <vector>

#include "qph/riccati.hpp"

namespace qph {

// Weights of the propagation and scattering operators generated by a
// fundamental eigenpair:
//   p(s) = lambda0 phi0(s + nu delta) / phi0(s)
//   s_sym(s) = psi0(s + nu delta) / phi0(s)
struct PropScatterSymbols {
  Side side = Side::Right;
  FourierFn p;
  FourierFn s_sym;
};

PropScatterSymbols build_symbols(const FundamentalPair& fund, double delta);

// Robin-to-Robin coefficient of the half-line problem at endpoint a:
//   Lambda = t00(s*) + psi0(s* + nu delta) / phi0(s*) * t10(s*),
// with s* = a * theta1 and trigonometric interpolation of the symbols.
cplx rtr_coefficient(const FundamentalPair& fund, const RtRSymbols& symbols,
                     double a, double theta1, double delta);

// Moebius conversion to the Dirichlet-to-Neumann coefficient.
cplx dtn_from_rtr(cplx lambda_rtr, double z);

// Cell-by-cell half-line solution normalized by R_+ u(a) = 1. Cell n of
// the right side covers a + (n, n+1)/theta2; the left side mirrors to
// a - (n, n+1)/theta2 with values stored against increasing distance
// from a.
struct HalflineField {
  Side side = Side::Right;
  double a = 0.0;
  int n_cells = 0;
  SegmentMesh cell_mesh;                  // canonical segment (0, 1/theta2)
  std::vector<std::vector<cplx>> cells;   // node values per cell
  cplx lambda0;

  // Physical coordinate of node i in cell n.
  double node_x(int cell, int node) const {
    const double d = cell * cell_mesh.length() + cell_mesh.nodes[node];
    return (side == Side::Right) ? a + d : a - d;
  }
};

HalflineField reconstruct_halfline(const FundamentalPair& fund,
                                   const MediumSpec& medium, double a,
                                   int n_cells, const SegmentMesh& mesh);

// Per-cell L2 norms and the fitted exponential decay rate per cell.
struct DecayFit {
  double rate = 1.0;
  double fit_residual = 0.0;  // rms residual of the log-linear fit
  std::vector<double> cell_norms;
};

DecayFit decay_rate_fit(const HalflineField& field);

// Samples of the periodic half-guide solution driven by boundary data phi:
// U(y + n e2) = E0(P^n phi) + E1(S P^n phi), evaluated through the fibered
// cell solutions. The grid is ny1 x (n_cells * ny2) over (0,1) x (0,n_cells).
struct HalfguideField {
  int ny1 = 0, ny2_per_cell = 0, n_cells = 0;
  std::vector<double> y1, y2;
  std::vector<cplx> values;  // row-major: values[iy2 * ny1 + iy1]
};

HalfguideField reconstruct_halfguide(const FundamentalPair& fund,
                                     const MediumSpec& medium,
                                     const FourierFn& boundary_data,
                                     int n_cells, int ny1, int ny2_per_cell,
                                     const SegmentMesh& mesh);

}  // namespace qph

#endif
