#ifndef QPH_PIPELINE_HPP
#define QPH_PIPELINE_HPP

#include <optional>
#include <vector>

#include "qph/interior.hpp"

namespace qph {

struct SolverParams {
  int k_modes = 64;          // requested floor for the mode window
  int mesh_nodes = 400;      // per periodicity segment
  double interior_h = 5e-3;
  double tol_circle = 2e-3;
  double tol_flux_rel = 1e-6;
  int n_cells = 12;
  bool auto_refine_k = true;
  int max_k_modes = 512;
  // Enlarge the window to the K in [k_modes, 2*k_modes] that minimizes the
  // wrap defect |K delta - round(K delta)| of the truncated shift. The
  // irrational shift phases are not periodic across the mode window; the
  // defect scatters the few eigenpairs supported near the window edge, and
  // shrinking it keeps them within the classification tolerance.
  bool seam_optimized_window = true;
};

// The window size actually used for a requested floor k_req.
int seam_optimized_K(double delta, int k_req, int k_cap);

// Everything one (omega, epsilon) needs downstream of the cell solves:
// symbol grids for both sides, the right-side pencil spectrum, the
// classification (limit regime), the two fundamental eigenpairs and the
// two RtR coefficients.
struct SpectralContext {
  double omega = 0.0;
  double epsilon = 0.0;
  double z = 1.0;
  int K = 0;
  SegmentMesh cell_mesh;
  RtRSymbols sym_right, sym_left;
  Pencil pencil;
  PencilSpectrum spectrum;
  FrequencyClassKind klass = FrequencyClassKind::Propagative;
  FundamentalPair fund_right, fund_left;
  cplx rtr_right, rtr_left;

  Regime regime() const {
    return epsilon > 0.0 ? Regime::Absorbing : Regime::Limit;
  }
};

SpectralContext build_spectral_context(const MediumSpec& medium, double omega,
                                       double epsilon,
                                       const SolverParams& params);

// Interior solve plus both half-line tails.
FieldSolution solve_field(const MediumSpec& medium, const SpectralContext& ctx,
                          const SolverParams& params);

// Relative H1 interior errors of the absorbing solves against the limit
// solve, with the log-log slope in epsilon.
SweepResult epsilon_sweep(const MediumSpec& medium, double omega,
                          const std::vector<double>& eps_list,
                          const SolverParams& params);

}  // namespace qph

#endif
