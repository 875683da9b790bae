#ifndef QPH_ANALYSIS_HPP
#define QPH_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qph/pipeline.hpp"

namespace qph {

struct ClassifyRow {
  double omega = 0.0;
  std::optional<FrequencyClassKind> kind;  // empty when this omega failed
  std::string error;
};

struct ClassifyInterval {
  double omega_lo = 0.0, omega_hi = 0.0;
  FrequencyClassKind kind = FrequencyClassKind::Propagative;
};

struct ClassifySweep {
  std::vector<ClassifyRow> rows;
  std::vector<ClassifyInterval> intervals;  // contiguous same-class runs
};

ClassifySweep classify_sweep(const MediumSpec& medium,
                             const std::vector<double>& omega_grid,
                             const SolverParams& params);

struct DispersionPoint {
  double omega = 0.0;
  cplx lambda0;
  double k0 = 0.0;            // arg(lambda0)/2pi in [-1/2, 1/2)
  double k0_unwrapped = 0.0;  // phase-continued along the sweep
  double Q0 = 0.0;
  std::optional<FrequencyClassKind> kind;
  bool branch_break = false;
  std::string error;
};

// Right-side fundamental eigenvalue tracked over a frequency range, with
// nearest-phase continuation (one halving pass on ambiguous steps) and
// evanescent intervals flagged by the modulus leaving the unit circle.
std::vector<DispersionPoint> dispersion_curve(const MediumSpec& medium,
                                              double omega_min,
                                              double omega_max, int steps,
                                              const SolverParams& params);

struct GroupVelocityCheck {
  double k0_prime = 0.0;
  double lhs = 0.0;  // k0'(omega) * Q0
  double rhs = 0.0;  // (2 z omega / pi) * mean_s int rho_s |w_s|^2 dx
  double relative_error = 0.0;
};

// Central-difference group-slope against the energy-flux identity; all
// three stencil frequencies must be propagative with a continuous branch.
GroupVelocityCheck group_velocity_check(const MediumSpec& medium, double omega,
                                        double d_omega,
                                        const SolverParams& params);

struct BandCurve {
  int n = 0;                     // band index, 1-based
  std::vector<double> s_grid;
  std::vector<double> lambda_n;  // eigenvalue along the band
  double a_n = 0.0, b_n = 0.0;   // min and max
};

struct DirichletBands {
  std::vector<BandCurve> bands;
  std::optional<double> omega_star;  // sqrt(a_N), when overlap is reached
  int overlap_start = -1;            // N, 1-based band index
};

// First n_max Dirichlet eigenvalues of the fiber Sturm-Liouville operator
// on (0, 1/theta2) for each offset s, plus the overlap threshold estimate
// (valid up to n_max only).
DirichletBands dirichlet_bands(const MediumSpec& medium,
                               const std::vector<double>& s_grid, int n_max,
                               int mesh_nodes = 400);

}  // namespace qph

#endif
