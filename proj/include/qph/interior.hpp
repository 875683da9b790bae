#ifndef QPH_INTERIOR_HPP
#define QPH_INTERIOR_HPP

#include <vector>

#include "qph/halfline.hpp"

namespace qph {

struct InteriorSolution {
  SegmentMesh mesh;           // on (a_left, a_right)
  std::vector<cplx> values;
  cplx robin_out_left;        // R_+ u(a_left), scales the left tail
  cplx robin_out_right;       // R_+ u(a_right)
  double omega = 0.0;
  double epsilon = 0.0;
  double z = 1.0;
};

// P1 solve of the interior problem with RtR transparent conditions applied
// through their DtN conversion. The mesh is refined to include perturbation
// breakpoints.
InteriorSolution solve_interior(const MediumSpec& medium, double omega,
                                double epsilon, cplx lambda_left,
                                cplx lambda_right, const SourceSpec& source,
                                double target_h);

struct FieldSolution {
  InteriorSolution interior;
  HalflineField left, right;  // already scaled by the interior Robin traces
};

FieldSolution assemble_full(const InteriorSolution& interior,
                            const FundamentalPair& fund_left,
                            const FundamentalPair& fund_right,
                            const MediumSpec& medium, int n_cells,
                            const SegmentMesh& cell_mesh);

// Flattened (x, u) samples over the whole computed window, ascending in x.
void field_samples(const FieldSolution& field, std::vector<double>& x,
                   std::vector<cplx>& u);

struct SweepRow {
  double epsilon = 0.0;
  double rel_h1_error = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double slope = 0.0;  // log-log least-squares slope vs epsilon
};

}  // namespace qph

#endif
