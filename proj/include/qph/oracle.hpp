#ifndef QPH_ORACLE_HPP
#define QPH_ORACLE_HPP

#include <vector>

#include "qph/cell.hpp"
#include "qph/fem1d.hpp"

namespace qph {

// Direct solve of the half-line problem on a domain long enough for the
// absorption to kill the reflection from the far Dirichlet end. Serves as
// an implementation-independent reference for the RtR pipeline.
struct TruncatedHalfline {
  double L_trunc = 0.0;
  double truncation_bound = 0.0;  // e^{-kappa * L_trunc}
  cplx robin_in_near;             // R_- u at the interface: the RtR coefficient
  cplx p_symbol;                  // R_+ u at one period: the propagation weight
  SegmentMesh mesh;
  std::vector<cplx> values;
};

TruncatedHalfline truncated_halfline(const MediumSpec& medium, Side side,
                                     double s, double omega, double epsilon,
                                     double z, double tol, double h = 1.25e-3);

struct TruncatedWholeline {
  double x_lo = 0.0, x_hi = 0.0;
  double truncation_bound = 0.0;
  SegmentMesh mesh;
  std::vector<cplx> values;
};

TruncatedWholeline truncated_wholeline(const MediumSpec& medium, double omega,
                                       double epsilon, const SourceSpec& source,
                                       double tol, double h = 1.25e-3);

// Free-space convolution against the outgoing kernel e^{ik|x-y|}/(-2ik)
// for the homogeneous medium (mu = rho = 1), by Simpson quadrature over
// the source support.
cplx green_convolution(const SourceSpec& source, double omega, double epsilon,
                       double x, int quad_points = 4000);

struct OracleCase {
  std::string name;
  cplx method_value;
  cplx oracle_value;
  double discrepancy = 0.0;  // relative
  double truncation_bound = 0.0;
};

std::string oracle_report_json(const std::vector<OracleCase>& cases);

}  // namespace qph

#endif
