#ifndef QPH_CELL_HPP
#define QPH_CELL_HPP

#include <string>
#include <vector>

#include "qph/fem1d.hpp"
#include "qph/fourier.hpp"
#include "qph/medium.hpp"

namespace qph {

enum class Side : std::uint8_t { Left, Right };

inline const char* side_name(Side s) {
  return s == Side::Right ? "right" : "left";
}
// Shift direction: the fiber offset advances by nu*delta per cell.
inline int side_nu(Side s) { return s == Side::Right ? +1 : -1; }

enum class CellKind : std::uint8_t { E0, E1 };

// Solution of one Robin two-point problem on the canonical segment
// (0, 1/theta2). For the left side the segment is traversed away from the
// interior (mirrored coordinates), so values[i] sits at physical position
// a - x_i instead of a + x_i.
struct CellSolution {
  Side side = Side::Right;
  CellKind kind = CellKind::E0;
  double s = 0.0;
  double omega = 0.0;
  double epsilon = 0.0;
  double z = 1.0;
  std::vector<cplx> values;
  cplx robin_out_0, robin_in_0, robin_out_L, robin_in_L;
};

// Coefficients along the fiber of offset s: the right side walks the cut
// direction, the left side its mirror (s - theta1*x, -theta2*x).
void fiber_coefficient(const MediumSpec& medium, Side side, double s, double x,
                       double& mu, double& rho);

CellSolution solve_cell(const MediumSpec& medium, Side side, CellKind kind,
                        double s, double omega, double epsilon, double z,
                        const SegmentMesh& mesh);

// Both cell problems at one offset with a single factorization.
void solve_cell_pair(const MediumSpec& medium, Side side, double s,
                     double omega, double epsilon, double z,
                     const SegmentMesh& mesh, CellSolution& e0,
                     CellSolution& e1);

// The four endpoint Robin traces of the cell pair on K equispaced offsets.
struct RtRSymbols {
  Side side = Side::Right;
  int K = 0;
  double omega = 0.0;
  double epsilon = 0.0;
  double z = 1.0;
  std::vector<double> s_grid;
  std::vector<cplx> t00, t01, t10, t11;

  FourierFn fourier(const std::vector<cplx>& values) const {
    return to_fourier(values);
  }
  // Spectrally accurate evaluation at arbitrary s.
  cplx interp(const std::vector<cplx>& values, double s) const {
    return to_fourier(values).eval(s);
  }
  std::string csv() const;
};

RtRSymbols rtr_symbols(const MediumSpec& medium, Side side, double omega,
                       double epsilon, double z, int K,
                       const SegmentMesh& mesh);

}  // namespace qph

#endif
