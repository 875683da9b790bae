#ifndef QPH_SHIFT_OPS_HPP
#define QPH_SHIFT_OPS_HPP

#include <Eigen/Dense>
#include <string>

#include "qph/cell.hpp"
#include "qph/fourier.hpp"

namespace qph {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

enum class RtRPattern : std::uint8_t { T00, T01, T10, T11 };

// One local RtR operator in the truncated Fourier basis. Matrix indices
// follow the FFT slot order of FourierFn.
struct ShiftOpMatrix {
  Mat m;
  RtRPattern pattern = RtRPattern::T00;
  Side side = Side::Right;
  int K = 0;

  Vec apply(const Vec& phi) const { return m * phi; }
  FourierFn apply(const FourierFn& phi) const;
};

// Building blocks: multiplication by a K-mode symbol (wrapped circular
// convolution) and the shift s -> s - delta (diagonal phases).
Mat multiplication_matrix(const FourierFn& symbol);
Mat shift_matrix(int K, double delta);

// The four weighted-shift forms; nu = +1 (right) composes with s - delta,
// nu = -1 (left) with s + delta:
//   T00 phi(s) = t00(s) phi(s)
//   T01 phi(s) = t01(s - nu d) phi(s - nu d)
//   T10 phi(s) = t10(s) phi(s + nu d)
//   T11 phi(s) = t11(s - nu d) phi(s)
ShiftOpMatrix assemble_T(const FourierFn& symbol, RtRPattern pattern,
                         Side side, double delta);

// All four operators of one side from its symbol grid.
struct LocalRtROps {
  ShiftOpMatrix t00, t01, t10, t11;
};
LocalRtROps assemble_local_ops(const RtRSymbols& symbols, double delta);

// Transpose with respect to the bilinear pairing int phi psi: index
// reversal conjugation of the plain transpose (mode k pairs with -k).
ShiftOpMatrix transpose_op(const ShiftOpMatrix& a);
Mat transpose_op(const Mat& a);

// Linearization of the Riccati system: M = [[T01 T11],[0 I]],
// N = [[I 0],[T00 T10]], acting on stacked (phi, psi).
struct Pencil {
  Mat mm, nn;  // 2K x 2K
  Side side = Side::Right;
  int K = 0;
  double omega = 0.0;
  double epsilon = 0.0;

  std::string csv(const Mat& which) const;
};

Pencil assemble_pencil(const ShiftOpMatrix& t00, const ShiftOpMatrix& t01,
                       const ShiftOpMatrix& t10, const ShiftOpMatrix& t11);
Pencil assemble_pencil(const RtRSymbols& symbols, double delta);

Vec fourier_to_vec(const FourierFn& f);
FourierFn vec_to_fourier(const Vec& v);

}  // namespace qph

#endif
