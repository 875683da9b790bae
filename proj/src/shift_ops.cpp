#include "qph/shift_ops.hpp"

#include <sstream>

namespace qph {

Vec fourier_to_vec(const FourierFn& f) {
  Vec v(f.K);
  for (int j = 0; j < f.K; ++j) v(j) = f.coeff[j];
  return v;
}

FourierFn vec_to_fourier(const Vec& v) {
  FourierFn f;
  f.K = static_cast<int>(v.size());
  f.coeff.resize(f.K);
  for (int j = 0; j < f.K; ++j) f.coeff[j] = v(j);
  return f;
}

FourierFn ShiftOpMatrix::apply(const FourierFn& phi) const {
  return vec_to_fourier(m * fourier_to_vec(phi));
}

Mat multiplication_matrix(const FourierFn& symbol) {
  // circular convolution: slot arithmetic mod K
  const int K = symbol.K;
  Mat m(K, K);
  for (int j = 0; j < K; ++j)
    for (int l = 0; l < K; ++l)
      m(j, l) = symbol.coeff[((j - l) % K + K) % K];
  return m;
}

Mat shift_matrix(int K, double delta) {
  Mat m = Mat::Zero(K, K);
  for (int j = 0; j < K; ++j) {
    const double ph = -2.0 * pi * FourierFn::freq_of_slot(j, K) * delta;
    m(j, j) = cplx(std::cos(ph), std::sin(ph));
  }
  return m;
}

ShiftOpMatrix assemble_T(const FourierFn& symbol, RtRPattern pattern,
                         Side side, double delta) {
  const int K = symbol.K;
  const double nu_delta = side_nu(side) * delta;
  ShiftOpMatrix op;
  op.pattern = pattern;
  op.side = side;
  op.K = K;
  switch (pattern) {
    case RtRPattern::T00:
      op.m = multiplication_matrix(symbol);
      break;
    case RtRPattern::T01:
      op.m = shift_matrix(K, nu_delta) * multiplication_matrix(symbol);
      break;
    case RtRPattern::T10:
      op.m = multiplication_matrix(symbol) * shift_matrix(K, -nu_delta);
      break;
    case RtRPattern::T11:
      op.m = multiplication_matrix(shifted(symbol, nu_delta));
      break;
  }
  return op;
}

LocalRtROps assemble_local_ops(const RtRSymbols& symbols, double delta) {
  LocalRtROps ops;
  ops.t00 = assemble_T(to_fourier(symbols.t00), RtRPattern::T00, symbols.side,
                       delta);
  ops.t01 = assemble_T(to_fourier(symbols.t01), RtRPattern::T01, symbols.side,
                       delta);
  ops.t10 = assemble_T(to_fourier(symbols.t10), RtRPattern::T10, symbols.side,
                       delta);
  ops.t11 = assemble_T(to_fourier(symbols.t11), RtRPattern::T11, symbols.side,
                       delta);
  return ops;
}

Mat transpose_op(const Mat& a) {
  // mode k pairs with mode -k: slot reversal j -> (K - j) mod K
  const int K = static_cast<int>(a.rows());
  Mat t(K, K);
  for (int j = 0; j < K; ++j) {
    const int rj = (K - j) % K;
    for (int l = 0; l < K; ++l) t(j, l) = a((K - l) % K, rj);
  }
  return t;
}

ShiftOpMatrix transpose_op(const ShiftOpMatrix& a) {
  ShiftOpMatrix t = a;
  t.m = transpose_op(a.m);
  return t;
}

Pencil assemble_pencil(const ShiftOpMatrix& t00, const ShiftOpMatrix& t01,
                       const ShiftOpMatrix& t10, const ShiftOpMatrix& t11) {
  const int K = t00.K;
  if (t01.K != K || t10.K != K || t11.K != K)
    throw ValidationError("pencil blocks disagree on K");
  if (t01.side != t00.side || t10.side != t00.side || t11.side != t00.side)
    throw ValidationError("pencil blocks disagree on side");
  Pencil p;
  p.K = K;
  p.side = t00.side;
  p.mm = Mat::Zero(2 * K, 2 * K);
  p.nn = Mat::Zero(2 * K, 2 * K);
  p.mm.topLeftCorner(K, K) = t01.m;
  p.mm.topRightCorner(K, K) = t11.m;
  p.mm.bottomRightCorner(K, K) = Mat::Identity(K, K);
  p.nn.topLeftCorner(K, K) = Mat::Identity(K, K);
  p.nn.bottomLeftCorner(K, K) = t00.m;
  p.nn.bottomRightCorner(K, K) = t10.m;
  return p;
}

Pencil assemble_pencil(const RtRSymbols& symbols, double delta) {
  LocalRtROps ops = assemble_local_ops(symbols, delta);
  Pencil p = assemble_pencil(ops.t00, ops.t01, ops.t10, ops.t11);
  p.omega = symbols.omega;
  p.epsilon = symbols.epsilon;
  return p;
}

std::string Pencil::csv(const Mat& which) const {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < which.rows(); ++i) {
    for (int j = 0; j < which.cols(); ++j) {
      if (j) os << ',';
      os << which(i, j).real() << ',' << which(i, j).imag();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qph
