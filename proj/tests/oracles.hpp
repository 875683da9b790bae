// Test-only reference values, independent of the library's solve path:
// plane-wave closed forms for constant-coefficient media, and small
// helpers to build media and synthetic symbol grids.

#ifndef QPH_TESTS_ORACLES_HPP
#define QPH_TESTS_ORACLES_HPP

#include <array>

#include "qph/cell.hpp"

namespace qph::test {

// mu = rho = 1 on a segment of length L with impedance z: every Robin
// trace follows from the two-coefficient ansatz A e^{ikx} + B e^{-ikx}.
struct PlaneWaveOracle {
  cplx k;
  double z;
  double L;
  cplx a0, b0;  // e0 coefficients
  cplx a1, b1;  // e1 coefficients

  PlaneWaveOracle(double omega, double epsilon, double z_, double L_)
      : k(complex_wavenumber(omega, epsilon)), z(z_), L(L_) {
    solve(cplx(1), cplx(0), a0, b0);
    solve(cplx(0), cplx(1), a1, b1);
  }

  // Robin operators at the segment ends for u = A e^{ikx} + B e^{-ikx}.
  cplx robin_plus_0(cplx A, cplx B) const {
    return -iu * (k + z) * A + iu * (k - z) * B;
  }
  cplx robin_minus_0(cplx A, cplx B) const {
    return iu * (k - z) * A - iu * (k + z) * B;
  }
  cplx robin_plus_L(cplx A, cplx B) const {
    const cplx E = std::exp(iu * k * L);
    return -iu * (k + z) * A * E + iu * (k - z) * B / E;
  }
  cplx robin_minus_L(cplx A, cplx B) const {
    const cplx E = std::exp(iu * k * L);
    return iu * (k - z) * A * E - iu * (k + z) * B / E;
  }

  void solve(cplx data0, cplx dataL, cplx& A, cplx& B) const {
    // [R+(0); R-(L)] (A,B) = (data0, dataL), solved by Cramer's rule
    const cplx E = std::exp(iu * k * L);
    const cplx m00 = -iu * (k + z), m01 = iu * (k - z);
    const cplx m10 = iu * (k - z) * E, m11 = -iu * (k + z) / E;
    const cplx det = m00 * m11 - m01 * m10;
    A = (data0 * m11 - m01 * dataL) / det;
    B = (m00 * dataL - data0 * m10) / det;
  }

  cplx e0(double x) const {
    return a0 * std::exp(iu * k * x) + b0 * std::exp(-iu * k * x);
  }
  cplx e1(double x) const {
    return a1 * std::exp(iu * k * x) + b1 * std::exp(-iu * k * x);
  }

  cplx t00() const { return robin_minus_0(a0, b0); }
  cplx t01() const { return robin_plus_L(a0, b0); }
  cplx t10() const { return robin_minus_0(a1, b1); }
  cplx t11() const { return robin_plus_L(a1, b1); }

  cplx lambda0() const { return std::exp(iu * k * L); }
  cplx rtr_coefficient() const { return -(k - z) / (k + z); }
  // half-line solution normalized by R_+ u(0) = 1
  cplx halfline(double x) const {
    return iu / (k + z) * std::exp(iu * k * x);
  }
  cplx scattering_weight() const { return rtr_coefficient() * lambda0(); }
};

inline MediumSpec homogeneous_medium() {
  MediumSpec m;
  m.mu_p.constant = 1.0;
  m.rho_p.constant = 1.0;
  m.cut.theta1 = 0.5;
  m.cut.theta2 = 0.8660254037844386;  // sin(pi/3)
  m.a_left = -1.0;
  m.a_right = 1.0;
  validate(m);
  return m;
}

inline MediumSpec paper_medium(bool with_perturbation = false) {
  MediumSpec m;
  m.mu_p.constant = 1.5;
  m.mu_p.terms = {{1, 1, TrigKind::CosCos, 1.0}};
  m.rho_p.constant = 1.5;
  m.rho_p.terms = {{1, 0, TrigKind::SinCos, 0.5},
                   {0, 1, TrigKind::CosSin, 0.5}};
  m.cut.theta1 = 0.5;
  m.cut.theta2 = 0.8660254037844386;
  m.a_left = -1.0;
  m.a_right = 1.0;
  if (with_perturbation)
    m.perturbation = {{-0.6, -0.2, 2.0, 1.0}, {0.1, 0.5, 1.0, 2.2}};
  validate(m);
  return m;
}

inline RtRSymbols constant_symbols(int K, cplx t00, cplx t01, cplx t10,
                                   cplx t11, Side side, double omega,
                                   double epsilon, double z) {
  RtRSymbols s;
  s.side = side;
  s.K = K;
  s.omega = omega;
  s.epsilon = epsilon;
  s.z = z;
  s.s_grid.resize(K);
  for (int j = 0; j < K; ++j) s.s_grid[j] = static_cast<double>(j) / K;
  s.t00.assign(K, t00);
  s.t01.assign(K, t01);
  s.t10.assign(K, t10);
  s.t11.assign(K, t11);
  return s;
}

}  // namespace qph::test

#endif
