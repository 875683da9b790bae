#include "qph/cell.hpp"

#include <sstream>

#include "qph/lapack.hpp"
#include "qph/parallel.hpp"

namespace qph {

void fiber_coefficient(const MediumSpec& medium, Side side, double s, double x,
                       double& mu, double& rho) {
  const double y1 = (side == Side::Right) ? s + medium.cut.theta1 * x
                                          : s - medium.cut.theta1 * x;
  const double y2 = (side == Side::Right) ? medium.cut.theta2 * x
                                          : -medium.cut.theta2 * x;
  mu = medium.mu_p.eval(y1, y2);
  rho = medium.rho_p.eval(y1, y2);
}

namespace {

struct CellSystem {
  lapack::TFactor factor;
  int n = 0;
};

CellSystem factor_cell(const MediumSpec& medium, Side side, double s,
                       double omega, double epsilon, double z,
                       const SegmentMesh& mesh) {
  Tridiag t = assemble_helmholtz(
      mesh,
      [&](double x, double& mu, double& rho) {
        fiber_coefficient(medium, side, s, x, mu, rho);
      },
      cplx(omega * omega, epsilon));
  const int n = mesh.size();
  // Robin boundary terms: R_+ at 0 and R_- at L both contribute -i z u.
  t.d[0] -= iu * z;
  t.d[n - 1] -= iu * z;
  CellSystem sys;
  sys.n = n;
  sys.factor = lapack::TFactor(std::move(t.dl), std::move(t.d),
                               std::move(t.du));
  const double rcond = sys.factor.rcond();
  if (rcond < 1e-14) {
    std::ostringstream msg;
    msg << "cell system nearly singular (rcond=" << rcond << ") at s=" << s
        << ", omega=" << omega << ", epsilon=" << epsilon;
    throw NumericalError(msg.str());
  }
  return sys;
}

CellSolution extract(const MediumSpec&, Side side, CellKind kind, double s,
                     double omega, double epsilon, double z,
                     std::vector<cplx> u) {
  CellSolution sol;
  sol.side = side;
  sol.kind = kind;
  sol.s = s;
  sol.omega = omega;
  sol.epsilon = epsilon;
  sol.z = z;
  // R_+ + R_- = -2 i z u at both endpoints, so the non-imposed traces come
  // from the endpoint values alone (no differencing).
  const cplx u0 = u.front(), uL = u.back();
  if (kind == CellKind::E0) {
    sol.robin_out_0 = cplx(1.0);
    sol.robin_in_L = cplx(0.0);
    sol.robin_in_0 = -2.0 * iu * z * u0 - sol.robin_out_0;
    sol.robin_out_L = -2.0 * iu * z * uL - sol.robin_in_L;
  } else {
    sol.robin_out_0 = cplx(0.0);
    sol.robin_in_L = cplx(1.0);
    sol.robin_in_0 = -2.0 * iu * z * u0 - sol.robin_out_0;
    sol.robin_out_L = -2.0 * iu * z * uL - sol.robin_in_L;
  }
  sol.values = std::move(u);
  return sol;
}

}  // namespace

CellSolution solve_cell(const MediumSpec& medium, Side side, CellKind kind,
                        double s, double omega, double epsilon, double z,
                        const SegmentMesh& mesh) {
  if (!(omega > 0.0) || epsilon < 0.0 || !(z > 0.0))
    throw ValidationError("solve_cell requires omega > 0, epsilon >= 0, z > 0");
  CellSystem sys = factor_cell(medium, side, s, omega, epsilon, z, mesh);
  std::vector<cplx> rhs(sys.n, cplx(0));
  if (kind == CellKind::E0)
    rhs.front() = cplx(1.0);
  else
    rhs.back() = cplx(1.0);
  sys.factor.solve(rhs);
  return extract(medium, side, kind, s, omega, epsilon, z, std::move(rhs));
}

void solve_cell_pair(const MediumSpec& medium, Side side, double s,
                     double omega, double epsilon, double z,
                     const SegmentMesh& mesh, CellSolution& e0,
                     CellSolution& e1) {
  if (!(omega > 0.0) || epsilon < 0.0 || !(z > 0.0))
    throw ValidationError("solve_cell requires omega > 0, epsilon >= 0, z > 0");
  CellSystem sys = factor_cell(medium, side, s, omega, epsilon, z, mesh);
  std::vector<cplx> rhs0(sys.n, cplx(0)), rhs1(sys.n, cplx(0));
  rhs0.front() = cplx(1.0);
  rhs1.back() = cplx(1.0);
  sys.factor.solve(rhs0);
  sys.factor.solve(rhs1);
  e0 = extract(medium, side, CellKind::E0, s, omega, epsilon, z,
               std::move(rhs0));
  e1 = extract(medium, side, CellKind::E1, s, omega, epsilon, z,
               std::move(rhs1));
}

RtRSymbols rtr_symbols(const MediumSpec& medium, Side side, double omega,
                       double epsilon, double z, int K,
                       const SegmentMesh& mesh) {
  if (K < 8) throw ValidationError("rtr_symbols requires K >= 8");
  RtRSymbols sym;
  sym.side = side;
  sym.K = K;
  sym.omega = omega;
  sym.epsilon = epsilon;
  sym.z = z;
  sym.s_grid.resize(K);
  sym.t00.resize(K);
  sym.t01.resize(K);
  sym.t10.resize(K);
  sym.t11.resize(K);
  for (int j = 0; j < K; ++j) sym.s_grid[j] = static_cast<double>(j) / K;
  parallel_for(K, [&](int j) {
    CellSolution e0, e1;
    solve_cell_pair(medium, side, sym.s_grid[j], omega, epsilon, z, mesh, e0,
                    e1);
    sym.t00[j] = e0.robin_in_0;
    sym.t01[j] = e0.robin_out_L;
    sym.t10[j] = e1.robin_in_0;
    sym.t11[j] = e1.robin_out_L;
  });
  return sym;
}

std::string RtRSymbols::csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "s,re_t00,im_t00,re_t01,im_t01,re_t10,im_t10,re_t11,im_t11\n";
  for (int j = 0; j < K; ++j) {
    os << s_grid[j] << ',' << t00[j].real() << ',' << t00[j].imag() << ','
       << t01[j].real() << ',' << t01[j].imag() << ',' << t10[j].real() << ','
       << t10[j].imag() << ',' << t11[j].real() << ',' << t11[j].imag()
       << '\n';
  }
  return os.str();
}

}  // namespace qph
