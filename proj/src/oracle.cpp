#include "qph/oracle.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "qph/cell.hpp"
#include "qph/lapack.hpp"

namespace qph {

namespace {

// Superconvergent one-sided flux mu u'(x_j-) from the element weak residual.
cplx flux_left_of_node(const SegmentMesh& mesh, const CoefFn& coef,
                       cplx omega2_complex, const std::vector<cplx>& u,
                       int j) {
  const double x0 = mesh.nodes[j - 1], x1 = mesh.nodes[j];
  const double h = x1 - x0;
  cplx acc(0);
  for (double g : {0.21132486540518713, 0.7886751345948129}) {
    const double x = x0 + g * h;
    double mu, rho;
    coef(x, mu, rho);
    const cplx uval = (1.0 - g) * u[j - 1] + g * u[j];
    const cplx du = (u[j] - u[j - 1]) / h;
    // phi_j = g on the element, phi_j' = 1/h
    acc += 0.5 * h * (mu * du / h - omega2_complex * rho * uval * g);
  }
  return acc;
}

std::vector<cplx> solve_truncated(const SegmentMesh& mesh, const CoefFn& coef,
                                  cplx omega2_complex, double z,
                                  const std::function<double(double)>& load,
                                  bool robin_at_left) {
  Tridiag t = assemble_helmholtz(mesh, coef, omega2_complex);
  const int n = mesh.size();
  std::vector<cplx> rhs = assemble_load(mesh, load);
  if (robin_at_left) {
    t.d[0] -= iu * z;
    rhs[0] += 1.0;  // R_+ u(0) = 1
  } else {
    t.d[0] = cplx(1.0);
    t.du[0] = cplx(0);
    rhs[0] = cplx(0);
  }
  // far Dirichlet end
  t.d[n - 1] = cplx(1.0);
  t.dl[n - 2] = cplx(0);
  rhs[n - 1] = cplx(0);

  lapack::TFactor factor(std::move(t.dl), std::move(t.d), std::move(t.du));
  factor.solve(rhs);
  return rhs;
}

// Two nested solves and pointwise Richardson extrapolation of the nodal
// values: removes the leading h^2 error, which otherwise accumulates over
// the long absorbing domain (phase pollution).
std::vector<cplx> solve_extrapolated(double x_lo, double x_hi, int elements,
                                     const CoefFn& coef, cplx omega2_complex,
                                     double z,
                                     const std::function<double(double)>& load,
                                     bool robin_at_left, SegmentMesh& coarse) {
  coarse = SegmentMesh::uniform(x_lo, x_hi, elements + 1);
  SegmentMesh fine = SegmentMesh::uniform(x_lo, x_hi, 2 * elements + 1);
  std::vector<cplx> uc =
      solve_truncated(coarse, coef, omega2_complex, z, load, robin_at_left);
  std::vector<cplx> uf =
      solve_truncated(fine, coef, omega2_complex, z, load, robin_at_left);
  for (int i = 0; i <= elements; ++i)
    uc[i] = (4.0 * uf[2 * i] - uc[i]) / 3.0;
  return uc;
}

}  // namespace

TruncatedHalfline truncated_halfline(const MediumSpec& medium, Side side,
                                     double s, double omega, double epsilon,
                                     double z, double tol, double h) {
  if (epsilon < 0.05)
    throw ValidationError("truncated-domain reference needs epsilon >= 0.05");
  const double kappa = complex_wavenumber(omega, epsilon).imag();
  const double L_trunc = std::log(1.0 / tol) / kappa;
  if (L_trunc > 1e4 / medium.cut.theta2)
    throw ValidationError("required truncated domain too long; epsilon too "
                          "small for the reference solve");

  const double period = medium.cut.period_length();
  // place nodes so that x = period is exactly a node
  const int per_period = std::max(8, static_cast<int>(std::ceil(period / h)));
  const int n_periods = static_cast<int>(std::ceil(L_trunc / period));
  const int elements = per_period * n_periods;

  const CoefFn coef = [&](double x, double& mu, double& rho) {
    fiber_coefficient(medium, side, s, x, mu, rho);
  };
  const cplx w2 = cplx(omega * omega, epsilon);
  const auto no_load = [](double) { return 0.0; };

  // The endpoint traces are FEM functionals with h^2 expansions; compute
  // them per solve and extrapolate the scalars along with the field.
  auto traces = [&](const SegmentMesh& mesh, const std::vector<cplx>& u,
                    int period_node, cplx& robin_in, cplx& p_sym) {
    robin_in = -2.0 * iu * z * u.front() - 1.0;
    const cplx flux = flux_left_of_node(mesh, coef, w2, u, period_node);
    // R_+ = -mu u' - i z u in the canonical near-end-outgoing orientation
    p_sym = -flux - iu * z * u[period_node];
  };

  SegmentMesh coarse = SegmentMesh::uniform(0.0, n_periods * period,
                                            elements + 1);
  SegmentMesh fine = SegmentMesh::uniform(0.0, n_periods * period,
                                          2 * elements + 1);
  std::vector<cplx> uc = solve_truncated(coarse, coef, w2, z, no_load, true);
  std::vector<cplx> uf = solve_truncated(fine, coef, w2, z, no_load, true);
  cplx rin_c, p_c, rin_f, p_f;
  traces(coarse, uc, per_period, rin_c, p_c);
  traces(fine, uf, 2 * per_period, rin_f, p_f);

  TruncatedHalfline out;
  for (int i = 0; i <= elements; ++i)
    uc[i] = (4.0 * uf[2 * i] - uc[i]) / 3.0;
  out.mesh = std::move(coarse);
  out.values = std::move(uc);
  out.L_trunc = out.mesh.nodes.back();
  out.truncation_bound = std::exp(-kappa * out.L_trunc);
  out.robin_in_near = (4.0 * rin_f - rin_c) / 3.0;
  out.p_symbol = (4.0 * p_f - p_c) / 3.0;
  return out;
}

TruncatedWholeline truncated_wholeline(const MediumSpec& medium, double omega,
                                       double epsilon, const SourceSpec& source,
                                       double tol, double h) {
  if (epsilon < 0.05)
    throw ValidationError("truncated-domain reference needs epsilon >= 0.05");
  const double kappa = complex_wavenumber(omega, epsilon).imag();
  const double ell = std::log(1.0 / tol) / kappa;
  if (ell > 1e4 / medium.cut.theta2)
    throw ValidationError("required truncated domain too long; epsilon too "
                          "small for the reference solve");
  const double x_lo = medium.a_left - ell;
  const double x_hi = medium.a_right + ell;
  const int elements =
      std::max(16, static_cast<int>(std::ceil((x_hi - x_lo) / h)));

  const CoefFn coef = [&](double x, double& mu, double& rho) {
    effective_coefficient(medium, x, mu, rho);
  };
  const double z = medium.impedance.value(omega);

  TruncatedWholeline out;
  out.x_lo = x_lo;
  out.x_hi = x_hi;
  out.truncation_bound = std::exp(-kappa * ell);
  out.values = solve_extrapolated(
      x_lo, x_hi, elements, coef, cplx(omega * omega, epsilon), z,
      [&](double x) { return source.eval(x); }, false, out.mesh);
  return out;
}

cplx green_convolution(const SourceSpec& source, double omega, double epsilon,
                       double x, int quad_points) {
  const cplx k = complex_wavenumber(omega, epsilon);
  const double lo = source.support_lo(), hi = source.support_hi();
  const int n = quad_points + (quad_points % 2);  // even interval count
  const double h = (hi - lo) / n;
  cplx acc(0);
  for (int i = 0; i <= n; ++i) {
    const double y = lo + i * h;
    const double wgt = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += wgt * source.eval(y) * std::exp(iu * k * std::abs(x - y));
  }
  // outgoing kernel of -u'' - k^2 u: e^{ik|x-y|} / (-2ik)
  return acc * h / 3.0 / (-2.0 * iu * k);
}

std::string oracle_report_json(const std::vector<OracleCase>& cases) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json row;
    row["case"] = c.name;
    row["method"] = {c.method_value.real(), c.method_value.imag()};
    row["oracle"] = {c.oracle_value.real(), c.oracle_value.imag()};
    row["discrepancy"] = c.discrepancy;
    row["truncation_bound"] = c.truncation_bound;
    j.push_back(row);
  }
  return j.dump(2) + "\n";
}

}  // namespace qph
