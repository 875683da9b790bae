#include "qph/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "qph/lapack.hpp"
#include "qph/parallel.hpp"

namespace qph {

ClassifySweep classify_sweep(const MediumSpec& medium,
                             const std::vector<double>& omega_grid,
                             const SolverParams& params) {
  ClassifySweep out;
  out.rows.resize(omega_grid.size());
  parallel_for(static_cast<int>(omega_grid.size()), [&](int i) {
    ClassifyRow row;
    row.omega = omega_grid[i];
    try {
      SpectralContext ctx =
          build_spectral_context(medium, omega_grid[i], 0.0, params);
      row.kind = ctx.klass;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    out.rows[i] = std::move(row);
  });

  for (size_t i = 0; i < out.rows.size(); ++i) {
    if (!out.rows[i].kind) continue;
    if (!out.intervals.empty() &&
        out.intervals.back().kind == *out.rows[i].kind &&
        (i == 0 || out.rows[i - 1].kind == out.rows[i].kind)) {
      out.intervals.back().omega_hi = out.rows[i].omega;
    } else {
      out.intervals.push_back(
          {out.rows[i].omega, out.rows[i].omega, *out.rows[i].kind});
    }
  }
  return out;
}

namespace {

DispersionPoint dispersion_point(const MediumSpec& medium, double omega,
                                 const SolverParams& params) {
  DispersionPoint pt;
  pt.omega = omega;
  try {
    SpectralContext ctx = build_spectral_context(medium, omega, 0.0, params);
    pt.lambda0 = ctx.fund_right.lambda0;
    pt.k0 = std::arg(pt.lambda0) / (2.0 * pi);
    if (pt.k0 >= 0.5) pt.k0 -= 1.0;
    pt.Q0 = ctx.fund_right.Q0;
    pt.kind = ctx.klass;
  } catch (const std::exception& e) {
    pt.error = e.what();
    pt.branch_break = true;
  }
  return pt;
}

}  // namespace

std::vector<DispersionPoint> dispersion_curve(const MediumSpec& medium,
                                              double omega_min,
                                              double omega_max, int steps,
                                              const SolverParams& params) {
  if (steps < 2) throw ValidationError("dispersion sweep needs >= 2 steps");
  std::vector<DispersionPoint> pts(steps);
  parallel_for(steps, [&](int i) {
    const double omega =
        omega_min + (omega_max - omega_min) * i / (steps - 1.0);
    pts[i] = dispersion_point(medium, omega, params);
  });

  // nearest-phase continuation of k0; one halving pass on ambiguous steps
  const DispersionPoint* prev = nullptr;
  for (int i = 0; i < steps; ++i) {
    if (!pts[i].error.empty()) {
      prev = nullptr;
      continue;
    }
    if (prev == nullptr) {
      pts[i].k0_unwrapped = pts[i].k0;
      prev = &pts[i];
      continue;
    }
    double dphase = wrap_angle(std::arg(pts[i].lambda0 / prev->lambda0));
    if (std::abs(dphase) >= 0.5 * pi) {
      // try an intermediate frequency to disambiguate the jump
      const double mid_omega = 0.5 * (prev->omega + pts[i].omega);
      DispersionPoint mid = dispersion_point(medium, mid_omega, params);
      if (mid.error.empty()) {
        const double d1 = wrap_angle(std::arg(mid.lambda0 / prev->lambda0));
        const double d2 = wrap_angle(std::arg(pts[i].lambda0 / mid.lambda0));
        if (std::abs(d1) < 0.5 * pi && std::abs(d2) < 0.5 * pi)
          dphase = d1 + d2;
        else
          pts[i].branch_break = true;
      } else {
        pts[i].branch_break = true;
      }
    }
    pts[i].k0_unwrapped = prev->k0_unwrapped + dphase / (2.0 * pi);
    prev = &pts[i];
  }
  return pts;
}

GroupVelocityCheck group_velocity_check(const MediumSpec& medium, double omega,
                                        double d_omega,
                                        const SolverParams& params) {
  SpectralContext lo =
      build_spectral_context(medium, omega - d_omega, 0.0, params);
  SpectralContext mid = build_spectral_context(medium, omega, 0.0, params);
  SpectralContext hi =
      build_spectral_context(medium, omega + d_omega, 0.0, params);
  for (const auto* c : {&lo, &mid, &hi})
    if (c->klass != FrequencyClassKind::Propagative)
      throw ValidationError("group-velocity stencil leaves the propagative "
                            "regime");
  const double jump_lo =
      std::abs(wrap_angle(std::arg(mid.fund_right.lambda0 /
                                   lo.fund_right.lambda0)));
  const double jump_hi =
      std::abs(wrap_angle(std::arg(hi.fund_right.lambda0 /
                                   mid.fund_right.lambda0)));
  if (jump_lo >= 0.5 * pi || jump_hi >= 0.5 * pi)
    throw NumericalError("branch break inside the group-velocity stencil");

  GroupVelocityCheck out;
  out.k0_prime = wrap_angle(std::arg(hi.fund_right.lambda0 /
                                     lo.fund_right.lambda0)) /
                 (2.0 * pi * 2.0 * d_omega);
  out.lhs = out.k0_prime * mid.fund_right.Q0;

  // mean over s of int rho_s |w_s|^2 dx with w_s = phi0(s) e0_s +
  // psi0(s+delta) e1_s; the cell quadrature of the fibered 2D mode.
  const double delta = medium.cut.delta();
  const int K = mid.K;
  std::vector<double> cell_integral(K, 0.0);
  parallel_for(K, [&](int j) {
    const double s = static_cast<double>(j) / K;
    CellSolution e0, e1;
    solve_cell_pair(medium, Side::Right, s, mid.omega, 0.0, mid.z,
                    mid.cell_mesh, e0, e1);
    const cplx w_phi = mid.fund_right.phi0.eval(s);
    const cplx w_psi = mid.fund_right.psi0.eval(s + delta);
    std::vector<cplx> w(mid.cell_mesh.size());
    for (int i = 0; i < mid.cell_mesh.size(); ++i)
      w[i] = w_phi * e0.values[i] + w_psi * e1.values[i];
    cell_integral[j] = weighted_l2_sq(mid.cell_mesh, w, [&](double x) {
      double mu, rho;
      fiber_coefficient(medium, Side::Right, s, x, mu, rho);
      return rho;
    });
  });
  double mean_integral = 0.0;
  for (double v : cell_integral) mean_integral += v;
  mean_integral /= K;

  out.rhs = 2.0 * mid.z * mid.omega / pi * mean_integral;
  out.relative_error = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
  return out;
}

DirichletBands dirichlet_bands(const MediumSpec& medium,
                               const std::vector<double>& s_grid, int n_max,
                               int mesh_nodes) {
  if (n_max < 1) throw ValidationError("dirichlet_bands needs n_max >= 1");
  DirichletBands out;
  out.bands.resize(n_max);
  const int ns = static_cast<int>(s_grid.size());
  for (int n = 0; n < n_max; ++n) {
    out.bands[n].n = n + 1;
    out.bands[n].s_grid = s_grid;
    out.bands[n].lambda_n.assign(ns, 0.0);
  }

  SegmentMesh mesh =
      SegmentMesh::uniform(0.0, medium.cut.period_length(), mesh_nodes);
  std::vector<std::vector<double>> per_s(ns);
  parallel_for(ns, [&](int is) {
    const double s = s_grid[is];
    const int n = mesh.size();
    // P1 stiffness/mass bands on the Dirichlet interior nodes 1..n-2
    std::vector<double> k_diag(n - 2, 0.0), k_sub(n - 3 >= 0 ? n - 3 : 0, 0.0);
    std::vector<double> m_diag(n - 2, 0.0), m_sub(n - 3 >= 0 ? n - 3 : 0, 0.0);
    for (int e = 0; e + 1 < n; ++e) {
      const double x0 = mesh.nodes[e], x1 = mesh.nodes[e + 1];
      const double h = x1 - x0;
      double k_e = 0.0, m00 = 0.0, m01 = 0.0, m11 = 0.0;
      for (double g : {0.21132486540518713, 0.7886751345948129}) {
        const double x = x0 + g * h;
        double mu, rho;
        fiber_coefficient(medium, Side::Right, s, x, mu, rho);
        const double w = 0.5 * h;
        k_e += w * mu;
        m00 += w * rho * (1.0 - g) * (1.0 - g);
        m01 += w * rho * (1.0 - g) * g;
        m11 += w * rho * g * g;
      }
      const double stiff = k_e / (h * h);
      const int i0 = e - 1, i1 = e;  // interior indices of nodes e, e+1
      if (i0 >= 0) {
        k_diag[i0] += stiff;
        m_diag[i0] += m00;
      }
      if (i1 <= n - 3) {
        k_diag[i1] += stiff;
        m_diag[i1] += m11;
      }
      if (i0 >= 0 && i1 <= n - 3) {
        k_sub[i0] += -stiff;
        m_sub[i0] += m01;
      }
    }
    // Solved as M u = (1/lambda) K u: the stiffness side is always
    // positive definite, which keeps the banded solver valid even when a
    // strong contrast makes the rho-weight change sign along a fiber.
    // Positive eigenvalues (the Dirichlet band family) are 1/mu for the
    // positive mu, largest mu first.
    std::vector<double> mu_vals =
        lapack::sym_tridiag_geig(m_diag, m_sub, k_diag, k_sub);
    std::vector<double> evals;
    for (auto it = mu_vals.rbegin(); it != mu_vals.rend(); ++it) {
      if (*it <= 0.0) break;
      evals.push_back(1.0 / *it);
      if (static_cast<int>(evals.size()) == n_max) break;
    }
    if (static_cast<int>(evals.size()) < n_max)
      throw NumericalError("fewer positive Dirichlet eigenvalues than "
                           "requested; refine the fiber mesh");
    per_s[is] = std::move(evals);
  });

  for (int is = 0; is < ns; ++is)
    for (int n = 0; n < n_max; ++n)
      out.bands[n].lambda_n[is] = per_s[is][n];

  for (auto& band : out.bands) {
    band.a_n = *std::min_element(band.lambda_n.begin(), band.lambda_n.end());
    band.b_n = *std::max_element(band.lambda_n.begin(), band.lambda_n.end());
  }

  // smallest N from which all computed consecutive bands overlap
  for (int N = 0; N < n_max; ++N) {
    bool all_overlap = true;
    for (int k = N; k + 1 < n_max; ++k)
      if (out.bands[k].b_n < out.bands[k + 1].a_n) {
        all_overlap = false;
        break;
      }
    if (all_overlap && N + 1 < n_max) {
      out.overlap_start = N + 1;
      out.omega_star = std::sqrt(out.bands[N].a_n);
      break;
    }
  }
  return out;
}

}  // namespace qph
