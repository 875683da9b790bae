#include "qph/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "qph/parallel.hpp"

namespace qph {

namespace {

double symbols_tail(const RtRSymbols& sym) {
  double worst = 0.0;
  for (const auto* t : {&sym.t00, &sym.t01, &sym.t10, &sym.t11})
    worst = std::max(worst, to_fourier(*t).tail_energy_fraction());
  return worst;
}

}  // namespace

int seam_optimized_K(double delta, int k_req, int k_cap) {
  int best = k_req;
  double best_slip = 1e300;
  const int hi = std::min(2 * k_req, k_cap);
  for (int K = k_req; K <= hi; ++K) {
    const double slip = std::abs(K * delta - std::round(K * delta));
    if (slip < best_slip) {
      best_slip = slip;
      best = K;
    }
  }
  return best;
}

SpectralContext build_spectral_context(const MediumSpec& medium, double omega,
                                       double epsilon,
                                       const SolverParams& params) {
  SpectralContext ctx;
  ctx.omega = omega;
  ctx.epsilon = epsilon;
  ctx.z = medium.impedance.value(omega);
  ctx.cell_mesh =
      SegmentMesh::uniform(0.0, medium.cut.period_length(), params.mesh_nodes);

  const double delta_for_window = medium.cut.delta();
  int k_req = params.k_modes;
  int K = k_req;
  for (;;) {
    K = params.seam_optimized_window
            ? seam_optimized_K(delta_for_window, k_req, params.max_k_modes)
            : k_req;
    ctx.sym_right =
        rtr_symbols(medium, Side::Right, omega, epsilon, ctx.z, K,
                    ctx.cell_mesh);
    if (!params.auto_refine_k || k_req >= params.max_k_modes ||
        symbols_tail(ctx.sym_right) <= 1e-10)
      break;
    k_req = std::min(2 * k_req, params.max_k_modes);
  }
  ctx.K = K;
  ctx.sym_left = rtr_symbols(medium, Side::Left, omega, epsilon, ctx.z, K,
                             ctx.cell_mesh);

  const double delta = medium.cut.delta();
  ctx.pencil = assemble_pencil(ctx.sym_right, delta);
  ctx.spectrum =
      solve_pencil(ctx.pencil, ctx.sym_right, delta, params.tol_circle);

  if (ctx.regime() == Regime::Limit)
    ctx.klass = classify_frequency(ctx.spectrum, params.tol_circle,
                                   params.tol_flux_rel);
  else
    ctx.klass = FrequencyClassKind::Propagative;  // unused when absorbing

  const double extraction_tol =
      (ctx.regime() == Regime::Absorbing) ? 0.0 : params.tol_circle;
  ctx.fund_right =
      extract_fundamental(ctx.spectrum, ctx.sym_right, delta, Side::Right,
                          ctx.regime(), ctx.klass, extraction_tol);
  ctx.fund_left =
      extract_fundamental(ctx.spectrum, ctx.sym_right, delta, Side::Left,
                          ctx.regime(), ctx.klass, extraction_tol);

  ctx.rtr_right = rtr_coefficient(ctx.fund_right, ctx.sym_right,
                                  medium.a_right, medium.cut.theta1, delta);
  ctx.rtr_left = rtr_coefficient(ctx.fund_left, ctx.sym_left, medium.a_left,
                                 medium.cut.theta1, delta);
  return ctx;
}

FieldSolution solve_field(const MediumSpec& medium, const SpectralContext& ctx,
                          const SolverParams& params) {
  InteriorSolution interior =
      solve_interior(medium, ctx.omega, ctx.epsilon, ctx.rtr_left,
                     ctx.rtr_right, medium.source, params.interior_h);
  return assemble_full(interior, ctx.fund_left, ctx.fund_right, medium,
                       params.n_cells, ctx.cell_mesh);
}

SweepResult epsilon_sweep(const MediumSpec& medium, double omega,
                          const std::vector<double>& eps_list,
                          const SolverParams& params) {
  if (eps_list.size() < 3)
    throw ValidationError("epsilon sweep needs at least 3 values");
  for (size_t i = 0; i + 1 < eps_list.size(); ++i)
    if (!(eps_list[i] > eps_list[i + 1]) || !(eps_list.back() > 0.0))
      throw ValidationError("epsilon sweep values must be positive and "
                            "decreasing");

  SpectralContext limit_ctx = build_spectral_context(medium, omega, 0.0,
                                                     params);
  InteriorSolution limit = solve_interior(medium, omega, 0.0,
                                          limit_ctx.rtr_left,
                                          limit_ctx.rtr_right, medium.source,
                                          params.interior_h);
  const double limit_norm = std::sqrt(h1_norm_sq(limit.mesh, limit.values));

  SweepResult out;
  out.rows.resize(eps_list.size());
  parallel_for(static_cast<int>(eps_list.size()), [&](int i) {
    SpectralContext ctx =
        build_spectral_context(medium, omega, eps_list[i], params);
    InteriorSolution sol =
        solve_interior(medium, omega, eps_list[i], ctx.rtr_left, ctx.rtr_right,
                       medium.source, params.interior_h);
    if (sol.mesh.size() != limit.mesh.size())
      throw NumericalError("interior meshes differ across the sweep");
    out.rows[i].epsilon = eps_list[i];
    out.rows[i].rel_h1_error =
        std::sqrt(h1_error_sq(limit.mesh, sol.values, limit.values)) /
        limit_norm;
  });

  // log-log slope
  const int n = static_cast<int>(out.rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : out.rows) {
    const double lx = std::log(r.epsilon);
    const double ly = std::log(std::max(r.rel_h1_error, 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return out;
}

}  // namespace qph
