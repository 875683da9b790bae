// Command-line front end: transparent-boundary solves of the 1D Helmholtz
// equation with locally perturbed quasiperiodic coefficients, plus the
// spectral diagnostics around them (Riccati spectrum, frequency
// classification, dispersion curves, Dirichlet fiber bands).

#include <chrono>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "qph/io.hpp"
#include "qph/oracle.hpp"

namespace fs = std::filesystem;
using namespace qph;

namespace {

constexpr const char* kVersion = "qph 0.1.0";

struct CommonOpts {
  std::string config_path;
  std::string out_dir = "out";
  int k_modes = 0;      // 0: keep config value
  int mesh_nodes = 0;
};

Config load_and_validate(const CommonOpts& common,
                         std::vector<std::string>& warnings) {
  Config cfg = load_config(common.config_path);
  if (common.k_modes > 0) cfg.solver.k_modes = common.k_modes;
  if (common.mesh_nodes > 0) cfg.solver.mesh_nodes = common.mesh_nodes;
  ValidationReport rep = validate(cfg.medium);
  for (const auto& w : rep.warnings) warnings.push_back(w);
  return cfg;
}

class OutputDir {
 public:
  explicit OutputDir(const std::string& dir) : dir_(dir) {
    fs::create_directories(dir_);
  }
  std::string write(const std::string& name, const std::string& contents,
                    RunRecord& record) {
    const std::string path = (fs::path(dir_) / name).string();
    write_text_file(path, contents);
    record.outputs.push_back(name);
    return path;
  }

 private:
  std::string dir_;
};

void finish_record(RunRecord& record, const Config& cfg,
                   const CommonOpts& common,
                   std::chrono::steady_clock::time_point start,
                   OutputDir& out) {
  record.tool_version = kVersion;
  record.config_path = common.config_path;
  record.config_snapshot = cfg.raw_text;
  record.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  record.outputs.push_back("run.json");
  write_text_file((fs::path(common.out_dir) / "run.json").string(),
                  record.json());
  (void)out;
}

std::vector<double> parse_eps_list(const std::string& csv) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) out.push_back(std::stod(token));
  return out;
}

int cmd_solve(const CommonOpts& common, double omega, double epsilon,
              int cells, int halfguide_cells) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> warnings;
  Config cfg = load_and_validate(common, warnings);
  if (cells > 0) cfg.solver.n_cells = cells;
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  SpectralContext ctx =
      build_spectral_context(cfg.medium, omega, epsilon, cfg.solver);
  FieldSolution field = solve_field(cfg.medium, ctx, cfg.solver);

  std::vector<double> x;
  std::vector<cplx> u;
  field_samples(field, x, u);

  OutputDir out(common.out_dir);
  RunRecord record;
  record.command = "solve";
  record.omega = omega;
  record.epsilon = epsilon;
  record.has_spectral = true;
  record.lambda0_right = ctx.fund_right.lambda0;
  record.lambda0_left = ctx.fund_left.lambda0;
  record.rtr_right = ctx.rtr_right;
  record.rtr_left = ctx.rtr_left;
  if (ctx.regime() == Regime::Limit)
    record.classification = class_name(ctx.klass);

  out.write("field.csv", field_csv(x, u), record);
  out.write("rtr_symbols.csv", ctx.sym_right.csv(), record);
  out.write("riccati_spectrum.csv",
            spectrum_csv(ctx.spectrum, omega, epsilon, Side::Right,
                         ctx.fund_right.lambda0),
            record);

  SvgSeries re_series;
  re_series.x = x;
  re_series.y.reserve(u.size());
  for (const auto& v : u) re_series.y.push_back(v.real());
  out.write("field.svg", svg_plot({re_series}, "x", "Re u"), record);

  if (halfguide_cells > 0) {
    FourierFn one;
    one.K = ctx.K;
    one.coeff.assign(ctx.K, cplx(0));
    one.coeff[0] = cplx(1.0);
    HalfguideField guide =
        reconstruct_halfguide(ctx.fund_right, cfg.medium, one,
                              halfguide_cells, 48, 24, ctx.cell_mesh);
    out.write("halfguide.csv", halfguide_csv(guide), record);
  }

  finish_record(record, cfg, common, start, out);
  std::cout << "class="
            << (ctx.regime() == Regime::Limit ? class_name(ctx.klass)
                                              : "absorbing")
            << " lambda0_right=" << ctx.fund_right.lambda0
            << " |lambda0_right|=" << std::abs(ctx.fund_right.lambda0)
            << " Lambda_right=" << ctx.rtr_right
            << " Lambda_left=" << ctx.rtr_left << "\n";
  return 0;
}

int cmd_sweep_eps(const CommonOpts& common, double omega,
                  const std::string& eps_csv) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> warnings;
  Config cfg = load_and_validate(common, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  SweepResult sweep = epsilon_sweep(cfg.medium, omega,
                                    parse_eps_list(eps_csv), cfg.solver);

  OutputDir out(common.out_dir);
  RunRecord record;
  record.command = "sweep-eps";
  record.omega = omega;
  record.extra.emplace_back("slope", std::to_string(sweep.slope));
  out.write("sweep.csv", sweep_csv(sweep), record);
  finish_record(record, cfg, common, start, out);
  std::cout << "log-log slope = " << sweep.slope << "\n";
  for (const auto& r : sweep.rows)
    std::cout << "  eps=" << r.epsilon << "  rel H1 error=" << r.rel_h1_error
              << "\n";
  return 0;
}

int cmd_dispersion(const CommonOpts& common, double omega_min,
                   double omega_max, int steps) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> warnings;
  Config cfg = load_and_validate(common, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  auto pts = dispersion_curve(cfg.medium, omega_min, omega_max, steps,
                              cfg.solver);

  OutputDir out(common.out_dir);
  RunRecord record;
  record.command = "dispersion";
  out.write("dispersion.csv", dispersion_csv(pts), record);

  SvgSeries traj;
  traj.markers = true;
  SvgSeries disp;
  disp.markers = true;
  disp.color = "#b23a1f";
  for (const auto& p : pts) {
    if (!p.error.empty()) continue;
    traj.x.push_back(p.lambda0.real());
    traj.y.push_back(p.lambda0.imag());
    disp.x.push_back(p.omega);
    disp.y.push_back(p.k0);
  }
  out.write("lambda_trajectory.svg",
            svg_plot({traj}, "Re lambda0", "Im lambda0"), record);
  out.write("dispersion.svg", svg_plot({disp}, "omega", "k0"), record);
  finish_record(record, cfg, common, start, out);

  int failures = 0;
  for (const auto& p : pts)
    if (!p.error.empty()) ++failures;
  std::cout << steps << " frequencies, " << failures << " failures\n";
  return 0;
}

int cmd_bands(const CommonOpts& common, double alpha, int n_max) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> warnings;
  Config cfg = load_and_validate(common, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  MediumSpec medium = cfg.medium;
  if (alpha >= 0.0) {
    // band-diagnostic medium: mu = 1, rho = 1.5 + alpha (sin 2pi y1 +
    // sin 2pi y2), with the config's cut vector
    medium.mu_p = TrigPoly2D{1.0, {}};
    medium.rho_p = TrigPoly2D{
        1.5,
        {{1, 0, TrigKind::SinCos, alpha}, {0, 1, TrigKind::CosSin, alpha}}};
  }

  std::vector<double> s_grid(64);
  for (size_t i = 0; i < s_grid.size(); ++i)
    s_grid[i] = static_cast<double>(i) / s_grid.size();
  DirichletBands bands =
      dirichlet_bands(medium, s_grid, n_max, cfg.solver.mesh_nodes);

  OutputDir out(common.out_dir);
  RunRecord record;
  record.command = "bands";
  if (bands.omega_star) {
    record.extra.emplace_back("omega_star", std::to_string(*bands.omega_star));
    record.extra.emplace_back("overlap_start_band",
                              std::to_string(bands.overlap_start));
    record.extra.emplace_back("omega_star_caveat",
                              "verified up to n_max=" + std::to_string(n_max));
  }
  out.write("bands.csv", bands_csv(bands), record);

  std::vector<SvgSeries> series;
  for (const auto& band : bands.bands) {
    SvgSeries s;
    s.x = band.s_grid;
    s.y = band.lambda_n;
    series.push_back(std::move(s));
  }
  out.write("bands.svg", svg_plot(series, "s", "lambda_n(s)"), record);
  finish_record(record, cfg, common, start, out);

  if (bands.omega_star)
    std::cout << "omega_* ~= " << *bands.omega_star << " (bands overlap from n="
              << bands.overlap_start << "; verified up to n_max=" << n_max
              << ")\n";
  else
    std::cout << "no consecutive band overlap up to n_max=" << n_max << "\n";
  return 0;
}

int cmd_oracle_check(const CommonOpts& common, double omega, double epsilon) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> warnings;
  Config cfg = load_and_validate(common, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  SpectralContext ctx =
      build_spectral_context(cfg.medium, omega, epsilon, cfg.solver);
  const double z = cfg.medium.impedance.value(omega);
  std::vector<OracleCase> cases;

  const double s_star = cfg.medium.a_right * cfg.medium.cut.theta1;
  TruncatedHalfline ref = truncated_halfline(cfg.medium, Side::Right, s_star,
                                             omega, epsilon, z, 1e-5, 2.5e-3);
  OracleCase rtr;
  rtr.name = "rtr_coefficient_right";
  rtr.method_value = ctx.rtr_right;
  rtr.oracle_value = ref.robin_in_near;
  rtr.discrepancy = std::abs(ctx.rtr_right - ref.robin_in_near) /
                    std::max(1.0, std::abs(ref.robin_in_near));
  rtr.truncation_bound = ref.truncation_bound;
  cases.push_back(rtr);

  TruncatedHalfline ref0 = truncated_halfline(cfg.medium, Side::Right, 0.0,
                                              omega, epsilon, z, 1e-5, 2.5e-3);
  PropScatterSymbols ps = build_symbols(ctx.fund_right, cfg.medium.cut.delta());
  OracleCase psym;
  psym.name = "propagation_symbol_at_0";
  psym.method_value = ps.p.eval(0.0);
  psym.oracle_value = ref0.p_symbol;
  psym.discrepancy =
      std::abs(psym.method_value - psym.oracle_value) /
      std::abs(psym.oracle_value);
  psym.truncation_bound = ref0.truncation_bound;
  cases.push_back(psym);

  OutputDir out(common.out_dir);
  RunRecord record;
  record.command = "oracle-check";
  record.omega = omega;
  record.epsilon = epsilon;
  out.write("validation.json", oracle_report_json(cases), record);
  finish_record(record, cfg, common, start, out);
  for (const auto& c : cases)
    std::cout << c.name << ": discrepancy " << c.discrepancy
              << " (truncation bound " << c.truncation_bound << ")\n";
  return 0;
}

int cmd_classify(const CommonOpts& common, double omega_min, double omega_max,
                 int steps) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> warnings;
  Config cfg = load_and_validate(common, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i)
    grid[i] = omega_min + (omega_max - omega_min) * i / (steps - 1.0);
  ClassifySweep sweep = classify_sweep(cfg.medium, grid, cfg.solver);

  OutputDir out(common.out_dir);
  RunRecord record;
  record.command = "classify";
  out.write("classify.csv", classify_csv(sweep), record);
  finish_record(record, cfg, common, start, out);

  for (const auto& iv : sweep.intervals)
    std::cout << "[" << iv.omega_lo << ", " << iv.omega_hi << "] "
              << class_name(iv.kind) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasiperiodic 1D Helmholtz solver with Robin-to-Robin "
               "transparent boundary conditions"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOpts common;
  double omega = 1.0, epsilon = 0.0;
  int cells = 0, halfguide_cells = 0;
  std::string eps_csv = "0.1,0.05,0.025,0.0125";
  double omega_min = 1.0, omega_max = 10.0;
  int steps = 50;
  double alpha = -1.0;
  int n_max = 10;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "configuration file")
        ->required();
    sub->add_option("--out", common.out_dir, "output directory");
    sub->add_option("--k-modes", common.k_modes, "Fourier modes override");
    sub->add_option("--mesh-nodes", common.mesh_nodes,
                    "segment mesh nodes override");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve at one frequency");
  add_common(solve);
  solve->add_option("--omega", omega, "frequency")->required();
  solve->add_option("--epsilon", epsilon, "absorption (default 0)");
  solve->add_option("--cells", cells, "half-line cells (default 12)");
  solve->add_option("--halfguide", halfguide_cells,
                    "also dump the periodic half-guide field over this many "
                    "cells");

  CLI::App* sweep = app.add_subcommand("sweep-eps",
                                       "absorption convergence study");
  add_common(sweep);
  sweep->add_option("--omega", omega, "frequency")->required();
  sweep->add_option("--eps-list", eps_csv, "comma-separated absorptions");

  CLI::App* disp = app.add_subcommand("dispersion", "dispersion curves");
  add_common(disp);
  disp->add_option("--omega-min", omega_min, "lowest frequency")->required();
  disp->add_option("--omega-max", omega_max, "highest frequency")->required();
  disp->add_option("--steps", steps, "number of frequencies");

  CLI::App* bands = app.add_subcommand("bands", "Dirichlet fiber bands");
  add_common(bands);
  bands->add_option("--alpha", alpha,
                    "contrast of the band-diagnostic medium (omits: use the "
                    "config medium)");
  bands->add_option("--n-max", n_max, "number of bands");

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "compare against truncated-domain direct solves");
  add_common(oracle);
  oracle->add_option("--omega", omega, "frequency")->required();
  oracle->add_option("--epsilon", epsilon, "absorption (>= 0.05)")
      ->required();

  CLI::App* classify = app.add_subcommand("classify",
                                          "frequency classification sweep");
  add_common(classify);
  classify->add_option("--omega-min", omega_min, "lowest frequency")
      ->required();
  classify->add_option("--omega-max", omega_max, "highest frequency")
      ->required();
  classify->add_option("--steps", steps, "number of frequencies");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(common, omega, epsilon, cells, halfguide_cells);
    if (sweep->parsed()) return cmd_sweep_eps(common, omega, eps_csv);
    if (disp->parsed())
      return cmd_dispersion(common, omega_min, omega_max, steps);
    if (bands->parsed()) return cmd_bands(common, alpha, n_max);
    if (oracle->parsed()) return cmd_oracle_check(common, omega, epsilon);
    if (classify->parsed())
      return cmd_classify(common, omega_min, omega_max, steps);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ZeroFluxError& e) {
    std::cerr << "zero-flux frequency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
