#include <doctest.h>

#include "oracles.hpp"
#include "qph/io.hpp"

using namespace qph;

TEST_CASE("shipped reference configuration parses and validates") {
  Config cfg = load_config(std::string(QPH_CONFIG_DIR) + "/paper_sec6.cfg");
  CHECK(cfg.medium.mu_p.constant == doctest::Approx(1.5));
  CHECK(cfg.medium.rho_p.terms.size() == 2);
  CHECK(cfg.medium.cut.theta1 == doctest::Approx(0.5));
  CHECK(cfg.medium.impedance.follows_omega);
  CHECK(cfg.solver.k_modes == 64);
  ValidationReport rep = validate(cfg.medium);
  CHECK(rep.snap_applied);
  CHECK(cfg.medium.a_right ==
        doctest::Approx(1.0 / cfg.medium.cut.theta2));
  // the parsed medium is the reference one
  MediumSpec expect = test::paper_medium(true);
  CHECK(trace_at(cfg.medium.mu_p, 0.2, 0.7, cfg.medium.cut) ==
        doctest::Approx(trace_at(expect.mu_p, 0.2, 0.7, expect.cut)));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_config_text("[cut]\ntheta1 = abc\n"), ValidationError);
  CHECK_THROWS_AS(parse_config_text("stray = 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config_text("[nope]\nx = 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config_text("[mu]\ncoscos = 1 1\n"), ValidationError);
}

TEST_CASE("pipeline outputs are deterministic") {
  Config cfg = load_config(std::string(QPH_CONFIG_DIR) + "/homogeneous.cfg");
  validate(cfg.medium);
  cfg.solver.k_modes = 16;
  cfg.solver.mesh_nodes = 150;
  cfg.solver.n_cells = 3;

  auto run_once = [&]() {
    SpectralContext ctx = build_spectral_context(cfg.medium, 2.0, 0.0,
                                                 cfg.solver);
    FieldSolution field = solve_field(cfg.medium, ctx, cfg.solver);
    std::vector<double> x;
    std::vector<cplx> u;
    field_samples(field, x, u);
    return field_csv(x, u) + spectrum_csv(ctx.spectrum, 2.0, 0.0, Side::Right,
                                          ctx.fund_right.lambda0);
  };
  CHECK(run_once() == run_once());
}

TEST_CASE("svg plots are well-formed standalone documents") {
  SvgSeries s;
  s.x = {0.0, 1.0, 2.0};
  s.y = {1.0, -1.0, 0.5};
  const std::string svg = svg_plot({s}, "x", "y");
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
}
