#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qph/shift_ops.hpp"

using namespace qph;

namespace {

FourierFn random_smooth_fn(int K, unsigned seed, int bandwidth = 5) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  FourierFn f;
  f.K = K;
  f.coeff.assign(K, cplx(0));
  for (int j = 0; j < K; ++j) {
    const int k = FourierFn::freq_of_slot(j, K);
    if (std::abs(k) <= bandwidth)
      f.coeff[j] = cplx(dist(rng), dist(rng)) * std::exp(-0.5 * k * k / 4.0);
  }
  return f;
}

double op_norm(const Mat& m) { return m.norm(); }

}  // namespace

TEST_CASE("transform pair: elementary symbols and round trip") {
  const int K = 16;
  std::vector<cplx> ones(K, cplx(1.0));
  FourierFn f = to_fourier(ones);
  CHECK(std::abs(f.coeff[0] - 1.0) < 1e-14);
  for (int j = 1; j < K; ++j) CHECK(std::abs(f.coeff[j]) < 1e-14);

  std::vector<cplx> wave(K);
  for (int m = 0; m < K; ++m) {
    const double ph = 2.0 * pi * m / K;
    wave[m] = cplx(std::cos(ph), std::sin(ph));
  }
  FourierFn g = to_fourier(wave);
  CHECK(std::abs(g.coeff[FourierFn::slot_of_freq(1, K)] - 1.0) < 1e-13);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cplx> samples(K);
  for (auto& v : samples) v = cplx(dist(rng), dist(rng));
  auto back = from_fourier(to_fourier(samples));
  for (int m = 0; m < K; ++m) CHECK(std::abs(back[m] - samples[m]) < 1e-12);
}

TEST_CASE("eval matches grid values and refinement") {
  FourierFn f = random_smooth_fn(32, 5);
  const auto grid = f.grid_values(256);
  for (int m = 0; m < 256; m += 17)
    CHECK(std::abs(grid[m] - f.eval(m / 256.0)) < 1e-12);
}

TEST_CASE("constant symbol assembles to scaled identity or shift diagonal") {
  const int K = 16;
  const double delta = 1.0 / std::sqrt(3.0);
  std::vector<cplx> cs(K, cplx(2.0, -1.0));
  FourierFn c = to_fourier(cs);

  ShiftOpMatrix t00 = assemble_T(c, RtRPattern::T00, Side::Right, delta);
  CHECK(op_norm(t00.m - cplx(2.0, -1.0) * Mat::Identity(K, K)) < 1e-13);

  ShiftOpMatrix t01 = assemble_T(c, RtRPattern::T01, Side::Right, delta);
  for (int j = 0; j < K; ++j) {
    const double ph = -2.0 * pi * FourierFn::freq_of_slot(j, K) * delta;
    const cplx expect = cplx(2.0, -1.0) * cplx(std::cos(ph), std::sin(ph));
    CHECK(std::abs(t01.m(j, j) - expect) < 1e-13);
  }
}

TEST_CASE("single-mode symbol raises the Fourier index") {
  const int K = 16;
  std::vector<cplx> wave(K);
  for (int m = 0; m < K; ++m) {
    const double ph = 2.0 * pi * m / K;
    wave[m] = cplx(std::cos(ph), std::sin(ph));
  }
  ShiftOpMatrix t00 =
      assemble_T(to_fourier(wave), RtRPattern::T00, Side::Right, 0.3);
  // phi(s) e^{2 pi i s}: mode k feeds mode k+1
  for (int l = 0; l < K; ++l) {
    const int k = FourierFn::freq_of_slot(l, K);
    if (k + 1 >= K / 2) continue;  // falls off the window (aliases)
    const int j = FourierFn::slot_of_freq(k + 1, K);
    CHECK(std::abs(t00.m(j, l) - 1.0) < 1e-13);
  }
}

TEST_CASE("operator action equals pointwise weighted-shift evaluation") {
  const int K = 64;
  const double delta = 1.0 / std::sqrt(3.0);
  FourierFn symbol = random_smooth_fn(K, 17);
  FourierFn phi = random_smooth_fn(K, 23);

  for (Side side : {Side::Right, Side::Left}) {
    const double nu_delta = side_nu(side) * delta;
    auto check = [&](RtRPattern pat, auto direct) {
      ShiftOpMatrix op = assemble_T(symbol, pat, side, delta);
      FourierFn result = op.apply(phi);
      for (int m = 0; m < K; ++m) {
        const double s = static_cast<double>(m) / K;
        CHECK(std::abs(result.eval(s) - direct(s)) < 1e-10);
      }
    };
    check(RtRPattern::T00, [&](double s) {
      return symbol.eval(s) * phi.eval(s);
    });
    check(RtRPattern::T01, [&](double s) {
      return symbol.eval(s - nu_delta) * phi.eval(s - nu_delta);
    });
    check(RtRPattern::T10, [&](double s) {
      return symbol.eval(s) * phi.eval(s + nu_delta);
    });
    check(RtRPattern::T11, [&](double s) {
      return symbol.eval(s - nu_delta) * phi.eval(s);
    });
  }
}

TEST_CASE("transpose: identity, involution, diagonal conjugation") {
  const int K = 16;
  std::vector<cplx> cs(K, cplx(0.5, 1.5));
  ShiftOpMatrix c = assemble_T(to_fourier(cs), RtRPattern::T00, Side::Right,
                               0.3);
  CHECK(op_norm(transpose_op(c).m - c.m) < 1e-13);

  std::mt19937 rng(29);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Mat a(K, K);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) a(i, j) = cplx(dist(rng), dist(rng));
  CHECK(op_norm(transpose_op(transpose_op(a)) - a) < 1e-13);

  // bilinear-pairing definition on random coefficient vectors:
  // sum_k (tA phi)_k psi_{-k} == sum_k phi_k (A psi)_{-k}
  Mat ta = transpose_op(a);
  for (int trial = 0; trial < 5; ++trial) {
    Vec phi(K), psi(K);
    for (int j = 0; j < K; ++j) {
      phi(j) = cplx(dist(rng), dist(rng));
      psi(j) = cplx(dist(rng), dist(rng));
    }
    auto pair = [&](const Vec& f, const Vec& g) {
      cplx acc(0);
      for (int j = 0; j < K; ++j) {
        const int k = FourierFn::freq_of_slot(j, K);
        const int jr = FourierFn::slot_of_freq(k == -K / 2 ? -K / 2 : -k, K);
        acc += f(j) * g(jr);
      }
      return acc;
    };
    const cplx lhs = pair(ta * phi, psi);
    const cplx rhs = pair(phi, a * psi);
    CHECK(std::abs(lhs - rhs) < 1e-11);
  }
}

TEST_CASE("pencil block structure") {
  const int K = 16;
  const double delta = 0.37;
  FourierFn z4 = random_smooth_fn(K, 31);
  auto t00 = assemble_T(z4, RtRPattern::T00, Side::Right, delta);
  auto t01 = assemble_T(z4, RtRPattern::T01, Side::Right, delta);
  auto t10 = assemble_T(z4, RtRPattern::T10, Side::Right, delta);
  auto t11 = assemble_T(z4, RtRPattern::T11, Side::Right, delta);
  Pencil p = assemble_pencil(t00, t01, t10, t11);
  CHECK(op_norm(p.mm.topLeftCorner(K, K) - t01.m) < 1e-14);
  CHECK(op_norm(p.mm.topRightCorner(K, K) - t11.m) < 1e-14);
  CHECK(op_norm(p.mm.bottomLeftCorner(K, K)) < 1e-14);
  CHECK(op_norm(p.mm.bottomRightCorner(K, K) - Mat::Identity(K, K)) < 1e-14);
  CHECK(op_norm(p.nn.topLeftCorner(K, K) - Mat::Identity(K, K)) < 1e-14);
  CHECK(op_norm(p.nn.topRightCorner(K, K)) < 1e-14);
  CHECK(op_norm(p.nn.bottomLeftCorner(K, K) - t00.m) < 1e-14);
  CHECK(op_norm(p.nn.bottomRightCorner(K, K) - t10.m) < 1e-14);
}

TEST_CASE("homogeneous pencil: diagonal blocks from constant symbols") {
  const double omega = 2.0, eps = 0.3, L = 1.0 / 0.8660254037844386;
  test::PlaneWaveOracle pw(omega, eps, omega, L);
  // with z = k the cross symbols vanish; use z = omega = k at eps -> use
  // exact z=k only when eps=0, so here just verify the generic structure
  const int K = 16;
  const double delta = 1.0 / std::sqrt(3.0);
  RtRSymbols sym = test::constant_symbols(K, pw.t00(), pw.t01(), pw.t10(),
                                          pw.t11(), Side::Right, omega, eps,
                                          omega);
  Pencil p = assemble_pencil(sym, delta);
  // multiplication blocks of constant symbols are diagonal
  for (int i = 0; i < 2 * K; ++i)
    for (int j = 0; j < 2 * K; ++j) {
      if (i == j || (j == i + K) || (j + K == i)) continue;
      CHECK(std::abs(p.mm(i, j)) < 1e-12);
      CHECK(std::abs(p.nn(i, j)) < 1e-12);
    }
}

TEST_CASE("left and right pencils satisfy the swap relation") {
  // M^l - lambda N^l = -(1/lambda) J^{-1} (M^r - (1/lambda) N^r) J
  const int K = 32;
  MediumSpec medium = test::paper_medium();
  const double omega = 4.0, eps = 0.05, z = omega;
  const double delta = medium.cut.delta();
  SegmentMesh mesh = SegmentMesh::uniform(0.0, medium.cut.period_length(), 200);
  RtRSymbols right = rtr_symbols(medium, Side::Right, omega, eps, z, K, mesh);

  // left operators through the operator identities of the cell swap
  LocalRtROps r = assemble_local_ops(right, delta);
  Mat id = Mat::Identity(K, K);
  Mat mm_l = Mat::Zero(2 * K, 2 * K), nn_l = Mat::Zero(2 * K, 2 * K);
  mm_l.topLeftCorner(K, K) = r.t10.m;   // T^{l,01} = T^{r,10}
  mm_l.topRightCorner(K, K) = r.t00.m;  // T^{l,11} = T^{r,00}
  mm_l.bottomRightCorner(K, K) = id;
  nn_l.topLeftCorner(K, K) = id;
  nn_l.bottomLeftCorner(K, K) = r.t11.m;   // T^{l,00} = T^{r,11}
  nn_l.bottomRightCorner(K, K) = r.t01.m;  // T^{l,10} = T^{r,01}

  Pencil pr = assemble_pencil(right, delta);
  Mat J = Mat::Zero(2 * K, 2 * K);
  J.topRightCorner(K, K) = id;
  J.bottomLeftCorner(K, K) = id;

  std::mt19937 rng(41);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    const cplx lambda(dist(rng) + 1.5, dist(rng));
    Mat lhs = mm_l - lambda * nn_l;
    // the scalar prefactor is -lambda (block-by-block matching); any
    // nonzero scalar leaves the kernel correspondence unchanged
    Mat rhs = -lambda * J.inverse() * (pr.mm - (1.0 / lambda) * pr.nn) * J;
    CHECK(op_norm(lhs - rhs) < 1e-10 * op_norm(lhs));
  }

  // and the direct left solves produce the same operators up to the
  // symbol shift t^{l,jk}(s) = t^{r,j'k'}(s - delta); the two sides are
  // independent FEM solves, so they agree to discretization accuracy
  RtRSymbols left = rtr_symbols(medium, Side::Left, omega, eps, z, K, mesh);
  FourierFn t_l00 = to_fourier(left.t00);
  FourierFn t_r11 = to_fourier(right.t11);
  for (int m = 0; m < K; ++m) {
    const double s = static_cast<double>(m) / K;
    CHECK(std::abs(t_l00.eval(s) - t_r11.eval(s - delta)) < 5e-6);
  }
  FourierFn t_l10 = to_fourier(left.t10);
  FourierFn t_r01 = to_fourier(right.t01);
  for (int m = 0; m < K; ++m) {
    const double s = static_cast<double>(m) / K;
    CHECK(std::abs(t_l10.eval(s) - t_r01.eval(s - delta)) < 5e-6);
  }
}
