#include "qph/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qph/lapack.hpp"
#include "qph/parallel.hpp"

namespace qph {

WindingResult winding_number(const std::vector<cplx>& samples,
                             double floor_tol) {
  WindingResult res;
  const int n = static_cast<int>(samples.size());
  double max_abs = 0.0;
  for (const auto& v : samples) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs == 0.0) return res;
  for (const auto& v : samples)
    if (std::abs(v) < floor_tol * max_abs) return res;  // undefined

  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    const double step = arg_step(samples[j], samples[(j + 1) % n]);
    if (std::abs(step) >= 0.5 * pi) return res;  // caller must refine
    total += step;
  }
  const double turns = total / (2.0 * pi);
  res.defined = true;
  res.w = static_cast<int>(std::lround(turns));
  res.residual = std::abs(turns - res.w);
  return res;
}

WindingResult winding_number(const FourierFn& f, int grid_factor) {
  for (int factor = grid_factor; factor <= 8 * grid_factor; factor *= 2) {
    // round the refinement grid up to a power of two (FFT-friendly)
    int n = 1;
    while (n < factor * f.K) n *= 2;
    const auto samples = f.grid_values(n);
    WindingResult res = winding_number(samples);
    if (res.defined) return res;
    // distinguish "too coarse" from "vanishing": if some sample is tiny the
    // refinement will not help
    double max_abs = 0.0, min_abs = 1e300;
    for (const auto& v : samples) {
      max_abs = std::max(max_abs, std::abs(v));
      min_abs = std::min(min_abs, std::abs(v));
    }
    if (max_abs == 0.0 || min_abs < 1e-8 * max_abs) return res;
  }
  return WindingResult{};
}

FluxDensity flux_density(const FourierFn& phi, const FourierFn& psi,
                         const RtRSymbols& symbols, Side side, double delta) {
  if (phi.K != symbols.K || psi.K != symbols.K)
    throw ValidationError("flux_density: K mismatch");
  const double nu_delta = side_nu(side) * delta;
  const auto phi_g = phi.grid_values(symbols.K);
  const auto psi_shift = shifted(psi, -nu_delta).grid_values(symbols.K);
  FluxDensity out;
  out.q_s.resize(symbols.K);
  double sum = 0.0, sum2 = 0.0, scale = 0.0;
  for (int j = 0; j < symbols.K; ++j) {
    const cplx a = (1.0 - symbols.t00[j]) * phi_g[j] -
                   symbols.t10[j] * psi_shift[j];
    const cplx b = (1.0 + symbols.t00[j]) * phi_g[j] +
                   symbols.t10[j] * psi_shift[j];
    const double q = (a * std::conj(b)).real();
    out.q_s[j] = q;
    sum += q;
    sum2 += q * q;
    scale += std::abs(a) * std::abs(b);
  }
  out.mean = sum / symbols.K;
  out.stddev = std::sqrt(std::max(0.0, sum2 / symbols.K - out.mean * out.mean));
  out.scale = scale / symbols.K;
  return out;
}

PencilSpectrum solve_pencil(const Pencil& p, const RtRSymbols& symbols,
                            double delta, double tol_circle) {
  const int n = 2 * p.K;
  std::vector<cplx> a(static_cast<size_t>(n) * n), b(a.size());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      a[static_cast<size_t>(j) * n + i] = p.mm(i, j);
      b[static_cast<size_t>(j) * n + i] = p.nn(i, j);
    }
  lapack::GeneralizedEig eig = lapack::zggev(a, b, n);

  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    scale = std::max(scale,
                     std::max(std::abs(eig.alpha[i]), std::abs(eig.beta[i])));
  const double degenerate_tol = 1e-10 * scale;

  PencilSpectrum out;
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    if (std::abs(eig.beta[i]) <= degenerate_tol) {
      ++out.infinite_count;
      continue;
    }
    if (std::abs(eig.alpha[i]) <= degenerate_tol) {
      ++out.zero_count;
      continue;
    }
    keep.push_back(i);
  }

  out.eigs.resize(keep.size());
  parallel_for(static_cast<int>(keep.size()), [&](int idx) {
    const int i = keep[idx];
    RiccatiEigenpair pair;
    pair.lambda = eig.alpha[i] / eig.beta[i];
    FourierFn phi, psi;
    phi.K = psi.K = p.K;
    phi.coeff.resize(p.K);
    psi.coeff.resize(p.K);
    for (int r = 0; r < p.K; ++r) {
      phi.coeff[r] = eig.vr[static_cast<size_t>(i) * n + r];
      psi.coeff[r] = eig.vr[static_cast<size_t>(i) * n + p.K + r];
    }
    pair.phi = phi;
    pair.psi = psi;
    pair.winding_phi = winding_number(phi);
    pair.winding_psi = winding_number(psi);
    const FluxDensity q = flux_density(phi, psi, symbols, Side::Right, delta);
    pair.flux_mean = q.mean;
    pair.flux_std = q.stddev;
    pair.flux_scale = q.scale;
    const double dist = std::abs(std::abs(pair.lambda) - 1.0);
    if (dist < tol_circle)
      pair.modulus_class = ModulusClass::OnCircle;
    else
      pair.modulus_class = (std::abs(pair.lambda) < 1.0)
                               ? ModulusClass::Inside
                               : ModulusClass::Outside;
    out.eigs[idx] = std::move(pair);
  });
  return out;
}

FrequencyClassKind classify_frequency(const PencilSpectrum& spec,
                                      double tol_circle, double tol_flux_rel) {
  (void)tol_circle;
  bool any_on = false, any_off = false;
  for (const auto& e : spec.eigs) {
    if (e.modulus_class == ModulusClass::OnCircle)
      any_on = true;
    else
      any_off = true;
  }
  if (!any_on) return FrequencyClassKind::Evanescent;
  if (any_off) return FrequencyClassKind::ZeroFlux;  // mixed: undecidable
  // all on the circle: propagative unless every flux vanishes against the
  // magnitude of its own factors
  double max_rel_flux = 0.0;
  for (const auto& e : spec.eigs)
    if (e.flux_scale > 0.0)
      max_rel_flux =
          std::max(max_rel_flux, std::abs(e.flux_mean) / e.flux_scale);
  if (max_rel_flux <= tol_flux_rel) return FrequencyClassKind::ZeroFlux;
  return FrequencyClassKind::Propagative;
}

namespace {

std::string candidate_table(const PencilSpectrum& spec) {
  std::ostringstream os;
  os.precision(6);
  for (const auto& e : spec.eigs) {
    os << "  lambda=" << e.lambda << " |lambda|=" << std::abs(e.lambda)
       << " w_phi=";
    if (e.winding_phi.defined)
      os << e.winding_phi.w;
    else
      os << "undef";
    os << " w_psi=";
    if (e.winding_psi.defined)
      os << e.winding_psi.w;
    else
      os << "undef";
    os << " Q=" << e.flux_mean << "\n";
  }
  return os.str();
}

FundamentalPair finalize_pair(const RiccatiEigenpair& e, Side side,
                              Regime regime, const RtRSymbols& right_symbols,
                              double delta) {
  FundamentalPair f;
  f.side = side;
  f.regime = regime;
  f.omega = right_symbols.omega;
  f.epsilon = right_symbols.epsilon;
  f.z = right_symbols.z;
  if (side == Side::Right) {
    f.lambda0 = e.lambda;
    const cplx norm = e.phi.eval(0.0);
    if (std::abs(norm) == 0.0)
      throw NumericalError("fundamental eigenfunction vanishes at s = 0");
    f.phi0 = e.phi;
    f.psi0 = e.psi;
    for (auto& c : f.phi0.coeff) c /= norm;
    for (auto& c : f.psi0.coeff) c /= norm;
    f.Q0 = flux_density(f.phi0, f.psi0, right_symbols, Side::Right, delta).mean;
  } else {
    // the outside-circle right-pencil eigenvector stacks (psi_left, phi_left)
    f.lambda0 = 1.0 / e.lambda;
    const cplx norm = e.psi.eval(0.0);
    if (std::abs(norm) == 0.0)
      throw NumericalError("fundamental eigenfunction vanishes at s = 0");
    f.phi0 = e.psi;
    f.psi0 = e.phi;
    for (auto& c : f.phi0.coeff) c /= norm;
    for (auto& c : f.psi0.coeff) c /= norm;
    // Q^l_0 = -Q^r(psi_l, phi_l), evaluated with the right-side formula
    f.Q0 =
        -flux_density(f.psi0, f.phi0, right_symbols, Side::Right, delta).mean;
  }
  return f;
}

}  // namespace

FundamentalPair extract_fundamental(const PencilSpectrum& spec,
                                    const RtRSymbols& right_symbols,
                                    double delta, Side side, Regime regime,
                                    FrequencyClassKind klass, double tol) {
  if (regime == Regime::Limit && klass == FrequencyClassKind::ZeroFlux)
    throw ZeroFluxError("zero-flux frequency: the fundamental eigenpair "
                        "cannot be identified");

  const bool use_flux =
      regime == Regime::Limit && klass == FrequencyClassKind::Propagative;
  std::vector<const RiccatiEigenpair*> candidates;
  for (const auto& e : spec.eigs) {
    bool in_pool;
    if (use_flux)
      in_pool = (side == Side::Right) ? e.flux_mean > 0.0 : e.flux_mean < 0.0;
    else
      in_pool = (side == Side::Right) ? std::abs(e.lambda) < 1.0 - tol
                                      : std::abs(e.lambda) > 1.0 + tol;
    if (!in_pool) continue;
    const WindingResult& w =
        (side == Side::Right) ? e.winding_phi : e.winding_psi;
    if (w.defined && w.w == 0) candidates.push_back(&e);
  }
  if (candidates.size() != 1) {
    std::ostringstream os;
    os << "fundamental extraction for the " << side_name(side)
       << " side found " << candidates.size()
       << " candidates (expected exactly one); spectrum:\n"
       << candidate_table(spec);
    throw NumericalError(os.str());
  }
  return finalize_pair(*candidates.front(), side, regime, right_symbols,
                       delta);
}

std::vector<cplx> reconstruct_spectrum(cplx lambda0, Side side, double delta,
                                       int count) {
  std::vector<cplx> out;
  out.reserve(2 * count + 1);
  for (int k = -count; k <= count; ++k) {
    const double ph = -2.0 * pi * side_nu(side) * k * delta;
    out.push_back(lambda0 * cplx(std::cos(ph), std::sin(ph)));
  }
  return out;
}

DifferenceEquationCheck difference_equation_check(const FundamentalPair& fund,
                                                  const CutVector& cut,
                                                  int grid_factor) {
  const int K = fund.phi0.K;
  const int n = grid_factor * K;
  const double nu_delta = side_nu(fund.side) * cut.delta();

  const auto phi_g = fund.phi0.grid_values(n);
  const auto phi_shift_g = shifted(fund.phi0, -nu_delta).grid_values(n);
  double phi_min = 1e300, phi_max = 0.0;
  for (const auto& v : phi_g) {
    phi_min = std::min(phi_min, std::abs(v));
    phi_max = std::max(phi_max, std::abs(v));
  }
  if (phi_min < 1e-10 * phi_max)
    throw NumericalError("difference-equation check requires a nonvanishing "
                         "fundamental eigenfunction");

  // p(s) = lambda0 phi0(s + nu delta) / phi0(s)
  std::vector<cplx> p(n);
  for (int j = 0; j < n; ++j) p[j] = fund.lambda0 * phi_shift_g[j] / phi_g[j];
  WindingResult wp = winding_number(p);
  if (!wp.defined || wp.w != 0)
    throw NumericalError("propagation symbol has nonzero or undefined "
                         "winding; log branch does not close");

  // continuous branch of log p
  std::vector<cplx> g(n);
  double arg_acc = std::arg(p[0]);
  g[0] = cplx(std::log(std::abs(p[0])), arg_acc);
  for (int j = 1; j < n; ++j) {
    arg_acc += arg_step(p[j - 1], p[j]);
    g[j] = cplx(std::log(std::abs(p[j])), arg_acc);
  }

  FourierFn gf = to_fourier(g);
  // v_k = g_k / (e^{2 pi i k nu_delta} - 1), k != 0; v_0 fixed by v(0) = 0
  FourierFn v;
  v.K = n;
  v.coeff.assign(n, cplx(0));
  for (int j = 1; j < n; ++j) {
    const double ph = 2.0 * pi * FourierFn::freq_of_slot(j, n) * nu_delta;
    const cplx denom = cplx(std::cos(ph), std::sin(ph)) - 1.0;
    v.coeff[j] = gf.coeff[j] / denom;
  }
  cplx v_sum(0);
  for (int j = 1; j < n; ++j) v_sum += v.coeff[j];
  v.coeff[0] = -v_sum;

  const auto v_g = from_fourier(v);
  DifferenceEquationCheck out;
  double diff_max = 0.0;
  for (int j = 0; j < n; ++j)
    diff_max = std::max(diff_max, std::abs(std::exp(v_g[j]) - phi_g[j]));
  out.phi_residual = diff_max / phi_max;
  out.lambda_residual = std::abs(fund.lambda0 - std::exp(gf.coeff[0]));
  return out;
}

std::string spectrum_csv(const PencilSpectrum& spec, double omega,
                         double epsilon, Side side,
                         std::optional<cplx> fundamental) {
  std::ostringstream os;
  os.precision(17);
  os << "omega,epsilon,side,re_lambda,im_lambda,abs_lambda,winding_phi,"
        "winding_psi,Q_mean,Q_std,is_fundamental\n";
  for (const auto& e : spec.eigs) {
    os << omega << ',' << epsilon << ',' << side_name(side) << ','
       << e.lambda.real() << ',' << e.lambda.imag() << ','
       << std::abs(e.lambda) << ',';
    if (e.winding_phi.defined)
      os << e.winding_phi.w;
    else
      os << "nan";
    os << ',';
    if (e.winding_psi.defined)
      os << e.winding_psi.w;
    else
      os << "nan";
    os << ',' << e.flux_mean << ',' << e.flux_std << ',';
    const bool is_fund =
        fundamental && std::abs(e.lambda - *fundamental) <
                           1e-12 + 1e-9 * std::abs(*fundamental);
    os << (is_fund ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace qph
