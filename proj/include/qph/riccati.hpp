#ifndef QPH_RICCATI_HPP
#define QPH_RICCATI_HPP

#include <optional>
#include <string>
#include <vector>

#include "qph/shift_ops.hpp"

namespace qph {

struct WindingResult {
  bool defined = false;
  int w = 0;
  double residual = 0.0;  // distance of the raw turn count to the integer
};

// Net turns of a nonvanishing periodic function around the origin, from
// accumulated principal-branch argument increments. Refines the grid by
// trigonometric interpolation (up to 8x) when an increment reaches pi/2;
// undefined (not fatal) when samples come too close to zero.
WindingResult winding_number(const std::vector<cplx>& samples,
                             double floor_tol = 1e-8);
WindingResult winding_number(const FourierFn& f, int grid_factor = 8);

struct FluxDensity {
  std::vector<double> q_s;
  double mean = 0.0;
  double stddev = 0.0;
  // typical magnitude of the two flux factors; the natural yardstick for
  // deciding that a mean flux genuinely vanishes
  double scale = 0.0;
};

// Boundary energy-flux density of a trace pair (phi, psi) against one
// side's RtR symbols: positive for outgoing modes, negative for ingoing.
FluxDensity flux_density(const FourierFn& phi, const FourierFn& psi,
                         const RtRSymbols& symbols, Side side, double delta);

enum class ModulusClass : std::uint8_t { Inside, OnCircle, Outside };

struct RiccatiEigenpair {
  cplx lambda;
  FourierFn phi, psi;
  WindingResult winding_phi, winding_psi;
  double flux_mean = 0.0;
  double flux_std = 0.0;
  double flux_scale = 0.0;
  ModulusClass modulus_class = ModulusClass::OnCircle;
};

struct PencilSpectrum {
  std::vector<RiccatiEigenpair> eigs;  // finite eigenvalues
  int infinite_count = 0;              // from rank deficiency of N
  int zero_count = 0;                  // from rank deficiency of M
};

// All finite generalized eigenvalues of (M, N) with eigenvectors split
// into (phi, psi) and winding/flux postprocessing. `symbols` must be the
// grid the pencil was assembled from.
PencilSpectrum solve_pencil(const Pencil& p, const RtRSymbols& symbols,
                            double delta, double tol_circle = 2e-3);

enum class FrequencyClassKind : std::uint8_t {
  Evanescent,
  Propagative,
  ZeroFlux
};

inline const char* class_name(FrequencyClassKind c) {
  switch (c) {
    case FrequencyClassKind::Evanescent: return "evanescent";
    case FrequencyClassKind::Propagative: return "propagative";
    default: return "zero_flux";
  }
}

struct FrequencyClass {
  double omega = 0.0;
  FrequencyClassKind kind = FrequencyClassKind::Propagative;
  std::optional<cplx> lambda0_right, lambda0_left;
};

// Limit-pencil classification: no eigenvalue near the unit circle means
// evanescent, all near it propagative, anything else (or vanishing flux)
// the unsupported zero-flux case.
FrequencyClassKind classify_frequency(const PencilSpectrum& spec,
                                      double tol_circle = 1e-3,
                                      double tol_flux_rel = 1e-6);

enum class Regime : std::uint8_t { Absorbing, Limit };

struct FundamentalPair {
  Side side = Side::Right;
  Regime regime = Regime::Limit;
  cplx lambda0;
  FourierFn phi0, psi0;  // normalized so phi0(0) = 1
  double Q0 = 0.0;
  // frequency context the pair was computed at
  double omega = 0.0;
  double epsilon = 0.0;
  double z = 1.0;
};

// Selects the fundamental eigenpair of one side from the right-side
// pencil spectrum. Right: the unique inside-circle (absorbing/evanescent)
// or positive-flux (propagative) pair with winding(phi) = 0. Left: the
// outside-circle / negative-flux pair with winding(psi) = 0, inverted and
// with the roles of (phi, psi) swapped.
FundamentalPair extract_fundamental(const PencilSpectrum& spec,
                                    const RtRSymbols& right_symbols,
                                    double delta, Side side, Regime regime,
                                    FrequencyClassKind klass,
                                    double tol = 1e-3);

// The whole point spectrum generated by the fundamental eigenvalue:
// lambda0 * exp(-+ 2 pi i k delta) for |k| <= count.
std::vector<cplx> reconstruct_spectrum(cplx lambda0, Side side, double delta,
                                       int count);

struct DifferenceEquationCheck {
  double phi_residual = 0.0;     // ||e^v - phi0||_inf / ||phi0||_inf
  double lambda_residual = 0.0;  // |lambda0 - exp(mean of log p)|
};

// Rebuilds the fundamental eigenfunction through the small-divisor
// difference equation for the propagation symbol and reports the mismatch
// with the pencil eigenvector.
DifferenceEquationCheck difference_equation_check(const FundamentalPair& fund,
                                                  const CutVector& cut,
                                                  int grid_factor = 8);

std::string spectrum_csv(const PencilSpectrum& spec, double omega,
                         double epsilon, Side side,
                         std::optional<cplx> fundamental);

}  // namespace qph

#endif
