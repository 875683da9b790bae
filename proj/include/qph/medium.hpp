#ifndef QPH_MEDIUM_HPP
#define QPH_MEDIUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qph/types.hpp"

namespace qph {

// Rational approximant of the cut slope from its continued fraction.
struct Convergent {
  std::int64_t p = 0;
  std::int64_t q = 1;
  double error = 0.0;  // |delta - p/q|
};

// Direction (theta1, theta2) of the irrational cut through the periodic
// plane; delta = theta1/theta2 is the shift per period of the fiber offset.
struct CutVector {
  double theta1 = 0.0;
  double theta2 = 1.0;

  double delta() const { return theta1 / theta2; }
  double period_length() const { return 1.0 / theta2; }

  // Continued-fraction convergents of delta, stopping once the error drops
  // below err_floor or the denominator exceeds q_max.
  std::vector<Convergent> convergents(double err_floor = 1e-14,
                                      std::int64_t q_max = 1000000000) const;
};

enum class TrigKind : std::uint8_t { CosCos, CosSin, SinCos, SinSin };

struct TrigTerm {
  int m = 0;
  int n = 0;
  TrigKind kind = TrigKind::CosCos;
  double amplitude = 0.0;
};

// Real trigonometric polynomial on the unit torus:
//   constant + sum a * trig(2 pi m y1) * trig(2 pi n y2).
struct TrigPoly2D {
  double constant = 0.0;
  std::vector<TrigTerm> terms;

  double eval(double y1, double y2) const;
  double amplitude_sum() const;
  // Extremes over an nxn sample grid of the periodicity cell.
  void sampled_range(int n, double& lo, double& hi) const;
  bool is_constant() const { return terms.empty(); }
};

// Trace of a periodic function along the fiber through (s, 0):
//   coef(s + theta1*x, theta2*x).
double trace_at(const TrigPoly2D& coef, double s, double x,
                const CutVector& cut);

struct PerturbationInterval {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double mu_value = 1.0;
  double rho_value = 1.0;
};

enum class SourceKind : std::uint8_t { Bump, Gaussian, Indicator };

struct SourceSpec {
  SourceKind kind = SourceKind::Bump;
  double center = 0.0;
  double halfwidth = 1.0;
  double amplitude = 1.0;

  double eval(double x) const;
  double support_lo() const { return center - halfwidth; }
  double support_hi() const { return center + halfwidth; }
};

struct ImpedanceRule {
  bool follows_omega = true;  // z = omega
  double fixed_value = 1.0;   // used when follows_omega is false

  double value(double omega) const {
    return follows_omega ? omega : fixed_value;
  }
};

struct MediumSpec {
  TrigPoly2D mu_p;
  TrigPoly2D rho_p;
  CutVector cut;
  double a_left = -1.0;
  double a_right = 1.0;
  std::vector<PerturbationInterval> perturbation;
  SourceSpec source;
  ImpedanceRule impedance;

  bool homogeneous() const {
    return mu_p.is_constant() && rho_p.is_constant() && perturbation.empty();
  }
};

// Coefficients of the locally perturbed line problem at position x:
// perturbed constants inside a perturbation interval, the s=0 fiber trace
// elsewhere.
void effective_coefficient(const MediumSpec& medium, double x, double& mu,
                           double& rho);

struct ValidationReport {
  double mu_min = 0.0, mu_max = 0.0;
  double rho_min = 0.0, rho_max = 0.0;
  double residual_left = 0.0;   // |a_left*theta2 - round(.)|
  double residual_right = 0.0;
  double snapped_left = 0.0;    // endpoints after snapping
  double snapped_right = 0.0;
  bool snap_applied = false;
  std::vector<Convergent> convergents;
  std::vector<std::string> warnings;
};

// Checks ellipticity (sampled plus the amplitude bound), the integrality
// of a_j*theta2, and the diophantine quality of delta. Snaps endpoints to
// the nearest multiple of 1/theta2 when they are within snap_tol of one,
// recording a warning; a residual beyond snap_tol is a hard error.
ValidationReport validate(MediumSpec& medium,
                          double snap_tol = -1.0 /* default: 0.5001/theta2 */);

}  // namespace qph

#endif
