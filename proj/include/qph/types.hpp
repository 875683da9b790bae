#ifndef QPH_TYPES_HPP
#define QPH_TYPES_HPP

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qph {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx iu{0.0, 1.0};

// Error taxonomy mapped to CLI exit codes (2/3/4).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroFluxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wrap to [0,1).
inline double frac(double s) {
  double f = s - std::floor(s);
  return (f >= 1.0) ? f - 1.0 : f;
}

// Principal argument difference of b relative to a, in (-pi, pi].
inline double arg_step(cplx a, cplx b) { return std::arg(b / a); }

// Wrap an angle to (-pi, pi].
inline double wrap_angle(double t) {
  t = std::remainder(t, 2.0 * pi);
  return (t <= -pi) ? t + 2.0 * pi : t;
}

// sqrt(omega^2 + i*eps), principal branch (Im >= 0 for eps >= 0).
inline cplx complex_wavenumber(double omega, double epsilon) {
  return std::sqrt(cplx(omega * omega, epsilon));
}

}  // namespace qph

#endif
