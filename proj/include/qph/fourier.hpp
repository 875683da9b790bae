#ifndef QPH_FOURIER_HPP
#define QPH_FOURIER_HPP

#include <vector>

#include "qph/types.hpp"

namespace qph {

// A 1-periodic function held as K Fourier coefficients in FFT storage
// order: slot j carries the mode of frequency j for 2j < K and j - K
// otherwise (a symmetric window when K is odd).
struct FourierFn {
  int K = 0;
  std::vector<cplx> coeff;  // size K

  static int freq_of_slot(int j, int K) { return (2 * j < K) ? j : j - K; }
  static int slot_of_freq(int k, int K) { return (k >= 0) ? k : k + K; }

  int freq(int j) const { return freq_of_slot(j, K); }

  // Pointwise value by direct Fourier summation.
  cplx eval(double s) const;

  // Samples on the n-point uniform grid s_j = j/n (n >= K), i.e. a
  // trigonometric refinement when n > K.
  std::vector<cplx> grid_values(int n) const;

  double max_abs_on_grid(int n) const;
  double min_abs_on_grid(int n) const;

  // Energy fraction carried by the top quartile of frequencies
  // (|k| >= 3K/8); used to decide whether K should be doubled.
  double tail_energy_fraction() const;
};

// Analysis convention: a constant function maps to coefficient 1 in mode 0.
FourierFn to_fourier(const std::vector<cplx>& samples);
std::vector<cplx> from_fourier(const FourierFn& f);

// Coefficient-wise phase shift: returns g with g(s) = f(s - delta).
FourierFn shifted(const FourierFn& f, double delta);

}  // namespace qph

#endif
