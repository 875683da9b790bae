#include "qph/fourier.hpp"

#include <cmath>

namespace qph {

namespace {

// Iterative radix-2 FFT, sign = -1 forward. Length must be a power of two.
void fft_pow2(std::vector<cplx>& a, int sign) {
  const int n = static_cast<int>(a.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * pi / len;
    const cplx wl(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      cplx w(1.0);
      for (int j = 0; j < len / 2; ++j) {
        cplx u = a[i + j];
        cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Direct O(n^2) transform for mode counts that are not powers of two;
// the windows used here are small enough that this never matters.
void dft_direct(std::vector<cplx>& a, int sign) {
  const int n = static_cast<int>(a.size());
  std::vector<cplx> out(n, cplx(0));
  for (int j = 0; j < n; ++j) {
    for (int m = 0; m < n; ++m) {
      const double ph = sign * 2.0 * pi * j * m / n;
      out[j] += a[m] * cplx(std::cos(ph), std::sin(ph));
    }
  }
  a = std::move(out);
}

void transform(std::vector<cplx>& a, int sign) {
  if (is_pow2(static_cast<int>(a.size())))
    fft_pow2(a, sign);
  else
    dft_direct(a, sign);
}

}  // namespace

cplx FourierFn::eval(double s) const {
  cplx acc(0);
  for (int j = 0; j < K; ++j) {
    const double ph = 2.0 * pi * freq(j) * s;
    acc += coeff[j] * cplx(std::cos(ph), std::sin(ph));
  }
  return acc;
}

std::vector<cplx> FourierFn::grid_values(int n) const {
  if (n == K) return from_fourier(*this);
  if (n > K) {
    // zero-pad in FFT order and inverse-transform
    std::vector<cplx> padded(n, cplx(0));
    for (int j = 0; j < K; ++j)
      padded[slot_of_freq(freq(j), n)] = coeff[j];
    transform(padded, +1);
    return padded;
  }
  std::vector<cplx> out(n);
  for (int m = 0; m < n; ++m) out[m] = eval(static_cast<double>(m) / n);
  return out;
}

double FourierFn::max_abs_on_grid(int n) const {
  double best = 0.0;
  for (const auto& v : grid_values(n)) best = std::max(best, std::abs(v));
  return best;
}

double FourierFn::min_abs_on_grid(int n) const {
  double best = 1e300;
  for (const auto& v : grid_values(n)) best = std::min(best, std::abs(v));
  return best;
}

double FourierFn::tail_energy_fraction() const {
  double total = 0.0, tail = 0.0;
  for (int j = 0; j < K; ++j) {
    const double e = std::norm(coeff[j]);
    total += e;
    if (std::abs(freq(j)) >= (3 * K) / 8) tail += e;
  }
  return (total > 0.0) ? tail / total : 0.0;
}

FourierFn to_fourier(const std::vector<cplx>& samples) {
  const int n = static_cast<int>(samples.size());
  if (n < 2) throw ValidationError("need at least two samples");
  FourierFn f;
  f.K = n;
  f.coeff = samples;
  transform(f.coeff, -1);
  for (auto& c : f.coeff) c /= static_cast<double>(n);
  return f;
}

std::vector<cplx> from_fourier(const FourierFn& f) {
  if (f.K < 2) throw ValidationError("need at least two modes");
  std::vector<cplx> out = f.coeff;
  transform(out, +1);
  return out;
}

FourierFn shifted(const FourierFn& f, double delta) {
  FourierFn g = f;
  for (int j = 0; j < f.K; ++j) {
    const double ph = -2.0 * pi * f.freq(j) * delta;
    g.coeff[j] *= cplx(std::cos(ph), std::sin(ph));
  }
  return g;
}

}  // namespace qph
