#ifndef QPH_LAPACK_HPP
#define QPH_LAPACK_HPP

#include <complex>
#include <vector>

#include "qph/types.hpp"

// Thin wrappers around the reference LAPACK routines the solvers need:
// complex tridiagonal factor/solve/condition, the complex generalized
// (QZ) eigenproblem, and the real symmetric banded generalized
// eigenproblem for Sturm-Liouville bands.

extern "C" {
void zgttrf_(const int* n, std::complex<double>* dl, std::complex<double>* d,
             std::complex<double>* du, std::complex<double>* du2, int* ipiv,
             int* info);
void zgttrs_(const char* trans, const int* n, const int* nrhs,
             const std::complex<double>* dl, const std::complex<double>* d,
             const std::complex<double>* du, const std::complex<double>* du2,
             const int* ipiv, std::complex<double>* b, const int* ldb,
             int* info);
void zgtcon_(const char* norm, const int* n, const std::complex<double>* dl,
             const std::complex<double>* d, const std::complex<double>* du,
             const std::complex<double>* du2, const int* ipiv,
             const double* anorm, double* rcond, std::complex<double>* work,
             int* info);
void zggev_(const char* jobvl, const char* jobvr, const int* n,
            std::complex<double>* a, const int* lda, std::complex<double>* b,
            const int* ldb, std::complex<double>* alpha,
            std::complex<double>* beta, std::complex<double>* vl,
            const int* ldvl, std::complex<double>* vr, const int* ldvr,
            std::complex<double>* work, const int* lwork, double* rwork,
            int* info);
void dsbgv_(const char* jobz, const char* uplo, const int* n, const int* ka,
            const int* kb, double* ab, const int* ldab, double* bb,
            const int* ldbb, double* w, double* z, const int* ldz,
            double* work, int* info);
}

namespace qph::lapack {

// LU factorization of a complex tridiagonal matrix; reusable for several
// right-hand sides. Bands: dl (n-1), d (n), du (n-1).
class TFactor {
 public:
  TFactor() = default;
  TFactor(std::vector<cplx> dl, std::vector<cplx> d, std::vector<cplx> du)
      : dl_(std::move(dl)), d_(std::move(d)), du_(std::move(du)) {
    n_ = static_cast<int>(d_.size());
    anorm_ = norm1();
    du2_.assign(n_ > 2 ? n_ - 2 : 0, cplx(0));
    ipiv_.assign(n_, 0);
    int info = 0;
    zgttrf_(&n_, dl_.data(), d_.data(), du_.data(), du2_.data(), ipiv_.data(),
            &info);
    if (info != 0)
      throw NumericalError("tridiagonal factorization failed, info=" +
                           std::to_string(info));
  }

  void solve(std::vector<cplx>& rhs) const {
    const char trans = 'N';
    const int nrhs = 1;
    int info = 0;
    zgttrs_(&trans, &n_, &nrhs, dl_.data(), d_.data(), du_.data(), du2_.data(),
            ipiv_.data(), rhs.data(), &n_, &info);
    if (info != 0)
      throw NumericalError("tridiagonal solve failed, info=" +
                           std::to_string(info));
  }

  // Reciprocal condition estimate in the 1-norm.
  double rcond() const {
    const char norm = '1';
    double rc = 0.0;
    std::vector<cplx> work(2 * static_cast<size_t>(n_));
    int info = 0;
    zgtcon_(&norm, &n_, dl_.data(), d_.data(), du_.data(), du2_.data(),
            ipiv_.data(), &anorm_, &rc, work.data(), &info);
    if (info != 0)
      throw NumericalError("condition estimate failed, info=" +
                           std::to_string(info));
    return rc;
  }

 private:
  double norm1() const {
    double best = 0.0;
    for (int j = 0; j < n_; ++j) {
      double col = std::abs(d_[j]);
      if (j > 0) col += std::abs(du_[j - 1]);
      if (j + 1 < n_) col += std::abs(dl_[j]);
      best = std::max(best, col);
    }
    return best;
  }

  int n_ = 0;
  double anorm_ = 0.0;
  std::vector<cplx> dl_, d_, du_, du2_;
  std::vector<int> ipiv_;
};

struct GeneralizedEig {
  std::vector<cplx> alpha, beta;  // eigenvalues alpha/beta
  std::vector<cplx> vr;           // right eigenvectors, column-major n*n
  int n = 0;
};

// Dense complex generalized eigenproblem A v = lambda B v (QZ). A and B are
// column-major n*n and are preserved (copied internally).
GeneralizedEig zggev(const std::vector<cplx>& a, const std::vector<cplx>& b,
                     int n);

// All eigenvalues (ascending) of the symmetric tridiagonal generalized
// problem K u = lambda M u with M positive definite. Bands are the
// diagonal/subdiagonal of each matrix.
std::vector<double> sym_tridiag_geig(const std::vector<double>& k_diag,
                                     const std::vector<double>& k_sub,
                                     const std::vector<double>& m_diag,
                                     const std::vector<double>& m_sub);

}  // namespace qph::lapack

#endif
