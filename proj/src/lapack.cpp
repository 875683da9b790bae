#include "qph/lapack.hpp"

namespace qph::lapack {

GeneralizedEig zggev(const std::vector<cplx>& a, const std::vector<cplx>& b,
                     int n) {
  GeneralizedEig out;
  out.n = n;
  out.alpha.assign(n, cplx(0));
  out.beta.assign(n, cplx(0));
  out.vr.assign(static_cast<size_t>(n) * n, cplx(0));

  std::vector<cplx> aw = a, bw = b;
  std::vector<double> rwork(8 * static_cast<size_t>(n));
  const char jobvl = 'N', jobvr = 'V';
  int info = 0;
  cplx vl_dummy;
  const int ldvl = 1;

  int lwork = -1;
  cplx wksize;
  zggev_(&jobvl, &jobvr, &n, aw.data(), &n, bw.data(), &n, out.alpha.data(),
         out.beta.data(), &vl_dummy, &ldvl, out.vr.data(), &n, &wksize, &lwork,
         rwork.data(), &info);
  lwork = static_cast<int>(wksize.real());
  std::vector<cplx> work(static_cast<size_t>(lwork));
  zggev_(&jobvl, &jobvr, &n, aw.data(), &n, bw.data(), &n, out.alpha.data(),
         out.beta.data(), &vl_dummy, &ldvl, out.vr.data(), &n, work.data(),
         &lwork, rwork.data(), &info);
  if (info != 0)
    throw NumericalError("zggev failed, info=" + std::to_string(info));
  return out;
}

std::vector<double> sym_tridiag_geig(const std::vector<double>& k_diag,
                                     const std::vector<double>& k_sub,
                                     const std::vector<double>& m_diag,
                                     const std::vector<double>& m_sub) {
  const int n = static_cast<int>(k_diag.size());
  const int ka = 1, kb = 1, ldab = 2;
  // Lower banded storage: ab(0,j) = diag, ab(1,j) = subdiagonal.
  std::vector<double> ab(2 * static_cast<size_t>(n), 0.0);
  std::vector<double> bb(2 * static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    ab[2 * j] = k_diag[j];
    bb[2 * j] = m_diag[j];
    if (j + 1 < n) {
      ab[2 * j + 1] = k_sub[j];
      bb[2 * j + 1] = m_sub[j];
    }
  }
  std::vector<double> w(n), work(3 * static_cast<size_t>(n));
  const char jobz = 'N', uplo = 'L';
  double z_dummy;
  const int ldz = 1;
  int info = 0;
  dsbgv_(&jobz, &uplo, &n, &ka, &kb, ab.data(), &ldab, bb.data(), &ldab,
         w.data(), &z_dummy, &ldz, work.data(), &info);
  if (info != 0)
    throw NumericalError("dsbgv failed, info=" + std::to_string(info));
  return w;
}

}  // namespace qph::lapack
