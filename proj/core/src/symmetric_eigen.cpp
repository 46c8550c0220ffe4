#include "symmetric_eigen.hpp"

#include <limits>
#include <string>
#include <vector>

#include "locfin/spectral.hpp"

extern "C" void dsyevd_(const char* jobz, const char* uplo, const int* n, double* a, const int* lda, double* w,
                        double* work, const int* lwork, int* iwork, const int* liwork, int* info);

namespace locfin::detail {

SymmetricEigen symmetricEigen(const Eigen::MatrixXd& a, bool wantVectors) {
  if (a.rows() != a.cols()) throw std::invalid_argument("symmetricEigen needs a square matrix");
  if (a.rows() > std::numeric_limits<int>::max()) throw std::length_error("matrix too large for LAPACK");
  SymmetricEigen out;
  const int n = static_cast<int>(a.rows());
  out.values.resize(n);
  if (n == 0) return out;

  Eigen::MatrixXd work = a;
  const char jobz = wantVectors ? 'V' : 'N';
  const char uplo = 'L';
  int info = 0;
  int lwork = -1;
  int liwork = -1;
  double workQuery = 0.0;
  int iworkQuery = 0;
  dsyevd_(&jobz, &uplo, &n, work.data(), &n, out.values.data(), &workQuery, &lwork, &iworkQuery, &liwork, &info);
  if (info != 0) throw ConvergenceError("dsyevd workspace query failed with info " + std::to_string(info), 0.0);
  lwork = static_cast<int>(workQuery);
  liwork = iworkQuery;
  std::vector<double> buffer(static_cast<std::size_t>(lwork));
  std::vector<int> ibuffer(static_cast<std::size_t>(liwork));
  dsyevd_(&jobz, &uplo, &n, work.data(), &n, out.values.data(), buffer.data(), &lwork, ibuffer.data(), &liwork,
          &info);
  if (info != 0) throw ConvergenceError("dsyevd failed with info " + std::to_string(info), 0.0);
  if (wantVectors) out.vectors = std::move(work);
  return out;
}

}  // namespace locfin::detail
