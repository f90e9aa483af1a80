#include "linalg.hpp"

#include <lapacke.h>

#include <string>
#include <vector>

#include "rpq/error.hpp"

namespace rpq::linalg {

SymmetricEigenpairs tridiagonal_lowest(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, int count) {
  const lapack_int n = static_cast<lapack_int>(diag.size());
  if (count < 1 || count > n) {
    throw DomainError("requested " + std::to_string(count) + " eigenvalues of a " + std::to_string(n) +
                      "-dimensional operator");
  }
  Eigen::VectorXd d = diag;
  Eigen::VectorXd e(n);
  e.head(n - 1) = offdiag;
  e[n - 1] = 0.0;

  lapack_int found = 0;
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z(n, count);
  std::vector<lapack_int> ifail(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_dstevx(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0, 0.0, 1, count,
                                         2.0 * LAPACKE_dlamch('S'), &found, w.data(), z.data(), n, ifail.data());
  if (info != 0 || found != count) {
    throw NumericalError("dstevx failed (info " + std::to_string(info) + ", found " + std::to_string(found) +
                         " of " + std::to_string(count) + " eigenpairs)");
  }
  return {w.head(count), z};
}

GeneralEigenpairs general_eigen(Eigen::MatrixXd a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  GeneralEigenpairs out{Eigen::VectorXd(n), Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
  const lapack_int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'V', n, a.data(), n, out.real.data(),
                                        out.imag.data(), nullptr, n, out.vectors.data(), n);
  if (info != 0) throw NumericalError("dgeev failed to converge (info " + std::to_string(info) + ")");
  return out;
}

std::optional<Eigen::VectorXd> solve_tridiagonal(const Eigen::VectorXd& lower, const Eigen::VectorXd& diag,
                                                 const Eigen::VectorXd& upper, const Eigen::VectorXd& rhs) {
  const lapack_int n = static_cast<lapack_int>(diag.size());
  Eigen::VectorXd dl = lower, d = diag, du = upper, b = rhs;
  const lapack_int info = LAPACKE_dgtsv(LAPACK_COL_MAJOR, n, 1, dl.data(), d.data(), du.data(), b.data(), n);
  if (info != 0) return std::nullopt;
  return b;
}

}  // namespace rpq::linalg
