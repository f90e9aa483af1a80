#pragma once

#include <optional>

#include <Eigen/Dense>

// Thin wrappers over the LAPACK routines the solvers rely on.
namespace rpq::linalg {

struct SymmetricEigenpairs {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns, unit norm
};

/// Lowest `count` eigenpairs of the symmetric tridiagonal matrix (diag, offdiag).
SymmetricEigenpairs tridiagonal_lowest(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, int count);

struct GeneralEigenpairs {
  Eigen::VectorXd real;
  Eigen::VectorXd imag;
  // Right eigenvectors in LAPACK packed form: for a complex pair (j, j+1),
  // columns j and j+1 hold the real and imaginary parts.
  Eigen::MatrixXd vectors;
};

/// Eigenvalues and right eigenvectors of a general real matrix (balanced).
GeneralEigenpairs general_eigen(Eigen::MatrixXd a);

/// Solves a tridiagonal system with partial pivoting; nullopt when singular.
std::optional<Eigen::VectorXd> solve_tridiagonal(const Eigen::VectorXd& lower, const Eigen::VectorXd& diag,
                                                 const Eigen::VectorXd& upper, const Eigen::VectorXd& rhs);

}  // namespace rpq::linalg
