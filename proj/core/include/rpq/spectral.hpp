#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rpq/grid.hpp"

namespace rpq::spectral {

/// Finite-difference operator -(1/2m) d^2/dq^2 + V(q) on the interior nodes of
/// a grid with Dirichlet walls at both end points.
struct Hamiltonian1D {
  Grid1D grid;
  double mass;
  Eigen::VectorXd potential;  // interior nodes q_1 .. q_{points-2}

  int size() const { return static_cast<int>(potential.size()); }
  /// Kinetic stencil coefficient 1/(2 m h^2).
  double kinetic() const;
  Eigen::VectorXd diagonal() const;
  Eigen::VectorXd off_diagonal() const;
  Eigen::MatrixXd dense() const;
};

Hamiltonian1D fd_hamiltonian(const Grid1D& grid, const std::function<double(double)>& potential,
                             double mass = 1.0);

/// (1/2)(-d^2/dq^2 + eta q^2).
Hamiltonian1D oscillator_hamiltonian(double eta, const Grid1D& grid);

enum class Branch { positive, negative };

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending for the positive branch
  std::string scheme;
  double eta;
  Grid1D grid;
  Eigen::MatrixXd eigenvectors;  // interior samples, unit-norm columns
};

/// Lowest `count` levels of (1/2)(-d^2/dq^2 + eta q^2).
/// Throws DomainError for eta <= 0 or count outside [1, interior points].
Spectrum schrodinger_spectrum(double eta, const Grid1D& grid, int count);

/// Stationary relativistic oscillator [(E - eta q^2/2)^2 + d^2/dq^2] psi = psi.
///
/// The quadratic eigenproblem is linearized on the doubled state (psi, E psi)
/// and solved with a dense nonsymmetric eigensolver. Real eigenvalues are kept,
/// polished by inverse iteration, and split into branches by the sign of the
/// charge psi^T (E - V) psi. The positive branch is reported in ascending
/// order; the negative branch in descending order (closest to zero first).
/// Throws NumericalError when fewer than `count` levels pass the residual
/// check ||Q(E) psi|| / ||psi|| <= 1e-8.
Spectrum kg_oscillator_spectrum(double eta, const Grid1D& grid, int count, Branch branch = Branch::positive);

/// As kg_oscillator_spectrum with the right-hand side 1 - R(q)/3.
Spectrum kk_oscillator_spectrum(double eta, const Grid1D& grid, int count, Branch branch = Branch::positive);

/// R(q) = (eta q^2)^2 / 2.
double curvature_scalar(double eta, double q);

/// Q(E) = (E - V)^2 + D2 - (1 - R/3) on the interior nodes, V = eta q^2 / 2.
class QuadraticOperator {
 public:
  QuadraticOperator(double eta, const Grid1D& grid, bool kaluza_klein);

  int size() const { return static_cast<int>(potential_.size()); }
  const Eigen::VectorXd& potential() const { return potential_; }

  Eigen::VectorXd apply(double energy, const Eigen::VectorXd& psi) const;
  /// Diagonal of Q(E); the off-diagonal is the constant 1/h^2.
  Eigen::VectorXd diagonal(double energy) const;
  double coupling() const { return inv_h2_; }

  /// ||Q(E) psi|| / ||psi||.
  double residual(double energy, const Eigen::VectorXd& psi) const;
  /// psi^T (E - V) psi / psi^T psi.
  double charge(double energy, const Eigen::VectorXd& psi) const;

 private:
  Eigen::VectorXd potential_;
  Eigen::VectorXd rest_;  // 1 - R/3
  double inv_h2_;
};

/// [-6 eta^(-1/4), 6 eta^(-1/4)] with `points` nodes; eta must be > 0.
Grid1D default_oscillator_grid(double eta, int points = 401);

struct NonrelRow {
  double eta;
  /// max over n <= 3 of |E_n^KG - 1 - E_n^S| / E_n^S on a shared grid.
  double max_relative_deviation;
};

/// Throws DomainError for an empty list, non-positive or non-descending values.
std::vector<NonrelRow> nonrel_limit_report(std::span<const double> etas, int points = 401);

}  // namespace rpq::spectral
