#pragma once

#include <ostream>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "rpq/grid.hpp"

// Euclidean (imaginary-time) slicing of the proper-time evolution on a 1D grid.
namespace rpq::propagator {

struct FreeModel {
  double mass = 1.0;
};

/// V(q) = eta q^2 / 2.
struct OscillatorModel {
  double mass = 1.0;
  double eta = 1.0;
};

using Model = std::variant<FreeModel, OscillatorModel>;

double model_mass(const Model& model);
double model_potential(const Model& model, double q);

class GridFunction {
 public:
  GridFunction(Grid1D grid, Eigen::VectorXd values);
  /// Samples `f` at every grid node.
  template <class F>
  static GridFunction sample(const Grid1D& grid, F&& f) {
    Eigen::VectorXd v(grid.points());
    for (int i = 0; i < grid.points(); ++i) v[i] = f(grid.x(i));
    return GridFunction(grid, std::move(v));
  }

  const Grid1D& grid() const { return grid_; }
  const Eigen::VectorXd& values() const { return values_; }

 private:
  Grid1D grid_;
  Eigen::VectorXd values_;
};

/// Trapezoid integral of f.
double integral(const GridFunction& f);
/// Variance of f read as an (unnormalized) density.
double variance(const GridFunction& f);
/// sqrt(h * sum (a - b)^2); grids must match.
double l2_distance(const GridFunction& a, const GridFunction& b);

struct GridKernel {
  Grid1D grid;
  double step;
  Eigen::MatrixXd matrix;  // kernel density K(x_i, x_j)
  /// Six Gaussian widths exceed half the grid span.
  bool boundary_truncated;
};

/// K(x, y) = N(x) exp(-m (x - y)^2 / 2 eps) exp(-eps V((x + y) / 2)).
/// N(x) normalizes the Gaussian factor to unit trapezoid integral in y; the
/// potential factor is applied after normalization so it is not cancelled.
GridKernel short_time_kernel(const Model& model, const Grid1D& grid, double epsilon);

/// Applies the kernel `steps` times with trapezoid quadrature.
GridFunction evolve(const GridKernel& kernel, const GridFunction& f, int steps);

/// exp(-T H) f with H = -(1/2m) D2 + V the Dirichlet finite-difference
/// Hamiltonian, via a full symmetric eigendecomposition. End nodes are zero.
GridFunction oracle_evolution(const Model& model, const GridFunction& f, double total_time);

struct ConvergenceRow {
  double epsilon;
  double l2_error;
  double order_estimate;  // NaN on the first row
};

/// Slices [0, T] with each epsilon and compares against oracle_evolution.
/// Throws DomainError for an empty list or an epsilon that does not divide T.
std::vector<ConvergenceRow> convergence_study(const Model& model, const GridFunction& f, double total_time,
                                              std::span<const double> epsilons);

/// Writes `epsilon,l2_error,order_estimate`; a NaN order is written as an empty field.
void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows);

}  // namespace rpq::propagator
