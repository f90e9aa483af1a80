#include "rpq/propagator.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rpq/csv.hpp"
#include "rpq/error.hpp"
#include "rpq/spectral.hpp"

namespace rpq::propagator {

namespace {

Eigen::VectorXd trapezoid_weights(const Grid1D& grid) {
  Eigen::VectorXd w = Eigen::VectorXd::Constant(grid.points(), grid.spacing());
  w[0] *= 0.5;
  w[grid.points() - 1] *= 0.5;
  return w;
}

void check_model(const Model& model) {
  if (!(model_mass(model) > 0.0)) throw DomainError("mass must be > 0");
  if (const auto* osc = std::get_if<OscillatorModel>(&model); osc && !(osc->eta >= 0.0)) {
    throw DomainError("oscillator stiffness must be >= 0");
  }
}

}  // namespace

double model_mass(const Model& model) {
  return std::visit([](const auto& m) { return m.mass; }, model);
}

double model_potential(const Model& model, double q) {
  if (const auto* osc = std::get_if<OscillatorModel>(&model)) return 0.5 * osc->eta * q * q;
  return 0.0;
}

GridFunction::GridFunction(Grid1D grid, Eigen::VectorXd values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.points()) {
    throw DimensionError("grid function has " + std::to_string(values_.size()) + " values for " +
                         std::to_string(grid_.points()) + " grid points");
  }
}

double integral(const GridFunction& f) { return trapezoid_weights(f.grid()).dot(f.values()); }

double variance(const GridFunction& f) {
  const Eigen::VectorXd w = trapezoid_weights(f.grid());
  Eigen::VectorXd x(f.grid().points());
  for (int i = 0; i < x.size(); ++i) x[i] = f.grid().x(i);
  const Eigen::VectorXd wf = w.cwiseProduct(f.values());
  const double mass = wf.sum();
  if (mass == 0.0) throw DomainError("variance of a function with zero integral");
  const double mean = wf.dot(x) / mass;
  return wf.dot((x.array() - mean).square().matrix()) / mass;
}

double l2_distance(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid() == b.grid())) throw DimensionError("l2_distance: grid mismatch");
  return std::sqrt(a.grid().spacing()) * (a.values() - b.values()).norm();
}

GridKernel short_time_kernel(const Model& model, const Grid1D& grid, double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("kernel step epsilon must be > 0");
  check_model(model);
  const double m = model_mass(model);
  const int n = grid.points();
  const Eigen::VectorXd w = trapezoid_weights(grid);

  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i) {
    const double xi = grid.x(i);
    for (int j = 0; j < n; ++j) {
      const double d = xi - grid.x(j);
      k(i, j) = std::exp(-m * d * d / (2.0 * epsilon));
    }
    k.row(i) /= k.row(i).dot(w);
    for (int j = 0; j < n; ++j) k(i, j) *= std::exp(-epsilon * model_potential(model, 0.5 * (xi + grid.x(j))));
  }
  const bool truncated = 6.0 * std::sqrt(epsilon / m) > 0.5 * (grid.x_max() - grid.x_min());
  return {grid, epsilon, std::move(k), truncated};
}

GridFunction evolve(const GridKernel& kernel, const GridFunction& f, int steps) {
  if (steps < 0) throw DomainError("evolve: steps must be >= 0");
  if (!(kernel.grid == f.grid())) throw DimensionError("evolve: kernel and function grids differ");
  const Eigen::VectorXd w = trapezoid_weights(f.grid());
  Eigen::VectorXd v = f.values();
  for (int s = 0; s < steps; ++s) v = kernel.matrix * w.cwiseProduct(v);
  return {f.grid(), std::move(v)};
}

GridFunction oracle_evolution(const Model& model, const GridFunction& f, double total_time) {
  if (!(total_time >= 0.0)) throw DomainError("oracle_evolution: T must be >= 0");
  check_model(model);
  if (total_time == 0.0) return f;
  const Grid1D& grid = f.grid();
  const auto h = spectral::fd_hamiltonian(
      grid, [&model](double q) { return model_potential(model, q); }, model_mass(model));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h.dense());
  if (eig.info() != Eigen::Success) throw NumericalError("oracle_evolution: eigendecomposition failed");

  const int n = h.size();
  const Eigen::VectorXd coeff = eig.eigenvectors().transpose() * f.values().segment(1, n);
  const Eigen::VectorXd decay = (-total_time * eig.eigenvalues().array()).exp();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(grid.points());
  out.segment(1, n) = eig.eigenvectors() * decay.cwiseProduct(coeff);
  return {grid, std::move(out)};
}

std::vector<ConvergenceRow> convergence_study(const Model& model, const GridFunction& f, double total_time,
                                              std::span<const double> epsilons) {
  if (epsilons.empty()) throw DomainError("convergence_study: empty epsilon list");
  if (!(total_time > 0.0)) throw DomainError("convergence_study: T must be > 0");
  const GridFunction reference = oracle_evolution(model, f, total_time);

  std::vector<ConvergenceRow> rows;
  for (double eps : epsilons) {
    if (!(eps > 0.0)) throw DomainError("convergence_study: epsilon must be > 0");
    const double ratio = total_time / eps;
    const long long steps = std::llround(ratio);
    if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) > 1e-9 * std::max(1.0, ratio)) {
      throw DomainError("convergence_study: epsilon " + csv::format_double(eps) + " does not divide T = " +
                        csv::format_double(total_time));
    }
    const GridKernel k = short_time_kernel(model, f.grid(), eps);
    const double err = l2_distance(evolve(k, f, static_cast<int>(steps)), reference);
    double order = std::numeric_limits<double>::quiet_NaN();
    if (!rows.empty()) order = std::log(rows.back().l2_error / err) / std::log(rows.back().epsilon / eps);
    rows.push_back({eps, err, order});
  }
  return rows;
}

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows) {
  csv::Writer writer(out, {"epsilon", "l2_error", "order_estimate"});
  for (const auto& r : rows) {
    writer.row({csv::format_double(r.epsilon), csv::format_double(r.l2_error),
                std::isnan(r.order_estimate) ? std::string() : csv::format_double(r.order_estimate)});
  }
}

}  // namespace rpq::propagator
