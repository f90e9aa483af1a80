#include "rpq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linalg.hpp"
#include "rpq/error.hpp"

namespace rpq::spectral {

namespace {

constexpr double kResidualBound = 1e-8;

void check_count(const Grid1D& grid, int count) {
  const int interior = grid.points() - 2;
  if (count < 1 || count > interior) {
    throw DomainError("count must lie in [1, " + std::to_string(interior) + "] for this grid, got " +
                      std::to_string(count));
  }
}

struct Eigenpair {
  double energy;
  Eigen::VectorXd psi;
  double charge;
};

// Inverse iteration with a Rayleigh-functional update of E; keeps the input
// if the residual does not improve.
Eigenpair polish(const QuadraticOperator& q, double energy, Eigen::VectorXd psi) {
  psi.normalize();
  double best_res = q.residual(energy, psi);
  Eigenpair best{energy, psi, 0.0};
  const Eigen::VectorXd off = Eigen::VectorXd::Constant(q.size() - 1, q.coupling());
  for (int iter = 0; iter < 3 && best_res > 1e-13; ++iter) {
    const double derivative = 2.0 * q.charge(energy, psi);
    if (derivative == 0.0) break;
    energy -= psi.dot(q.apply(energy, psi)) / derivative;
    auto y = linalg::solve_tridiagonal(off, q.diagonal(energy), off, psi);
    if (!y || !y->allFinite()) break;
    psi = y->normalized();
    const double res = q.residual(energy, psi);
    if (res < best_res) {
      best_res = res;
      best = {energy, psi, 0.0};
    }
  }
  best.charge = q.charge(best.energy, best.psi);
  return best;
}

Spectrum solve_quadratic(double eta, const Grid1D& grid, int count, Branch branch, bool kaluza_klein) {
  if (!(eta >= 0.0)) throw DomainError("oscillator stiffness eta must be >= 0");
  check_count(grid, count);
  const QuadraticOperator q(eta, grid, kaluza_klein);
  const int n = q.size();

  // E^2 psi - 2 E V psi + K psi = 0 with K = V^2 + D2 - (1 - R/3), linearized
  // as E [psi; E psi] = [[0, I], [-K, 2V]] [psi; E psi].
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  const Eigen::VectorXd k_diag = q.diagonal(0.0);
  for (int i = 0; i < n; ++i) {
    companion(i, n + i) = 1.0;
    companion(n + i, i) = -k_diag[i];
    if (i > 0) companion(n + i, i - 1) = -q.coupling();
    if (i + 1 < n) companion(n + i, i + 1) = -q.coupling();
    companion(n + i, n + i) = 2.0 * q.potential()[i];
  }
  const auto eig = linalg::general_eigen(std::move(companion));

  std::vector<Eigenpair> kept;
  int complex_count = 0;
  int rejected = 0;
  for (int j = 0; j < 2 * n; ++j) {
    const double re = eig.real[j];
    if (std::abs(eig.imag[j]) > 1e-8 * std::max(1.0, std::abs(re))) {
      ++complex_count;
      continue;
    }
    Eigenpair p = polish(q, re, eig.vectors.col(j).head(n));
    if (q.residual(p.energy, p.psi) > kResidualBound) {
      ++rejected;
      continue;
    }
    const bool wanted = branch == Branch::positive ? p.charge > 0.0 : p.charge < 0.0;
    if (wanted) kept.push_back(std::move(p));
  }

  if (branch == Branch::positive) {
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.energy < b.energy; });
  } else {
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.energy > b.energy; });
  }
  if (static_cast<int>(kept.size()) < count) {
    throw NumericalError("quadratic eigensolver: " + std::to_string(kept.size()) + " of " +
                         std::to_string(count) + " requested levels found (complex: " +
                         std::to_string(complex_count) + ", residual rejects: " + std::to_string(rejected) +
                         ", companion size " + std::to_string(2 * n) + ")");
  }

  std::string scheme = kaluza_klein ? "kk" : "kg";
  if (branch == Branch::negative) scheme += "-negative";
  Spectrum s{{}, scheme, eta, grid, Eigen::MatrixXd(n, count)};
  for (int i = 0; i < count; ++i) {
    s.eigenvalues.push_back(kept[static_cast<std::size_t>(i)].energy);
    s.eigenvectors.col(i) = kept[static_cast<std::size_t>(i)].psi;
  }
  return s;
}

}  // namespace

double Hamiltonian1D::kinetic() const {
  const double h = grid.spacing();
  return 1.0 / (2.0 * mass * h * h);
}

Eigen::VectorXd Hamiltonian1D::diagonal() const { return potential.array() + 2.0 * kinetic(); }

Eigen::VectorXd Hamiltonian1D::off_diagonal() const { return Eigen::VectorXd::Constant(size() - 1, -kinetic()); }

Eigen::MatrixXd Hamiltonian1D::dense() const {
  const int n = size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  h.diagonal() = diagonal();
  h.diagonal(1) = off_diagonal();
  h.diagonal(-1) = off_diagonal();
  return h;
}

Hamiltonian1D fd_hamiltonian(const Grid1D& grid, const std::function<double(double)>& potential, double mass) {
  if (!(mass > 0.0)) throw DomainError("mass must be > 0");
  const int n = grid.points() - 2;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = potential(grid.x(i + 1));
  return {grid, mass, std::move(v)};
}

Hamiltonian1D oscillator_hamiltonian(double eta, const Grid1D& grid) {
  return fd_hamiltonian(grid, [eta](double q) { return 0.5 * eta * q * q; });
}

Spectrum schrodinger_spectrum(double eta, const Grid1D& grid, int count) {
  if (!(eta > 0.0)) throw DomainError("oscillator stiffness eta must be > 0");
  check_count(grid, count);
  const Hamiltonian1D h = oscillator_hamiltonian(eta, grid);
  auto eig = linalg::tridiagonal_lowest(h.diagonal(), h.off_diagonal(), count);
  Spectrum s{{}, "schrodinger", eta, grid, std::move(eig.vectors)};
  s.eigenvalues.assign(eig.values.data(), eig.values.data() + eig.values.size());
  return s;
}

Spectrum kg_oscillator_spectrum(double eta, const Grid1D& grid, int count, Branch branch) {
  return solve_quadratic(eta, grid, count, branch, false);
}

Spectrum kk_oscillator_spectrum(double eta, const Grid1D& grid, int count, Branch branch) {
  return solve_quadratic(eta, grid, count, branch, true);
}

double curvature_scalar(double eta, double q) {
  const double v = eta * q * q;
  return 0.5 * v * v;
}

QuadraticOperator::QuadraticOperator(double eta, const Grid1D& grid, bool kaluza_klein) {
  const int n = grid.points() - 2;
  const double h = grid.spacing();
  inv_h2_ = 1.0 / (h * h);
  potential_.resize(n);
  rest_.resize(n);
  for (int i = 0; i < n; ++i) {
    const double q = grid.x(i + 1);
    potential_[i] = 0.5 * eta * q * q;
    rest_[i] = kaluza_klein ? 1.0 - curvature_scalar(eta, q) / 3.0 : 1.0;
  }
}

Eigen::VectorXd QuadraticOperator::diagonal(double energy) const {
  return (energy - potential_.array()).square() - 2.0 * inv_h2_ - rest_.array();
}

Eigen::VectorXd QuadraticOperator::apply(double energy, const Eigen::VectorXd& psi) const {
  const int n = size();
  Eigen::VectorXd out = diagonal(energy).cwiseProduct(psi);
  out.head(n - 1) += inv_h2_ * psi.tail(n - 1);
  out.tail(n - 1) += inv_h2_ * psi.head(n - 1);
  return out;
}

double QuadraticOperator::residual(double energy, const Eigen::VectorXd& psi) const {
  return apply(energy, psi).norm() / psi.norm();
}

double QuadraticOperator::charge(double energy, const Eigen::VectorXd& psi) const {
  return psi.dot((energy - potential_.array()).matrix().cwiseProduct(psi)) / psi.squaredNorm();
}

Grid1D default_oscillator_grid(double eta, int points) {
  if (!(eta > 0.0)) throw DomainError("default grid needs eta > 0");
  const double half_width = 6.0 * std::pow(eta, -0.25);
  return Grid1D(-half_width, half_width, points);
}

std::vector<NonrelRow> nonrel_limit_report(std::span<const double> etas, int points) {
  if (etas.empty()) throw DomainError("nonrel_limit_report needs at least one eta");
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (!(etas[i] > 0.0)) throw DomainError("eta values must be > 0");
    if (i > 0 && !(etas[i] < etas[i - 1])) throw DomainError("eta values must be strictly descending");
  }
  constexpr int kLevels = 4;
  std::vector<NonrelRow> rows;
  for (double eta : etas) {
    const Grid1D grid = default_oscillator_grid(eta, points);
    const Spectrum schr = schrodinger_spectrum(eta, grid, kLevels);
    const Spectrum kg = kg_oscillator_spectrum(eta, grid, kLevels);
    double worst = 0.0;
    for (int n = 0; n < kLevels; ++n) {
      const double es = schr.eigenvalues[static_cast<std::size_t>(n)];
      worst = std::max(worst, std::abs(kg.eigenvalues[static_cast<std::size_t>(n)] - 1.0 - es) / es);
    }
    rows.push_back({eta, worst});
  }
  return rows;
}

}  // namespace rpq::spectral
