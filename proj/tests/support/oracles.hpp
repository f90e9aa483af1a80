#pragma once

// Reference computations used only by the tests. Each one reaches its answer
// by a route independent of the library code it checks.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "rpq/grid.hpp"

namespace oracle {

/// Number of negative eigenvalues of the symmetric tridiagonal matrix with
/// diagonal `d` and constant off-diagonal `b` (LDL^T pivot signs).
inline int sturm_negative_count(const Eigen::VectorXd& d, double b) {
  int count = 0;
  double q = 1.0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    q = d[i] - (i > 0 ? b * b / q : 0.0);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

/// Diagonal of Q(E) = (E - V)^2 + D2 - (1 - R/3) on the interior nodes.
inline Eigen::VectorXd quadratic_diagonal(double eta, const rpq::Grid1D& grid, bool kk, double e) {
  const int n = grid.points() - 2;
  const double h = grid.spacing();
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    const double q = grid.x(i + 1);
    const double v = 0.5 * eta * q * q;
    const double r = 0.5 * (eta * q * q) * (eta * q * q);
    d[i] = (e - v) * (e - v) - 2.0 / (h * h) - (kk ? 1.0 - r / 3.0 : 1.0);
  }
  return d;
}

/// Positive-charge levels of the quadratic problem in [e_lo, e_hi].
///
/// An eigenvalue branch mu(E) of Q(E) crosses zero with slope
/// 2 psi^T (E - V) psi, so positive-charge levels are exactly the points where
/// the negative count drops as E increases. The interval is scanned on a
/// uniform mesh and each drop is bisected to machine precision.
inline std::vector<double> sturm_positive_levels(double eta, const rpq::Grid1D& grid, bool kk, double e_lo,
                                                 double e_hi, int mesh) {
  const double b = 1.0 / (grid.spacing() * grid.spacing());
  auto count = [&](double e) { return sturm_negative_count(quadratic_diagonal(eta, grid, kk, e), b); };
  std::vector<double> levels;
  double a = e_lo;
  int ca = count(a);
  for (int j = 1; j <= mesh; ++j) {
    const double c = e_lo + (e_hi - e_lo) * j / mesh;
    const int cc = count(c);
    if (cc < ca) {
      double lo = a, hi = c;
      for (int it = 0; it < 200 && hi - lo > 4e-16 * std::abs(hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count(mid) < ca) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      for (int k = 0; k < ca - cc; ++k) levels.push_back(0.5 * (lo + hi));
    }
    a = c;
    ca = cc;
  }
  return levels;
}

/// O(n^2) DFT with the 1/n normalization, a_m = (1/n) sum_j f_j e^{-2 pi i m j / n}.
inline std::vector<std::complex<double>> naive_dft(const std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += f[j] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(m * j % n) / static_cast<double>(n));
    }
    out[m] = s / static_cast<double>(n);
  }
  return out;
}

/// Free heat kernel applied to a centred Gaussian of variance s0: the result
/// is a Gaussian of variance s0 + T/m with amplitude sqrt(s0 / (s0 + T/m)).
inline double heat_gaussian(double x, double center, double s0, double t_over_m) {
  const double s = s0 + t_over_m;
  return std::sqrt(s0 / s) * std::exp(-(x - center) * (x - center) / (2.0 * s));
}

/// Dirichlet FD eigenpair of -(1/2m) D2 on n interior nodes: index k >= 1.
inline double fd_free_eigenvalue(int k, int interior, double h, double mass) {
  const double s = std::sin(k * std::numbers::pi / (2.0 * (interior + 1)));
  return 2.0 * s * s / (mass * h * h);
}

}  // namespace oracle
