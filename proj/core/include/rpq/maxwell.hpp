#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rpq/geometry.hpp"
#include "rpq/modes.hpp"

// Field tensor, Levi-Civita dual and their discrete divergence identities.
//
// A potential is an N-component modes::FieldConfig on a (N-1)-dimensional
// periodic spatial grid; frames supply the time axis x^0. Every derivative is
// the same central difference, so each one trims a frame from both ends of
// the time axis. `first_frame` records the offset into the original frames.
namespace rpq::maxwell {

struct FieldTensor {
  modes::PeriodicGrid grid;
  double time_step;
  int dimension;    // N
  int first_frame;  // index of frames[0] in the source potential
  /// Per frame: (N*N) x points, row mu*N + nu holds f^{mu nu}.
  std::vector<Eigen::MatrixXd> frames;

  double at(int frame, int mu, int nu, int point) const {
    return frames[static_cast<std::size_t>(frame)](mu * dimension + nu, point);
  }
};

/// Totally antisymmetric rank-(N-2) tensor stored by ascending index sets.
struct DualTensor {
  modes::PeriodicGrid grid;
  double time_step;
  int dimension;
  int first_frame;
  std::vector<std::vector<int>> index_sets;  // ascending, size N-2
  /// Per frame: index_sets.size() x points.
  std::vector<Eigen::MatrixXd> frames;

  int rank() const { return dimension - 2; }
  /// Signed component for any index order; 0 on repeated indices.
  double component(int frame, std::span<const int> indices, int point) const;
};

/// Largest N for which dual_tensor materializes the dual.
inline constexpr int kMaxStoredDualDimension = 6;

/// f^{mu nu} = g^{mu mu} d_mu xi^nu - g^{nu nu} d_nu xi^mu.
/// Throws DimensionError unless components = g.dim() = grid dimension + 1 and
/// DomainError with fewer than 3 frames.
FieldTensor field_tensor(const modes::FieldConfig& potential, const geometry::Metric& g);

/// fhat^{C} = sum_{a < b} sgn(C, a, b) g_aa g_bb f^{ab}. With this convention
/// the double dual at N = 4 is -f. Throws DomainError for N > 6; use the
/// streaming jacobi_residual overload there.
DualTensor dual_tensor(const FieldTensor& f, const geometry::Metric& g);

/// max over points and free indices of |d_mu fhat^{... mu}|, divided by the
/// RMS (over points) of the Frobenius norm of the stored components. Zero
/// for rank < 1 or when fewer than 3 frames remain.
double jacobi_residual(const DualTensor& fhat);
/// Same quantity computed without materializing the dual; works for any N.
double jacobi_residual(const FieldTensor& f, const geometry::Metric& g);

/// max |d_mu xi^mu| divided by the RMS Frobenius norm of d_mu xi^nu.
double lorenz_gauge_residual(const modes::FieldConfig& potential, const geometry::Metric& g);

/// Checks the Lorenz gauge of `potential` first (GaugeViolationError above
/// gauge_tol), then returns max |d_nu f^{mu nu}| / RMS Frobenius norm of f.
double source_free_residual(const FieldTensor& f, const modes::FieldConfig& potential, const geometry::Metric& g,
                            double gauge_tol = 1e-6);

struct ResidualRow {
  std::string identity;  // jacobi, source_free, lorenz_gauge
  int dimension;
  double spacing;
  double residual;
};

/// Writes `identity,N,h,residual`.
void write_residual_csv(std::ostream& out, std::span<const ResidualRow> rows);

}  // namespace rpq::maxwell
