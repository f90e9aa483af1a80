#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rpq::modes {

/// Uniform periodic grid on [0, L)^d, n points per axis. Flat indices are
/// row-major with the last axis fastest.
class PeriodicGrid {
 public:
  PeriodicGrid(int dimension, int points_per_axis, double length);

  int dimension() const { return dimension_; }
  int points_per_axis() const { return points_; }
  double length() const { return length_; }
  double spacing() const { return length_ / points_; }
  int size() const;
  double volume_element() const;

  /// Per-axis integer index of a flat index.
  std::vector<int> unflatten(int flat) const;
  int flatten(std::span<const int> index) const;
  double coordinate(int flat, int axis) const;
  /// Flat index shifted periodically by `offset` along `axis`.
  int neighbour(int flat, int axis, int offset) const;

  friend bool operator==(const PeriodicGrid&, const PeriodicGrid&) = default;

 private:
  int dimension_;
  int points_;
  double length_;
};

/// Time series of an N-component field on a periodic grid. Each frame is a
/// components x grid.size() matrix.
struct FieldConfig {
  PeriodicGrid grid;
  double time_step;
  int components;
  std::vector<Eigen::MatrixXd> frames;
};

/// Throws DimensionError if any frame has the wrong shape.
void validate(const FieldConfig& field);

/// Leapfrog for d2/dt2 phi = Laplacian phi, componentwise, with the
/// second-order Taylor start phi^1 = phi^0 + dt v + dt^2/2 L phi^0. Returns
/// steps + 1 frames. Throws StabilityError when dt > h / sqrt(d).
FieldConfig wave_solve(const PeriodicGrid& grid, double time_step, const Eigen::MatrixXd& initial,
                       const Eigen::MatrixXd& velocity, int steps);

/// Staggered leapfrog energy between frames t and t+1:
/// sum [ ((phi^{t+1} - phi^t)/dt)^2 + D+ phi^{t+1} . D+ phi^t ] h^d.
/// The scheme conserves it up to rounding.
std::vector<double> energy_series(const FieldConfig& field);

/// (2/dt) asin((dt/h) sin(k h / 2)).
double discrete_dispersion(double k, double spacing, double time_step);

struct ModeSet {
  /// Set when the modes come from a spatial transform; required by reconstruct.
  std::optional<PeriodicGrid> grid;
  double time_step;
  int components;
  double omega;                                // fundamental frequency
  Eigen::MatrixXd wavevectors;                 // dimension x modes
  std::vector<Eigen::MatrixXcd> coefficients;  // per frame: components x modes
};

/// Spatial DFT of each frame and component, a_k = (1/size) sum_x xi(x) e^{-i k.x},
/// with k = 2 pi m / L and m in (-n/2, n/2]. omega is set to 2 pi / L.
ModeSet decompose(const FieldConfig& field);
/// Inverse of decompose; keeps the real part.
FieldConfig reconstruct(const ModeSet& modes);

/// Single scalar mode a(t) = e^{-i |k| t} sampled at `samples` + 1 points over
/// one period 2 pi / omega.
ModeSet pure_mode(double k, double omega, int samples = 64);

/// Per-mode residual of a'' + k^2 a = 0 (central second difference),
/// normalized by k^2 ||a|| (by ||a|| for k = 0). Needs at least 3 frames.
std::vector<double> mode_residual(const ModeSet& modes);

/// Per-mode max(|k.a| / (|k| |a|), |a^0| / |a|) over all frames; needs a
/// 3-dimensional grid and 4 components (a^0 temporal, a^1..a^3 spatial).
std::vector<double> transversality_residual(const ModeSet& modes);
/// Applies I - k k^T / |k|^2 to the spatial components and zeroes a^0.
ModeSet transverse_projection(const ModeSet& modes);

/// ||xi(2 pi / omega) - xi(0)|| / ||xi(0)||, the final state linearly
/// interpolated between frames. Throws DomainError when the frames do not
/// reach one period.
double periodicity_residual(const ModeSet& modes, double omega);
double periodicity_residual(const FieldConfig& field, double omega);

struct ScanRow {
  double n;  // k / omega
  double k;
  double residual;
  bool admissible;
};

/// Pure-mode periodicity test on the candidate lattice k = (j/4) omega,
/// 0 <= k <= k_max. Throws DomainError for omega <= 0.
std::vector<ScanRow> scan_modes(double omega, double k_max, double tol);
/// The admissible k of scan_modes.
std::vector<double> quantized_mode_scan(double omega, double k_max, double tol);
/// Writes `n,k,residual,admissible`.
void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows);

enum class Scheme { present, standard };
std::string to_string(Scheme scheme);
Scheme parse_scheme(const std::string& text);

struct Level {
  int n;
  long long half_quanta;  // energy = half_quanta * omega / 2
  double energy;
};

/// present: n omega for every integer n (odd in n); standard: (n + 1/2) omega
/// for n >= 0.
Level level(Scheme scheme, double omega, int n);

struct EnergySpectrum {
  Scheme scheme;
  double omega;
  std::vector<Level> levels;  // n = 0 .. n_max
};

EnergySpectrum energy_spectrum(Scheme scheme, double omega, int n_max);
/// Writes `n,energy,scheme,omega`.
void write_energy_csv(std::ostream& out, const EnergySpectrum& spectrum);

/// Writes one frame as a text grid: `x0[,x1,x2],xi0,xi1,...`.
void write_field_snapshot(std::ostream& out, const FieldConfig& field, int frame);

}  // namespace rpq::modes
