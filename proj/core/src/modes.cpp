#include "rpq/modes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <fftw3.h>

#include "rpq/csv.hpp"
#include "rpq/error.hpp"

namespace rpq::modes {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Owns an FFTW buffer pair and plan for one transform direction.
class FftPlan {
 public:
  FftPlan(const PeriodicGrid& grid, int sign) : size_(grid.size()) {
    in_ = fftw_alloc_complex(static_cast<std::size_t>(size_));
    out_ = fftw_alloc_complex(static_cast<std::size_t>(size_));
    std::vector<int> dims(static_cast<std::size_t>(grid.dimension()), grid.points_per_axis());
    plan_ = fftw_plan_dft(grid.dimension(), dims.data(), in_, out_, sign, FFTW_ESTIMATE);
    if (!plan_) throw NumericalError("FFTW plan creation failed");
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  ~FftPlan() {
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }

  std::complex<double>* in() { return reinterpret_cast<std::complex<double>*>(in_); }
  const std::complex<double>* out() const { return reinterpret_cast<const std::complex<double>*>(out_); }
  void execute() { fftw_execute(plan_); }

 private:
  int size_;
  fftw_complex* in_;
  fftw_complex* out_;
  fftw_plan plan_;
};

Eigen::MatrixXd laplacian(const PeriodicGrid& grid, const Eigen::MatrixXd& phi) {
  const double inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(phi.rows(), phi.cols());
  for (int p = 0; p < grid.size(); ++p) {
    for (int a = 0; a < grid.dimension(); ++a) {
      out.col(p) += (phi.col(grid.neighbour(p, a, 1)) - 2.0 * phi.col(p) + phi.col(grid.neighbour(p, a, -1))) * inv_h2;
    }
  }
  return out;
}

// Frame `t` as a continuous index; linear interpolation between neighbours.
template <class Frame>
Frame interpolate(const std::vector<Frame>& frames, double time_step, double t) {
  const double pos = t / time_step;
  const double last = static_cast<double>(frames.size() - 1);
  if (pos > last * (1.0 + 1e-12) + 1e-12) {
    throw DomainError("frames cover " + csv::format_double(last * time_step) + ", period needs " +
                      csv::format_double(t));
  }
  const double clamped = std::min(pos, last);
  const auto lo = static_cast<std::size_t>(std::floor(clamped));
  const double frac = clamped - static_cast<double>(lo);
  if (lo + 1 >= frames.size() || frac == 0.0) return frames[lo];
  return (1.0 - frac) * frames[lo] + frac * frames[lo + 1];
}

template <class Frame>
double relative_change(const Frame& start, const Frame& end) {
  const double base = start.norm();
  const double diff = (end - start).norm();
  return base > 0.0 ? diff / base : diff;
}

void check_omega(double omega) {
  if (!(omega > 0.0)) throw DomainError("omega must be > 0");
}

}  // namespace

PeriodicGrid::PeriodicGrid(int dimension, int points_per_axis, double length)
    : dimension_(dimension), points_(points_per_axis), length_(length) {
  if (dimension < 1) throw DomainError("periodic grid dimension must be >= 1");
  if (points_per_axis < 2) throw DomainError("periodic grid needs at least 2 points per axis");
  if (std::pow(static_cast<double>(points_per_axis), dimension) > std::numeric_limits<int>::max()) {
    throw DomainError("periodic grid has more points than an int index can address");
  }
  if (!(length > 0.0)) throw DomainError("periodic grid length must be > 0");
}

int PeriodicGrid::size() const {
  int s = 1;
  for (int a = 0; a < dimension_; ++a) s *= points_;
  return s;
}

double PeriodicGrid::volume_element() const { return std::pow(spacing(), dimension_); }

std::vector<int> PeriodicGrid::unflatten(int flat) const {
  std::vector<int> idx(static_cast<std::size_t>(dimension_));
  for (int a = dimension_ - 1; a >= 0; --a) {
    idx[static_cast<std::size_t>(a)] = flat % points_;
    flat /= points_;
  }
  return idx;
}

int PeriodicGrid::flatten(std::span<const int> index) const {
  int flat = 0;
  for (int i : index) flat = flat * points_ + i;
  return flat;
}

double PeriodicGrid::coordinate(int flat, int axis) const {
  return unflatten(flat)[static_cast<std::size_t>(axis)] * spacing();
}

int PeriodicGrid::neighbour(int flat, int axis, int offset) const {
  int stride = 1;
  for (int a = dimension_ - 1; a > axis; --a) stride *= points_;
  const int i = (flat / stride) % points_;
  const int j = ((i + offset) % points_ + points_) % points_;
  return flat + (j - i) * stride;
}

void validate(const FieldConfig& field) {
  if (field.components < 1) throw DimensionError("field needs at least one component");
  for (const auto& f : field.frames) {
    if (f.rows() != field.components || f.cols() != field.grid.size()) {
      throw DimensionError("field frame shape differs from components x grid size");
    }
  }
}

FieldConfig wave_solve(const PeriodicGrid& grid, double time_step, const Eigen::MatrixXd& initial,
                       const Eigen::MatrixXd& velocity, int steps) {
  if (!(time_step > 0.0)) throw DomainError("time step must be > 0");
  if (steps < 0) throw DomainError("steps must be >= 0");
  const double bound = grid.spacing() / std::sqrt(static_cast<double>(grid.dimension()));
  if (time_step > bound) {
    throw StabilityError("CFL violated: dt = " + csv::format_double(time_step) + " > h/sqrt(d) = " +
                         csv::format_double(bound));
  }
  if (initial.cols() != grid.size() || velocity.rows() != initial.rows() || velocity.cols() != initial.cols()) {
    throw DimensionError("initial data must be components x grid size, with matching velocity");
  }

  FieldConfig field{grid, time_step, static_cast<int>(initial.rows()), {initial}};
  field.frames.reserve(static_cast<std::size_t>(steps) + 1);
  if (steps == 0) return field;
  const double dt2 = time_step * time_step;
  field.frames.push_back(initial + time_step * velocity + 0.5 * dt2 * laplacian(grid, initial));
  for (int s = 2; s <= steps; ++s) {
    const auto& cur = field.frames[static_cast<std::size_t>(s - 1)];
    const auto& prev = field.frames[static_cast<std::size_t>(s - 2)];
    field.frames.push_back(2.0 * cur - prev + dt2 * laplacian(grid, cur));
  }
  return field;
}

std::vector<double> energy_series(const FieldConfig& field) {
  validate(field);
  const auto& grid = field.grid;
  const double h = grid.spacing();
  std::vector<double> out;
  for (std::size_t t = 0; t + 1 < field.frames.size(); ++t) {
    const auto& a = field.frames[t];
    const auto& b = field.frames[t + 1];
    double e = ((b - a) / field.time_step).squaredNorm();
    for (int p = 0; p < grid.size(); ++p) {
      for (int ax = 0; ax < grid.dimension(); ++ax) {
        const int q = grid.neighbour(p, ax, 1);
        e += ((b.col(q) - b.col(p)) / h).dot((a.col(q) - a.col(p)) / h);
      }
    }
    out.push_back(e * grid.volume_element());
  }
  return out;
}

double discrete_dispersion(double k, double spacing, double time_step) {
  const double s = (time_step / spacing) * std::sin(0.5 * k * spacing);
  if (std::abs(s) > 1.0) throw StabilityError("mode outside the stable band of the leapfrog scheme");
  return 2.0 / time_step * std::asin(s);
}

ModeSet decompose(const FieldConfig& field) {
  validate(field);
  const auto& grid = field.grid;
  const int size = grid.size();
  const int n = grid.points_per_axis();

  ModeSet modes{grid, field.time_step, field.components, kTwoPi / grid.length(),
                Eigen::MatrixXd(grid.dimension(), size), {}};
  for (int f = 0; f < size; ++f) {
    const auto idx = grid.unflatten(f);
    for (int a = 0; a < grid.dimension(); ++a) {
      const int m = idx[static_cast<std::size_t>(a)];
      const int centred = m <= n / 2 ? m : m - n;
      modes.wavevectors(a, f) = kTwoPi * centred / grid.length();
    }
  }

  FftPlan plan(grid, FFTW_FORWARD);
  for (const auto& frame : field.frames) {
    Eigen::MatrixXcd coeff(field.components, size);
    for (int c = 0; c < field.components; ++c) {
      for (int p = 0; p < size; ++p) plan.in()[p] = frame(c, p);
      plan.execute();
      for (int p = 0; p < size; ++p) coeff(c, p) = plan.out()[p] / static_cast<double>(size);
    }
    modes.coefficients.push_back(std::move(coeff));
  }
  return modes;
}

FieldConfig reconstruct(const ModeSet& modes) {
  if (!modes.grid) throw DomainError("reconstruct needs a mode set produced from a spatial grid");
  const auto& grid = *modes.grid;
  const int size = grid.size();
  FieldConfig field{grid, modes.time_step, modes.components, {}};
  FftPlan plan(grid, FFTW_BACKWARD);
  for (const auto& coeff : modes.coefficients) {
    if (coeff.rows() != modes.components || coeff.cols() != size) {
      throw DimensionError("mode coefficients do not match the grid");
    }
    Eigen::MatrixXd frame(modes.components, size);
    for (int c = 0; c < modes.components; ++c) {
      for (int p = 0; p < size; ++p) plan.in()[p] = coeff(c, p);
      plan.execute();
      for (int p = 0; p < size; ++p) frame(c, p) = plan.out()[p].real();
    }
    field.frames.push_back(std::move(frame));
  }
  return field;
}

ModeSet pure_mode(double k, double omega, int samples) {
  check_omega(omega);
  if (samples < 2) throw DomainError("pure_mode needs at least 2 samples per period");
  const double period = kTwoPi / omega;
  const double dt = period / samples;
  ModeSet modes{std::nullopt, dt, 1, omega, Eigen::MatrixXd::Constant(1, 1, k), {}};
  for (int j = 0; j <= samples; ++j) {
    // The last sample sits exactly at the period.
    const double t = j == samples ? period : j * dt;
    modes.coefficients.push_back(Eigen::MatrixXcd::Constant(1, 1, std::polar(1.0, -std::abs(k) * t)));
  }
  return modes;
}

std::vector<double> mode_residual(const ModeSet& modes) {
  const auto frames = modes.coefficients.size();
  if (frames < 3) throw DomainError("mode_residual needs at least 3 frames");
  const auto count = modes.wavevectors.cols();
  const double inv_dt2 = 1.0 / (modes.time_step * modes.time_step);
  std::vector<double> out;
  for (Eigen::Index m = 0; m < count; ++m) {
    const double k2 = modes.wavevectors.col(m).squaredNorm();
    double res2 = 0.0;
    double norm2 = 0.0;
    for (std::size_t t = 1; t + 1 < frames; ++t) {
      const Eigen::VectorXcd a = modes.coefficients[t].col(m);
      const Eigen::VectorXcd r = (modes.coefficients[t + 1].col(m) - 2.0 * a + modes.coefficients[t - 1].col(m)) *
                                     inv_dt2 +
                                 k2 * a;
      res2 += r.squaredNorm();
      norm2 += a.squaredNorm();
    }
    const double scale = (k2 > 0.0 ? k2 : 1.0) * std::sqrt(norm2);
    out.push_back(scale > 0.0 ? std::sqrt(res2) / scale : std::sqrt(res2));
  }
  return out;
}

std::vector<double> transversality_residual(const ModeSet& modes) {
  if (modes.wavevectors.rows() != 3 || modes.components != 4) {
    throw DimensionError("transversality needs 3 spatial dimensions and 4 components");
  }
  std::vector<double> out(static_cast<std::size_t>(modes.wavevectors.cols()), 0.0);
  for (Eigen::Index m = 0; m < modes.wavevectors.cols(); ++m) {
    const Eigen::Vector3d k = modes.wavevectors.col(m);
    const double kn = k.norm();
    for (const auto& coeff : modes.coefficients) {
      const Eigen::Vector4cd a = coeff.col(m);
      const double an = a.norm();
      if (an == 0.0) continue;
      double r = std::abs(a[0]) / an;
      if (kn > 0.0) r = std::max(r, std::abs(k.cast<std::complex<double>>().dot(a.tail<3>())) / (kn * an));
      out[static_cast<std::size_t>(m)] = std::max(out[static_cast<std::size_t>(m)], r);
    }
  }
  return out;
}

ModeSet transverse_projection(const ModeSet& modes) {
  if (modes.wavevectors.rows() != 3 || modes.components != 4) {
    throw DimensionError("transverse projection needs 3 spatial dimensions and 4 components");
  }
  ModeSet out = modes;
  for (Eigen::Index m = 0; m < modes.wavevectors.cols(); ++m) {
    const Eigen::Vector3d k = modes.wavevectors.col(m);
    const double k2 = k.squaredNorm();
    const Eigen::Matrix3d p = k2 > 0.0 ? Eigen::Matrix3d(Eigen::Matrix3d::Identity() - k * k.transpose() / k2)
                                       : Eigen::Matrix3d::Identity();
    for (auto& coeff : out.coefficients) {
      coeff(0, m) = 0.0;
      coeff.col(m).tail<3>() = p.cast<std::complex<double>>() * coeff.col(m).tail<3>();
    }
  }
  return out;
}

double periodicity_residual(const ModeSet& modes, double omega) {
  check_omega(omega);
  if (modes.coefficients.empty()) throw DomainError("periodicity_residual needs at least one frame");
  const auto end = interpolate(modes.coefficients, modes.time_step, kTwoPi / omega);
  return relative_change(modes.coefficients.front(), end);
}

double periodicity_residual(const FieldConfig& field, double omega) {
  check_omega(omega);
  validate(field);
  if (field.frames.empty()) throw DomainError("periodicity_residual needs at least one frame");
  const auto end = interpolate(field.frames, field.time_step, kTwoPi / omega);
  return relative_change(field.frames.front(), end);
}

std::vector<ScanRow> scan_modes(double omega, double k_max, double tol) {
  check_omega(omega);
  constexpr int kSubdivisions = 4;
  std::vector<ScanRow> rows;
  if (!(k_max >= 0.0)) return rows;
  const auto last = static_cast<long long>(std::floor(kSubdivisions * k_max / omega));
  for (long long j = 0; j <= last; ++j) {
    const double n = static_cast<double>(j) / kSubdivisions;
    const double k = n * omega;
    if (k > k_max) break;
    const double r = periodicity_residual(pure_mode(k, omega), omega);
    rows.push_back({n, k, r, r <= tol});
  }
  return rows;
}

std::vector<double> quantized_mode_scan(double omega, double k_max, double tol) {
  std::vector<double> ks;
  for (const auto& row : scan_modes(omega, k_max, tol)) {
    if (row.admissible) ks.push_back(row.k);
  }
  return ks;
}

void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows) {
  csv::Writer writer(out, {"n", "k", "residual", "admissible"});
  for (const auto& r : rows) {
    writer.row({csv::format_double(r.n), csv::format_double(r.k), csv::format_double(r.residual),
                r.admissible ? "1" : "0"});
  }
}

std::string to_string(Scheme scheme) { return scheme == Scheme::present ? "present" : "standard"; }

Scheme parse_scheme(const std::string& text) {
  if (text == "present") return Scheme::present;
  if (text == "standard") return Scheme::standard;
  throw DomainError("unknown energy scheme '" + text + "' (expected present or standard)");
}

Level level(Scheme scheme, double omega, int n) {
  check_omega(omega);
  if (scheme == Scheme::standard && n < 0) throw DomainError("standard scheme levels need n >= 0");
  const long long half = scheme == Scheme::present ? 2LL * n : 2LL * n + 1;
  const double energy = scheme == Scheme::present ? n * omega : (n + 0.5) * omega;
  return {n, half, energy};
}

EnergySpectrum energy_spectrum(Scheme scheme, double omega, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  EnergySpectrum s{scheme, omega, {}};
  for (int n = 0; n <= n_max; ++n) s.levels.push_back(level(scheme, omega, n));
  return s;
}

void write_energy_csv(std::ostream& out, const EnergySpectrum& spectrum) {
  csv::Writer writer(out, {"n", "energy", "scheme", "omega"});
  for (const auto& l : spectrum.levels) {
    writer.row({std::to_string(l.n), csv::format_double(l.energy), to_string(spectrum.scheme),
                csv::format_double(spectrum.omega)});
  }
}

void write_field_snapshot(std::ostream& out, const FieldConfig& field, int frame) {
  validate(field);
  if (frame < 0 || frame >= static_cast<int>(field.frames.size())) throw IndexError("snapshot frame out of range");
  std::vector<std::string> header;
  for (int a = 0; a < field.grid.dimension(); ++a) header.push_back("x" + std::to_string(a));
  for (int c = 0; c < field.components; ++c) header.push_back("xi" + std::to_string(c));
  csv::Writer writer(out, header);
  const auto& f = field.frames[static_cast<std::size_t>(frame)];
  for (int p = 0; p < field.grid.size(); ++p) {
    std::vector<std::string> row;
    for (int a = 0; a < field.grid.dimension(); ++a) row.push_back(csv::format_double(field.grid.coordinate(p, a)));
    for (int c = 0; c < field.components; ++c) row.push_back(csv::format_double(f(c, p)));
    writer.row(row);
  }
}

}  // namespace rpq::modes
