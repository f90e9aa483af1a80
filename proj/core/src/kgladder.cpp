#include "rpq/kgladder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rpq/csv.hpp"
#include "rpq/error.hpp"

namespace rpq::kgladder {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNumericTol = 1e-12;

void check_mass(double m) {
  if (!(m > 0.0)) throw DomainError("base mass m must be > 0");
}

// Multiplier of d_mu d^mu acting on e^{i p.x}.
double wave_operator(const PlaneWave& wave, const geometry::Metric& g) { return -contract(g, wave.p); }

// Dyadic coefficient for harmonic n: (1 + n/2) - i n/4.
std::complex<double> coefficient(int n) { return {1.0 + 0.5 * n, -0.25 * n}; }

std::complex<double> psi_at(const std::vector<EquivalenceTerm>& terms, double m, double tau) {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms) sum += t.coefficient * std::polar(1.0, t.n * m * tau);
  return sum;
}

}  // namespace

std::string to_string(Convention c) { return c == Convention::eq5 ? "eq5" : "eq12"; }

Convention parse_convention(const std::string& text) {
  if (text == "eq5") return Convention::eq5;
  if (text == "eq12") return Convention::eq12;
  throw DomainError("unknown convention '" + text + "' (expected eq5 or eq12)");
}

double effective_mass_squared(const HarmonicMode& mode) {
  check_mass(mode.mass);
  const double m2 = mode.mass * mode.mass;
  if (mode.convention == Convention::eq5) return (2.0 * mode.n + 1.0) * m2;
  const double nm = mode.n * mode.mass;
  return nm * nm;
}

double contract(const geometry::Metric& g, std::span<const double> p) {
  if (static_cast<int>(p.size()) != g.dim()) {
    throw DimensionError("momentum has " + std::to_string(p.size()) + " components for a metric of dimension " +
                         std::to_string(g.dim()));
  }
  double s = 0.0;
  for (int mu = 0; mu < g.dim(); ++mu) s += g[mu] * p[static_cast<std::size_t>(mu)] * p[static_cast<std::size_t>(mu)];
  return s;
}

double stuckelberg_residual(const HarmonicMode& mode, const PlaneWave& wave, const geometry::Metric& g,
                            double curvature) {
  check_mass(mode.mass);
  const double lhs = wave_operator(wave, g) + curvature / 3.0;
  std::complex<double> rhs;
  if (mode.convention == Convention::eq5) {
    // -2 i m d/dtau on e^{-i m (n + 1/2) tau}.
    const std::complex<double> d_tau(0.0, -mode.mass * (mode.n + 0.5));
    rhs = std::complex<double>(0.0, -2.0 * mode.mass) * d_tau;
  } else {
    // d^2/dtau^2 on e^{i n m tau}.
    const std::complex<double> d_tau(0.0, mode.n * mode.mass);
    rhs = d_tau * d_tau;
  }
  return std::abs(lhs - rhs);
}

double kg_residual(const PlaneWave& wave, double mass, const geometry::Metric& g, double curvature) {
  return std::abs(wave_operator(wave, g) + mass * mass + curvature / 3.0);
}

PlaneWave on_shell_wave(const HarmonicMode& mode, int dimension) {
  check_mass(mode.mass);
  if (dimension < 2) throw DimensionError("plane waves need N >= 2");
  PlaneWave w{std::vector<double>(static_cast<std::size_t>(dimension), 0.0)};
  const double m = mode.mass;
  if (mode.convention == Convention::eq5) {
    w.p[0] = (mode.n + 1) * m;
    w.p[1] = mode.n * m;
  } else if (mode.n == 0) {
    w.p[0] = m;
    w.p[1] = m;
  } else {
    const double nm = std::abs(mode.n) * m;
    w.p[0] = 1.25 * nm;
    w.p[1] = 0.75 * nm;
  }
  return w;
}

PlaneWave boost(const PlaneWave& wave, double cosh_rapidity, double sinh_rapidity, int axis) {
  if (std::abs(cosh_rapidity * cosh_rapidity - sinh_rapidity * sinh_rapidity - 1.0) > kNumericTol) {
    throw DomainError("boost parameters must satisfy cosh^2 - sinh^2 = 1");
  }
  if (axis < 1 || axis >= static_cast<int>(wave.p.size())) throw IndexError("boost axis out of range");
  PlaneWave out = wave;
  const double e = wave.p[0];
  const double k = wave.p[static_cast<std::size_t>(axis)];
  out.p[0] = cosh_rapidity * e + sinh_rapidity * k;
  out.p[static_cast<std::size_t>(axis)] = sinh_rapidity * e + cosh_rapidity * k;
  return out;
}

EquivalenceReport equivalence_check(double m, int n_min, int n_max, const geometry::Metric& g,
                                    std::span<const OffShell> off_shell) {
  check_mass(m);
  if (n_min > n_max) throw DomainError("equivalence_check needs n_min <= n_max");

  EquivalenceReport report{true, true, true, 0.0, 0.0, 0.0, 0.0, {}};
  for (int n = n_min; n <= n_max; ++n) {
    PlaneWave wave = on_shell_wave({n, m, Convention::eq12}, g.dim());
    for (const auto& o : off_shell) {
      if (o.n != n) continue;
      if (g.dim() < 3) throw DimensionError("off-shell terms need N >= 3");
      wave.p[2] = m * std::sqrt(std::abs(o.offset));
    }
    const double eq12 = stuckelberg_residual({n, m, Convention::eq12}, wave, g);
    report.terms.push_back({n, wave, coefficient(n), {}, eq12, 0.0});
    report.max_eq12_residual = std::max(report.max_eq12_residual, eq12);
    if (eq12 != 0.0) report.eq12_exact = false;
  }

  // (b) Each phase e^{i n m tau} winds n times over 2 pi / m since n m / m = n
  // is an integer; the numeric check evaluates psi at both ends of the period.
  for (const auto& t : report.terms) {
    if ((t.n * m) / m != static_cast<double>(t.n)) report.periodic = false;
  }
  const std::complex<double> start = psi_at(report.terms, m, 0.0);
  report.periodicity_deviation = std::abs(psi_at(report.terms, m, kTwoPi / m) - start) / std::max(1.0, std::abs(start));
  if (report.periodicity_deviation > kNumericTol) report.periodic = false;

  // (c) tau-DFT over one period.
  const int reach = std::max(std::abs(n_min), std::abs(n_max));
  const int samples = 4 * (reach + 1);
  std::vector<std::complex<double>> values(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) values[static_cast<std::size_t>(j)] = psi_at(report.terms, m, kTwoPi / m * j / samples);
  for (auto& t : report.terms) {
    std::complex<double> c = 0.0;
    for (int j = 0; j < samples; ++j) {
      c += values[static_cast<std::size_t>(j)] * std::polar(1.0, -kTwoPi * t.n * j / samples);
    }
    t.recovered = c / static_cast<double>(samples);
    t.kg_residual = kg_residual(t.wave, std::abs(t.n) * m, g);
    report.max_recovery_error = std::max(report.max_recovery_error, std::abs(t.recovered - t.coefficient));
    report.max_kg_residual = std::max(report.max_kg_residual, t.kg_residual);
  }
  report.recovered = report.max_recovery_error <= kNumericTol && report.max_kg_residual == 0.0;
  return report;
}

std::vector<double> MassLadder::masses() const {
  std::vector<double> out;
  for (int n : multiples) out.push_back(n * base);
  for (int d : fractions) out.push_back(base / d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double MassLadder::multiple_period(int n) const {
  if (n < 1) throw DomainError("multiple index must be >= 1");
  return kTwoPi / (n * base);
}

double MassLadder::fraction_period(int d) const {
  if (d < 1) throw DomainError("fraction denominator must be >= 1");
  return d * kTwoPi / base;
}

MassLadder mass_ladder(double m, int n_max, int d_max) {
  check_mass(m);
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  if (d_max < 1) throw DomainError("d_max must be >= 1");
  MassLadder ladder{m, {}, {}};
  for (int n = 1; n <= n_max; ++n) ladder.multiples.push_back(n);
  for (int d = 1; d <= d_max; ++d) ladder.fractions.push_back(d);
  return ladder;
}

double tau_independence_residual(double m, std::span<const Harmonic> content) {
  check_mass(m);
  double sum = 0.0;
  for (const auto& h : content) {
    const double r = h.n * m * std::abs(h.amplitude);
    sum += r * r;
  }
  return std::sqrt(sum);
}

std::vector<LadderRow> ladder_table(Convention convention, double m, int n_min, int n_max) {
  check_mass(m);
  if (n_min > n_max) throw DomainError("ladder needs n_min <= n_max");
  const auto g = geometry::minkowski_metric(4);
  std::vector<LadderRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const HarmonicMode mode{n, m, convention};
    std::string label = to_string(convention);
    if (convention == Convention::eq5 && n < 0) label += "_extrapolated";
    rows.push_back({label, n, m, effective_mass_squared(mode), stuckelberg_residual(mode, on_shell_wave(mode, 4), g)});
  }
  return rows;
}

void write_ladder_csv(std::ostream& out, std::span<const LadderRow> rows) {
  csv::Writer writer(out, {"convention", "n", "m", "effective_mass_squared", "residual"});
  for (const auto& r : rows) {
    writer.row({r.convention, std::to_string(r.n), csv::format_double(r.m),
                csv::format_double(r.effective_mass_squared), csv::format_double(r.residual)});
  }
}

std::vector<ConventionComparison> compare_conventions(double m, int n_max) {
  check_mass(m);
  std::vector<ConventionComparison> out;
  for (int n = 0; n <= n_max; ++n) {
    const double a = effective_mass_squared({n, m, Convention::eq5});
    const double b = effective_mass_squared({n, m, Convention::eq12});
    out.push_back({n, a, b, a != b});
  }
  return out;
}

}  // namespace rpq::kgladder
