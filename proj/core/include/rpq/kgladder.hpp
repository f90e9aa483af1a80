#pragma once

#include <complex>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rpq/geometry.hpp"

// Harmonic reduction of the proper-time evolution to Klein-Gordon ladders.
//
// Every residual here is algebraic: a plane wave e^{i p.x} e^{i lambda tau}
// is substituted and derivatives become multipliers (-p^2 for d_mu d^mu,
// i lambda for d/dtau). With dyadic momenta the results are exact zeros.
namespace rpq::kgladder {

/// eq5: proper-time phase e^{-i m (n + 1/2) tau}, ladder (2n+1) m^2.
/// eq12: phase e^{i n m tau}, ladder (n m)^2.
enum class Convention { eq5, eq12 };

std::string to_string(Convention c);
Convention parse_convention(const std::string& text);

struct HarmonicMode {
  int n;
  double mass;
  Convention convention;
};

struct PlaneWave {
  std::vector<double> p;
  std::complex<double> amplitude{1.0, 0.0};
};

/// eq5: (2n+1) m^2; eq12: (n m)^2. Throws DomainError for m <= 0.
double effective_mass_squared(const HarmonicMode& mode);

/// g_mumu p^mu p^mu. Throws DimensionError on a length mismatch.
double contract(const geometry::Metric& g, std::span<const double> p);

/// Residual of the flat proper-time equation (plus a constant curvature
/// offset R/3) for the mode's tau phase: |-p^2 + R/3 + M^2(mode)|. The
/// amplitude factors out.
double stuckelberg_residual(const HarmonicMode& mode, const PlaneWave& wave, const geometry::Metric& g,
                            double curvature = 0.0);

/// |-p^2 + mass^2 + R/3|.
double kg_residual(const PlaneWave& wave, double mass, const geometry::Metric& g, double curvature = 0.0);

/// Exact dyadic on-shell momentum for the mode in N dimensions:
/// eq5 p = ((n+1) m, n m, 0, ...); eq12 p = (5/4 |n| m, 3/4 |n| m, 0, ...),
/// with the null p = (m, m, 0, ...) for n = 0.
PlaneWave on_shell_wave(const HarmonicMode& mode, int dimension);

/// Boost in the (0, axis) plane. Throws DomainError unless c^2 - s^2 = 1
/// within 1e-12.
PlaneWave boost(const PlaneWave& wave, double cosh_rapidity, double sinh_rapidity, int axis = 1);

struct EquivalenceTerm {
  int n;
  PlaneWave wave;
  std::complex<double> coefficient;
  std::complex<double> recovered;
  double eq12_residual;
  double kg_residual;
};

struct EquivalenceReport {
  bool eq12_exact;          // (a) every term solves the tau wave equation exactly
  bool periodic;            // (b) integer winding and numeric period check
  bool recovered;           // (c) tau-DFT recovers every coefficient, each on shell
  double periodicity_deviation;
  double max_recovery_error;
  double max_eq12_residual;
  double max_kg_residual;
  std::vector<EquivalenceTerm> terms;

  bool passed() const { return eq12_exact && periodic && recovered; }
};

struct OffShell {
  int n;
  double offset;  // the term gains p^2 -> p^2 - m^2 |offset|
};

/// Builds psi(x, tau) = sum_n c_n e^{i p_n.x} e^{i n m tau} for n in
/// [n_min, n_max] with dyadic c_n and on-shell p_n, then runs three checks.
/// Numeric tolerance for (b) and (c) is 1e-12; residuals must be exactly 0.
/// Off-shell terms get a transverse momentum m sqrt|offset| (needs N >= 3).
EquivalenceReport equivalence_check(double m, int n_min, int n_max, const geometry::Metric& g,
                                    std::span<const OffShell> off_shell = {});

struct MassLadder {
  double base;
  std::vector<int> multiples;  // 1 .. n_max
  std::vector<int> fractions;  // 1 .. d_max

  /// {n m} union {m / d}, ascending without duplicates.
  std::vector<double> masses() const;
  /// 2 pi / (n m).
  double multiple_period(int n) const;
  /// d 2 pi / m.
  double fraction_period(int d) const;
};

/// Throws DomainError unless m, n_max and d_max are positive.
MassLadder mass_ladder(double m, int n_max, int d_max);

struct Harmonic {
  int n;
  std::complex<double> amplitude;
};

/// || d chi / d tau || of chi = sum a_n e^{i n m tau}: sqrt(sum (n m |a_n|)^2).
double tau_independence_residual(double m, std::span<const Harmonic> content);

struct LadderRow {
  std::string convention;  // eq5, eq12, or eq5_extrapolated for n < 0
  int n;
  double m;
  double effective_mass_squared;
  double residual;  // stuckelberg_residual of on_shell_wave in N = 4
};

std::vector<LadderRow> ladder_table(Convention convention, double m, int n_min, int n_max);
/// Writes `convention,n,m,effective_mass_squared,residual`.
void write_ladder_csv(std::ostream& out, std::span<const LadderRow> rows);

struct ConventionComparison {
  int n;
  double eq5;
  double eq12;
  bool differs;
};

std::vector<ConventionComparison> compare_conventions(double m, int n_max);

}  // namespace rpq::kgladder
