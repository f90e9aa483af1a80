#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "rpq/error.hpp"
#include "rpq/geometry.hpp"
#include "rpq/kgladder.hpp"

using namespace rpq;
using namespace rpq::kgladder;

namespace {

const geometry::Metric kMinkowski = geometry::minkowski_metric(4);

PlaneWave wave(std::vector<double> p) { return PlaneWave{std::move(p)}; }

}  // namespace

TEST(EffectiveMass, Examples) {
  EXPECT_EQ(effective_mass_squared({0, 1.7, Convention::eq5}), 1.7 * 1.7);
  EXPECT_EQ(effective_mass_squared({1, 1.0, Convention::eq5}), 3.0);
  EXPECT_EQ(effective_mass_squared({2, 0.5, Convention::eq12}), 1.0);
  EXPECT_EQ(effective_mass_squared({0, 2.0, Convention::eq12}), 0.0);
  EXPECT_EQ(effective_mass_squared({-2, 1.0, Convention::eq5}), -3.0);
  EXPECT_THROW(effective_mass_squared({1, 0.0, Convention::eq5}), DomainError);
}

TEST(EffectiveMass, Eq12LadderIsSelfSimilar) {
  for (double m : {0.25, 0.5, 1.0, 3.0}) {
    for (int n = -5; n <= 5; ++n) {
      EXPECT_EQ(effective_mass_squared({n, m, Convention::eq12}),
                n == 0 ? 0.0 : effective_mass_squared({1, std::abs(n) * m, Convention::eq12}));
    }
  }
}

TEST(EffectiveMass, ConventionsDisagreeFromTwoOn) {
  const auto rows = compare_conventions(1.0, 6);
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.eq5, 2.0 * r.n + 1.0);
    EXPECT_EQ(r.eq12, static_cast<double>(r.n * r.n));
    if (r.n >= 2) {
      EXPECT_TRUE(r.differs) << r.n;
    }
  }
  EXPECT_EQ(parse_convention(to_string(Convention::eq12)), Convention::eq12);
  EXPECT_THROW(parse_convention("eq7"), DomainError);
}

TEST(Residuals, Examples) {
  EXPECT_EQ(stuckelberg_residual({0, 1.5, Convention::eq5}, wave({1.5, 0, 0, 0}), kMinkowski), 0.0);
  EXPECT_EQ(stuckelberg_residual({1, 1.0, Convention::eq5}, wave({0, 0, 0, 0}), kMinkowski), 3.0);
  for (int n = -3; n <= 6; ++n) {
    for (auto conv : {Convention::eq5, Convention::eq12}) {
      const HarmonicMode mode{n, 0.75, conv};
      EXPECT_EQ(stuckelberg_residual(mode, on_shell_wave(mode, 4), kMinkowski), 0.0) << n;
    }
  }
  EXPECT_EQ(kg_residual(wave({5, 3, 0, 0}), 4.0, kMinkowski), 0.0);
  EXPECT_EQ(kg_residual(wave({2, 0, 0, 0}), 2.0, kMinkowski), 0.0);
  EXPECT_EQ(kg_residual(wave({1, 0, 1, 0}), 0.0, kMinkowski), 0.0);
  EXPECT_EQ(kg_residual(wave({2, 0, 0, 0}), 2.0, kMinkowski, 3.0), 1.0);
  EXPECT_THROW(contract(kMinkowski, std::vector<double>{1, 2}), DimensionError);
}

TEST(Residuals, BoostInvariant) {
  struct Rapidity {
    double c, s;
  };
  const PlaneWave rest = wave({2, 0, 0, 0});
  for (const auto [c, s] : {Rapidity{1.25, 0.75}, Rapidity{17.0 / 8, 15.0 / 8}, Rapidity{65.0 / 16, 63.0 / 16}}) {
    for (int axis : {1, 3}) {
      const auto b = boost(rest, c, s, axis);
      EXPECT_EQ(b.p[0], 2 * c);
      EXPECT_EQ(b.p[static_cast<std::size_t>(axis)], 2 * s);
      EXPECT_EQ(kg_residual(b, 2.0, kMinkowski), 0.0);
      const auto off = wave({1, 0.5, 0, 0});
      EXPECT_EQ(kg_residual(boost(off, c, s, axis), 2.0, kMinkowski), kg_residual(off, 2.0, kMinkowski));
    }
  }
  EXPECT_THROW(boost(rest, 1.0, 0.5), DomainError);
  EXPECT_THROW(boost(rest, 1.0, 0.0, 4), IndexError);
}

TEST(Equivalence, ZeroModeIsMassless) {
  const auto report = equivalence_check(1.0, 0, 0, kMinkowski);
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.terms.size(), 1u);
  EXPECT_EQ(contract(kMinkowski, report.terms[0].wave.p), 0.0);
  EXPECT_EQ(report.max_kg_residual, 0.0);
}

TEST(Equivalence, SymmetricRangePassesExactly) {
  for (double m : {0.5, 1.0, 2.0}) {
    const auto report = equivalence_check(m, -1, 1, kMinkowski);
    EXPECT_TRUE(report.eq12_exact);
    EXPECT_TRUE(report.periodic);
    EXPECT_TRUE(report.recovered);
    EXPECT_EQ(report.max_eq12_residual, 0.0);
    EXPECT_EQ(report.max_kg_residual, 0.0);
    EXPECT_LE(report.max_recovery_error, 1e-12);
    EXPECT_LE(report.periodicity_deviation, 1e-12);
    for (const auto& t : report.terms) {
      EXPECT_EQ(t.coefficient, std::complex<double>(1.0 + t.n / 2.0, -t.n / 4.0));
    }
  }
  EXPECT_TRUE(equivalence_check(1.0, -4, 5, kMinkowski).passed());
}

TEST(Equivalence, OffShellTermIsReported) {
  const std::vector<OffShell> off{{1, 0.25}};
  const auto report = equivalence_check(1.0, -1, 1, kMinkowski, off);
  EXPECT_TRUE(report.eq12_exact == false || report.recovered == false);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.max_kg_residual, 0.25);
  EXPECT_THROW(equivalence_check(1.0, -1, 1, geometry::minkowski_metric(2), off), DimensionError);
}

TEST(MassLadder, Examples) {
  EXPECT_EQ(mass_ladder(1.0, 3, 1).masses(), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(mass_ladder(1.0, 1, 2).masses(), (std::vector<double>{0.5, 1}));
  const auto ladder = mass_ladder(1.0, 2, 2);
  EXPECT_DOUBLE_EQ(ladder.fraction_period(2), 4 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(ladder.multiple_period(2), std::numbers::pi);
  EXPECT_THROW(mass_ladder(0.0, 1, 1), DomainError);
  EXPECT_THROW(mass_ladder(1.0, 0, 1), DomainError);
  EXPECT_THROW(mass_ladder(1.0, 1, 0), DomainError);
}

TEST(TauIndependence, Examples) {
  EXPECT_EQ(tau_independence_residual(1.0, std::vector<Harmonic>{{0, {1.0, 0.0}}}), 0.0);
  EXPECT_EQ(tau_independence_residual(1.0, std::vector<Harmonic>{}), 0.0);
  const double m = 1.5;
  for (double a : {0.1, 0.2, 0.4}) {
    const std::vector<Harmonic> content{{0, {1.0, 0.0}}, {1, {0.0, a}}};
    EXPECT_DOUBLE_EQ(tau_independence_residual(m, content), m * a);
  }
}

TEST(LadderTable, RowsAndCsv) {
  const auto rows = ladder_table(Convention::eq5, 1.0, -1, 3);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].convention, "eq5_extrapolated");
  EXPECT_EQ(rows[0].effective_mass_squared, -1.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].convention, "eq5");
    EXPECT_EQ(rows[i].effective_mass_squared, 2.0 * rows[i].n + 1.0);
    EXPECT_EQ(rows[i].residual, 0.0);
  }
  std::ostringstream out;
  write_ladder_csv(out, ladder_table(Convention::eq12, 0.5, 2, 2));
  EXPECT_EQ(out.str(), "convention,n,m,effective_mass_squared,residual\neq12,2,0.5,1,0\n");
}
