#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "rpq/error.hpp"
#include "rpq/paths.hpp"

using namespace rpq;
using namespace rpq::paths;

namespace {

constexpr double kPi = std::numbers::pi;
const geometry::Metric g4 = geometry::minkowski_metric(4);

Path two_point(const Event& a, const Event& b, double t0 = 0.0, double t1 = 1.0) { return Path({a, b}, {t0, t1}); }

}  // namespace

TEST(Path, Invariants) {
  EXPECT_THROW(Path({{0, 0}}, {0.0}), DomainError);
  EXPECT_THROW(Path({{0, 0}, {1, 0}}, {0.0, 0.0}), DomainError);
  EXPECT_THROW(Path({{0, 0}, {1, 0, 0}}, {0.0, 1.0}), DimensionError);
  EXPECT_THROW(Path({{0, 0}, {1, 0}}, {0.0}), DimensionError);
}

TEST(ProperTime, Examples) {
  EXPECT_EQ(proper_time(two_point({0, 0, 0, 0}, {3, 0, 0, 0}), g4), 3.0);
  EXPECT_EQ(proper_time(two_point({0, 0, 0, 0}, {5, 3, 0, 0}), g4), 4.0);
  EXPECT_EQ(proper_time(two_point({0, 0, 0, 0}, {1, 1, 0, 0}), g4), 0.0);
  EXPECT_THROW(proper_time(two_point({0, 0, 0, 0}, {1, 2, 0, 0}), g4), CausalityError);
  EXPECT_THROW(proper_time(two_point({0, 0}, {1, 0}), g4), DimensionError);
}

TEST(Action, ArcLengthExamples) {
  const Path straight = two_point({0, 0, 0, 0}, {kPi, 0, 0, 0});
  EXPECT_DOUBLE_EQ(action(straight, ArcLength{2.0}, g4), 2.0 * kPi);
  const Path degenerate = Path({{1, 1, 1, 1}, {1, 1, 1, 1}}, {0.0, 1.0});
  EXPECT_EQ(action(degenerate, ArcLength{1.0}, g4), 0.0);
}

TEST(Action, MonotonicArcLengthPathEqualsMassTimesSpan) {
  const auto ensemble = sample_paths(42, 50, 12, g4, 0.8);
  for (const auto& p : ensemble) {
    const double span = p.params().back() - p.params().front();
    EXPECT_NEAR(action(p, ArcLength{1.5}, g4), 1.5 * span, 1e-12 * span);
  }
}

TEST(Action, FreeAltMatchesArcLengthOnArcLengthParameterization) {
  const auto ensemble = sample_paths(9, 50, 10, g4, 1.0);
  for (const auto& p : ensemble) {
    const double s = action(p, ArcLength{2.0}, g4);
    EXPECT_NEAR(action(p, FreeAlt{2.0}, g4), s, 1e-10 * s);
  }
}

TEST(Action, FreeAltDiffersOffShell) {
  // Rest path with tau running twice as fast as t: xdot.xdot = 1/4.
  const Path p = two_point({0, 0}, {1, 0}, 0.0, 2.0);
  const auto g2 = geometry::minkowski_metric(2);
  EXPECT_DOUBLE_EQ(action(p, FreeAlt{1.0}, g2), 0.5 * (0.25 + 1.0) * 2.0);
  EXPECT_DOUBLE_EQ(action(p, ArcLength{1.0}, g2), 1.0);
}

TEST(Action, RelHOReducesToFreeAltWithoutStiffness) {
  const auto g2 = geometry::minkowski_metric(2);
  const Path p({{0, 0}, {1, 0.3}, {2.5, 0.1}}, {0.0, 0.9, 2.3});
  EXPECT_NEAR(action(p, RelHO{0.0}, g2), action(p, FreeAlt{1.0}, g2), 1e-15);
}

TEST(Action, RelHOPotentialTermUsesSegmentMidpoints) {
  const auto g2 = geometry::minkowski_metric(2);
  // Single segment from (0, 1) to (2, 3) over dtau = 2: tdot = 1, qdot = 1, q_mid = 2.
  const Path p({{0, 1}, {2, 3}}, {0.0, 2.0});
  const double expected = 0.5 * (1.0 - 1.0 + 1.0 + 0.5 * 4.0 * 1.0) * 2.0;
  EXPECT_DOUBLE_EQ(action(p, RelHO{0.5}, g2), expected);
  EXPECT_THROW(action(p, RelHO{-1.0}, g2), DomainError);
  EXPECT_THROW(action(two_point({0, 0, 0, 0}, {1, 0, 0, 0}), RelHO{1.0}, g4), DimensionError);
}

TEST(Action, NonMonotonicPathSumsSignedRuns) {
  const auto g2 = geometry::minkowski_metric(2);
  // Forward 5 with dx 3 (tau 4), then backward 2 at rest (tau 2).
  const Path p({{0, 0}, {5, 3}, {3, 3}}, {0.0, 1.0, 2.0});
  const auto runs = monotonic_segments(p);
  ASSERT_EQ(runs.size(), 2u);
  EXPECT_EQ(runs[0], (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_EQ(runs[1], (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_DOUBLE_EQ(action(p, ArcLength{1.0}, g2), 4.0 - 2.0);
}

TEST(Admissibility, Examples) {
  const auto g2 = geometry::minkowski_metric(2);
  const auto full = is_admissible(two_point({0, 0}, {2 * kPi, 0}), ArcLength{1.0}, g2, 1e-9);
  EXPECT_TRUE(full.admissible);
  EXPECT_EQ(full.nearest_n, 1);

  const auto half = is_admissible(two_point({0, 0}, {kPi, 0}), ArcLength{1.0}, g2, 0.1);
  EXPECT_FALSE(half.admissible);
  EXPECT_NEAR(half.deviation, kPi, 1e-15);

  const auto zero = is_admissible(Path({{0, 0}, {0, 0}}, {0, 1}), ArcLength{1.0}, g2, 1e-9);
  EXPECT_TRUE(zero.admissible);
  EXPECT_EQ(zero.nearest_n, 0);
  EXPECT_EQ(zero.deviation, 0.0);
}

TEST(Admissibility, ToleranceRange) {
  const auto g2 = geometry::minkowski_metric(2);
  const Path p = two_point({0, 0}, {1, 0});
  EXPECT_THROW(is_admissible(p, ArcLength{1.0}, g2, 0.0), DomainError);
  EXPECT_THROW(is_admissible(p, ArcLength{1.0}, g2, 4.0), DomainError);
  EXPECT_NO_THROW(is_admissible(p, ArcLength{1.0}, g2, kPi));
}

TEST(Translate, ShiftsParamsOnly) {
  const Path p = two_point({0, 0}, {1, 0}, 2.0, 3.0);
  EXPECT_EQ(translate_parameter(p, 0.0), p);
  const Path anchored = translate_parameter(p, -2.0);
  EXPECT_EQ(anchored.params().front(), 0.0);
  EXPECT_EQ(anchored.events(), p.events());
}

TEST(Translate, AdmissibilityInvariantUnderPeriodShifts) {
  const double m = 1.3;
  const auto ensemble = sample_paths(5, 500, 15, g4, 1.0);
  for (const auto& p : ensemble) {
    const auto base = is_admissible(p, ArcLength{m}, g4, 0.2);
    for (int n : {-3, 1, 2, 7}) {
      EXPECT_EQ(is_admissible(translate_parameter(p, 2 * kPi * n / m), ArcLength{m}, g4, 0.2), base);
    }
  }
}

TEST(Reverse, NegatesNearestN) {
  const auto ensemble = sample_paths(21, 200, 8, g4, 1.0);
  for (const auto& p : ensemble) {
    const auto fwd = is_admissible(p, ArcLength{1.0}, g4, 0.5);
    const auto back = is_admissible(reverse(p), ArcLength{1.0}, g4, 0.5);
    EXPECT_EQ(back.nearest_n, -fwd.nearest_n);
    // Summation runs in the opposite order, so only rounding separates them.
    EXPECT_NEAR(back.deviation, fwd.deviation, 1e-12);
    EXPECT_EQ(reverse(reverse(p)), p);
  }
}

TEST(Properties, AdditivityAtEveryInteriorVertex) {
  const auto ensemble = sample_paths(77, 40, 10, g4, 1.0);
  for (const auto& p : ensemble) {
    const double whole = action(p, ArcLength{1.0}, g4);
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      const double parts = action(subpath(p, 0, k), ArcLength{1.0}, g4) + action(subpath(p, k, p.size() - 1), ArcLength{1.0}, g4);
      EXPECT_NEAR(parts, whole, 1e-12 * whole);
    }
  }
}

TEST(Properties, ReparameterizationLeavesArcLengthActionUnchanged) {
  const auto ensemble = sample_paths(8, 40, 10, g4, 1.0);
  for (const auto& p : ensemble) {
    std::vector<double> scaled = p.params();
    for (double& t : scaled) t *= 3.7;
    EXPECT_EQ(action(Path(p.events(), scaled), ArcLength{1.0}, g4), action(p, ArcLength{1.0}, g4));
  }
}

TEST(Sampling, DeterministicAndTimelike) {
  EXPECT_TRUE(sample_paths(1, 0, 20, g4, 1.0).empty());
  const auto a = sample_paths(1, 1000, 20, g4, 1.0);
  const auto b = sample_paths(1, 1000, 20, g4, 1.0);
  ASSERT_EQ(a.size(), 1000u);
  EXPECT_EQ(a, b);
  for (const auto& p : a) {
    EXPECT_EQ(p.size(), 21u);
    EXPECT_NO_THROW(proper_time(p, g4));
  }
  EXPECT_NE(sample_paths(2, 1, 20, g4, 1.0).front(), a.front());
}

TEST(Sampling, PathsDoNotDependOnEnsembleSize) {
  const auto small = sample_paths(4, 3, 6, g4, 1.0);
  const auto large = sample_paths(4, 10, 6, g4, 1.0);
  for (std::size_t i = 0; i < small.size(); ++i) EXPECT_EQ(small[i], large[i]);
}

TEST(Fraction, Limits) {
  const auto ensemble = sample_paths(3, 300, 10, g4, 1.0);
  EXPECT_EQ(admissible_fraction(ensemble, ArcLength{1.0}, g4, kPi), 1.0);
  EXPECT_LT(admissible_fraction(ensemble, ArcLength{1.0}, g4, 1e-9), 0.01);
  EXPECT_THROW(admissible_fraction({}, ArcLength{1.0}, g4, 0.1), DomainError);
}

TEST(Fraction, PinnedRegressionValue) {
  const auto ensemble = sample_paths(7, 10000, 20, g4, 1.0);
  EXPECT_EQ(admissible_fraction(ensemble, ArcLength{1.0}, g4, 0.1), 201.0 / 10000.0);
}

TEST(TextIo, RoundTrip) {
  const auto p = sample_paths(12, 1, 5, g4, 1.0).front();
  std::stringstream s;
  write_path(s, p);
  EXPECT_EQ(read_path(s), p);
}

TEST(TextIo, CommentsAndErrors) {
  std::istringstream ok("# tau t x\n\n0 0 0\n1 1 0.5\n");
  EXPECT_EQ(read_path(ok).size(), 2u);
  std::istringstream back("0 0 0\n0 1 0\n");
  EXPECT_THROW(read_path(back), ParseError);
  std::istringstream junk("0 0 x\n1 1 0\n");
  EXPECT_THROW(read_path(junk), ParseError);
  std::istringstream ragged("0 0 0\n1 1\n");
  EXPECT_THROW(read_path(ragged), ParseError);
  std::istringstream lonely("0 0 0\n");
  EXPECT_THROW(read_path(lonely), ParseError);
}
