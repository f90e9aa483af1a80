#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rpq/error.hpp"
#include "rpq/propagator.hpp"

using namespace rpq;
using namespace rpq::propagator;

namespace {

GridFunction gaussian(const Grid1D& grid, double center, double variance) {
  return GridFunction::sample(grid, [&](double x) { return std::exp(-(x - center) * (x - center) / (2.0 * variance)); });
}

Eigen::VectorXd trapezoid(const Grid1D& grid) {
  Eigen::VectorXd w = Eigen::VectorXd::Constant(grid.points(), grid.spacing());
  w[0] *= 0.5;
  w[grid.points() - 1] *= 0.5;
  return w;
}

}  // namespace

TEST(Kernel, RowsAreNormalizedAndNonNegative) {
  const Grid1D grid(-5, 5, 201);
  const auto k = short_time_kernel(FreeModel{1.0}, grid, 0.05);
  EXPECT_GE(k.matrix.minCoeff(), 0.0);
  const Eigen::VectorXd rows = k.matrix * trapezoid(grid);
  EXPECT_LE((rows.array() - 1.0).abs().maxCoeff(), 1e-12);
  EXPECT_FALSE(k.boundary_truncated);
}

TEST(Kernel, FreeProfileHasVarianceEpsOverMass) {
  const Grid1D grid(-5, 5, 501);
  for (double m : {1.0, 2.5}) {
    const double eps = 0.1;
    const auto k = short_time_kernel(FreeModel{m}, grid, eps);
    const GridFunction row(grid, k.matrix.row(250).transpose());
    EXPECT_NEAR(variance(row), eps / m, 1e-9);
  }
}

TEST(Kernel, ZeroStepLimitIsDiscreteDelta) {
  const Grid1D grid(-1, 1, 101);
  const auto k = short_time_kernel(FreeModel{1.0}, grid, 1e-7);
  const Eigen::VectorXd w = trapezoid(grid);
  for (int i = 0; i < grid.points(); ++i) EXPECT_NEAR(k.matrix(i, i) * w[i], 1.0, 1e-12);
}

TEST(Kernel, OscillatorFactorIsOneAtOrigin) {
  const Grid1D grid(-4, 4, 81);
  const auto free = short_time_kernel(FreeModel{1.0}, grid, 0.1);
  const auto osc = short_time_kernel(OscillatorModel{1.0, 3.0}, grid, 0.1);
  EXPECT_EQ(osc.matrix(40, 40), free.matrix(40, 40));
  EXPECT_LT(osc.matrix(0, 0), free.matrix(0, 0));
}

TEST(Kernel, Preconditions) {
  const Grid1D grid(-1, 1, 11);
  EXPECT_THROW(short_time_kernel(FreeModel{1.0}, grid, 0.0), DomainError);
  EXPECT_THROW(short_time_kernel(FreeModel{0.0}, grid, 0.1), DomainError);
  EXPECT_THROW(short_time_kernel(OscillatorModel{1.0, -1.0}, grid, 0.1), DomainError);
  EXPECT_TRUE(short_time_kernel(FreeModel{1.0}, grid, 1.0).boundary_truncated);
}

TEST(Evolve, ZeroStepsAndMismatch) {
  const Grid1D grid(-2, 2, 41);
  const auto f = gaussian(grid, 0.0, 0.5);
  const auto k = short_time_kernel(FreeModel{1.0}, grid, 0.01);
  EXPECT_EQ(evolve(k, f, 0).values(), f.values());
  EXPECT_THROW(evolve(k, f, -1), DomainError);
  EXPECT_THROW(evolve(k, gaussian(Grid1D(-2, 2, 43), 0.0, 0.5), 1), DimensionError);
  EXPECT_THROW(GridFunction(grid, Eigen::VectorXd::Zero(3)), DimensionError);
}

TEST(Evolve, FreeVarianceLaw) {
  const Grid1D grid(-12, 12, 1201);
  const double s0 = 0.8, mass = 2.0, total = 1.0;
  const auto f = gaussian(grid, 0.3, s0);
  const auto k = short_time_kernel(FreeModel{mass}, grid, 0.1);
  const auto out = evolve(k, f, 10);
  EXPECT_NEAR(variance(out) / (s0 + total / mass), 1.0, 1e-8);
  for (int i = 0; i < grid.points(); i += 50) {
    EXPECT_NEAR(out.values()[i], oracle::heat_gaussian(grid.x(i), 0.3, s0, total / mass), 1e-8);
  }
}

TEST(Evolve, MassConservedPerStep) {
  const Grid1D grid(-10, 10, 801);
  const auto k = short_time_kernel(FreeModel{1.0}, grid, 0.05);
  auto f = gaussian(grid, -0.5, 0.4);
  for (int s = 0; s < 10; ++s) {
    const double before = integral(f);
    f = evolve(k, f, 1);
    EXPECT_NEAR(integral(f), before, 1e-8 * before);
  }
}

TEST(Evolve, PositivityPreserved) {
  const Grid1D grid(-3, 3, 121);
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd v(grid.points());
  for (auto& x : v) x = u(gen) < 0.3 ? 0.0 : u(gen);
  for (const Model& model : {Model(FreeModel{1.0}), Model(OscillatorModel{1.0, 2.0})}) {
    const auto out = evolve(short_time_kernel(model, grid, 0.02), GridFunction(grid, v), 5);
    EXPECT_GE(out.values().minCoeff(), 0.0);
  }
}

TEST(Evolve, FreeSemigroup) {
  const Grid1D grid(-10, 10, 801);
  const auto f = gaussian(grid, 0.0, 1.0);
  const auto two_small = evolve(short_time_kernel(FreeModel{1.0}, grid, 0.05), f, 2);
  const auto one_big = evolve(short_time_kernel(FreeModel{1.0}, grid, 0.1), f, 1);
  EXPECT_LE(l2_distance(two_small, one_big), 1e-10);
}

TEST(Evolve, GroundStateIsSlowestDecayingProfile) {
  const Grid1D grid(-6, 6, 241);
  const double mass = 1.0, eta = 1.0;
  const auto k = short_time_kernel(OscillatorModel{mass, eta}, grid, 0.01);
  // Start far from the ground state: an off-centre bump.
  auto f = gaussian(grid, 1.5, 0.2);
  for (int block = 0; block < 20; ++block) {
    f = evolve(k, f, 50);
    f = GridFunction(grid, f.values() / f.values().maxCoeff());
  }
  const double width = std::sqrt(mass * eta);
  for (int i = 0; i < grid.points(); ++i) {
    const double q = grid.x(i);
    EXPECT_NEAR(f.values()[i], std::exp(-width * q * q / 2.0), 1e-2) << "q " << q;
  }
}

TEST(Oracle, IdentityAndEigenfunctionDecay) {
  const Grid1D grid(0, 1, 51);
  const int interior = 49;
  const double mass = 1.5;
  const auto zero = oracle_evolution(FreeModel{mass}, gaussian(grid, 0.5, 0.01), 0.0);
  EXPECT_EQ(zero.values(), gaussian(grid, 0.5, 0.01).values());

  for (int k : {1, 3, 10}) {
    const auto mode = GridFunction::sample(grid, [&](double x) { return std::sin(k * std::numbers::pi * x); });
    const double lambda = oracle::fd_free_eigenvalue(k, interior, grid.spacing(), mass);
    const auto out = oracle_evolution(FreeModel{mass}, mode, 0.01);
    for (int i = 1; i + 1 < grid.points(); ++i) {
      EXPECT_NEAR(out.values()[i], std::exp(-0.01 * lambda) * mode.values()[i], 1e-12);
    }
  }
}

TEST(Oracle, FreeVarianceLaw) {
  const Grid1D grid(-12, 12, 1201);
  const auto out = oracle_evolution(FreeModel{1.0}, gaussian(grid, 0.0, 1.0), 1.0);
  EXPECT_NEAR(variance(out) / 2.0, 1.0, 1e-4);
  EXPECT_THROW(oracle_evolution(FreeModel{1.0}, out, -1.0), DomainError);
}

TEST(Convergence, SingleStepStudy) {
  const Grid1D grid(-6, 6, 121);
  const std::vector<double> eps{0.5};
  const auto rows = convergence_study(OscillatorModel{1.0, 1.0}, gaussian(grid, 0.0, 0.5), 0.5, eps);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(std::isnan(rows[0].order_estimate));
  EXPECT_GT(rows[0].l2_error, 0.0);
}

TEST(Convergence, OscillatorIsFirstOrder) {
  const Grid1D grid(-8, 8, 401);
  const std::vector<double> eps{0.1, 0.05, 0.025};
  const auto rows = convergence_study(OscillatorModel{1.0, 1.0}, gaussian(grid, 0.5, 0.5), 1.0, eps);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i].l2_error, rows[i - 1].l2_error);
    EXPECT_GT(rows[i].order_estimate, 0.8);
    EXPECT_LT(rows[i].order_estimate, 1.2);
  }
}

TEST(Convergence, FreeErrorIsStepIndependentFloor) {
  // The sliced free kernel is the exact heat semigroup up to quadrature, so
  // what remains is the fixed gap to the finite-difference oracle.
  const Grid1D grid(-10, 10, 401);
  const std::vector<double> eps{0.1, 0.05, 0.025};
  const auto rows = convergence_study(FreeModel{1.0}, gaussian(grid, 0.0, 1.0), 1.0, eps);
  for (const auto& r : rows) EXPECT_NEAR(r.l2_error / rows[0].l2_error, 1.0, 1e-6);
  EXPECT_LT(rows[0].l2_error, 1e-3);
}

TEST(Convergence, Preconditions) {
  const Grid1D grid(-2, 2, 21);
  const auto f = gaussian(grid, 0.0, 0.5);
  EXPECT_THROW(convergence_study(FreeModel{1.0}, f, 1.0, std::vector<double>{}), DomainError);
  EXPECT_THROW(convergence_study(FreeModel{1.0}, f, 1.0, std::vector<double>{0.3}), DomainError);
  EXPECT_THROW(convergence_study(FreeModel{1.0}, f, 0.0, std::vector<double>{0.1}), DomainError);
}

TEST(Convergence, CsvLayout) {
  const std::vector<ConvergenceRow> rows{{0.1, 0.01, std::nan("")}, {0.05, 0.005, 1.0}};
  std::ostringstream out;
  write_convergence_csv(out, rows);
  EXPECT_EQ(out.str(), "epsilon,l2_error,order_estimate\n0.1,0.01,\n0.05,0.005,1\n");
}
