#include "rpq/maxwell.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "rpq/csv.hpp"
#include "rpq/error.hpp"

namespace rpq::maxwell {

namespace {

using Frames = std::vector<Eigen::MatrixXd>;

// Central difference along spacetime axis `axis` (0 = time). The result is
// aligned with frames 1 .. F-2 of the input.
Frames derivative(const modes::PeriodicGrid& grid, double dt, const Frames& in, int axis) {
  if (in.size() < 3) throw DomainError("central time difference needs at least 3 frames");
  Frames out;
  out.reserve(in.size() - 2);
  if (axis == 0) {
    for (std::size_t t = 0; t + 2 < in.size(); ++t) out.push_back((in[t + 2] - in[t]) / (2.0 * dt));
    return out;
  }
  const double inv = 1.0 / (2.0 * grid.spacing());
  for (std::size_t t = 1; t + 1 < in.size(); ++t) {
    const auto& f = in[t];
    Eigen::MatrixXd d(f.rows(), f.cols());
    for (int p = 0; p < grid.size(); ++p) {
      d.col(p) = (f.col(grid.neighbour(p, axis - 1, 1)) - f.col(grid.neighbour(p, axis - 1, -1))) * inv;
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// The two indices missing from an ascending set of size N-2, ascending.
std::pair<int, int> complement_pair(const std::vector<int>& set, int n) {
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (!std::binary_search(set.begin(), set.end(), i)) rest.push_back(i);
  }
  return {rest[0], rest[1]};
}

// Sign of the dual component on ascending set C: sgn(C, a, b) g_aa g_bb.
double dual_factor(const std::vector<int>& set, int a, int b, const geometry::Metric& g) {
  std::vector<int> perm = set;
  perm.push_back(a);
  perm.push_back(b);
  return geometry::levi_civita_sign(perm) * g[a] * g[b];
}

double rms_frobenius(const Frames& frames) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& f : frames) {
    sum += f.squaredNorm();
    count += static_cast<std::size_t>(f.cols());
  }
  return count ? std::sqrt(sum / static_cast<double>(count)) : 0.0;
}

double normalized(double max_abs, double rms) { return rms > 0.0 ? max_abs / rms : max_abs; }

using ComponentSource = std::function<Frames(const std::vector<int>&)>;

// Divergence of a totally antisymmetric rank-(N-2) tensor over each free
// index set B of size N-3: sum_mu d_mu T^{B mu}.
double jacobi_impl(const modes::PeriodicGrid& grid, double dt, int n, std::size_t frame_count,
                   const ComponentSource& component) {
  const int rank = n - 2;
  if (rank < 1 || frame_count < 3) return 0.0;

  Frames all;
  for (const auto& set : combinations(n, rank)) {
    const Frames c = component(set);
    if (all.empty()) {
      all = c;
    } else {
      for (std::size_t t = 0; t < all.size(); ++t) {
        Eigen::MatrixXd stacked(all[t].rows() + 1, all[t].cols());
        stacked << all[t], c[t];
        all[t] = std::move(stacked);
      }
    }
  }
  const double rms = rms_frobenius(all);

  double worst = 0.0;
  for (const auto& free : combinations(n, rank - 1)) {
    Frames div;
    for (int mu = 0; mu < n; ++mu) {
      if (std::binary_search(free.begin(), free.end(), mu)) continue;
      std::vector<int> set = free;
      set.insert(std::upper_bound(set.begin(), set.end(), mu), mu);
      // Moving mu from the last slot to its sorted place passes every larger index.
      const auto larger = std::count_if(free.begin(), free.end(), [mu](int i) { return i > mu; });
      const double sign = larger % 2 ? -1.0 : 1.0;
      Frames d = derivative(grid, dt, component(set), mu);
      if (div.empty()) {
        for (auto& m : d) m *= sign;
        div = std::move(d);
      } else {
        for (std::size_t t = 0; t < div.size(); ++t) div[t] += sign * d[t];
      }
    }
    for (const auto& m : div) worst = std::max(worst, m.cwiseAbs().maxCoeff());
  }
  return normalized(worst, rms);
}

void check_potential(const modes::FieldConfig& potential, const geometry::Metric& g) {
  modes::validate(potential);
  const int n = g.dim();
  if (potential.components != n || potential.grid.dimension() + 1 != n) {
    throw DimensionError("potential needs N = metric dimension = spatial dimension + 1 components");
  }
  if (potential.frames.size() < 3) throw DomainError("potential needs at least 3 frames for time derivatives");
}

// d_mu xi^nu for every mu; entry mu holds an N x points matrix per frame.
std::vector<Frames> gradients(const modes::FieldConfig& potential) {
  std::vector<Frames> d;
  for (int mu = 0; mu < potential.components; ++mu) {
    d.push_back(derivative(potential.grid, potential.time_step, potential.frames, mu));
  }
  return d;
}

}  // namespace

double DualTensor::component(int frame, std::span<const int> indices, int point) const {
  std::vector<int> sorted(indices.begin(), indices.end());
  int inversions = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i] == sorted[j]) return 0.0;
      if (sorted[i] > sorted[j]) ++inversions;
    }
  }
  std::sort(sorted.begin(), sorted.end());
  const auto it = std::find(index_sets.begin(), index_sets.end(), sorted);
  if (it == index_sets.end()) throw IndexError("dual index set out of range");
  const double v = frames[static_cast<std::size_t>(frame)](it - index_sets.begin(), point);
  return inversions % 2 ? -v : v;
}

FieldTensor field_tensor(const modes::FieldConfig& potential, const geometry::Metric& g) {
  check_potential(potential, g);
  const int n = g.dim();
  const auto d = gradients(potential);
  FieldTensor f{potential.grid, potential.time_step, n, 1, {}};
  for (std::size_t t = 0; t < d[0].size(); ++t) {
    Eigen::MatrixXd m(n * n, potential.grid.size());
    for (int mu = 0; mu < n; ++mu) {
      for (int nu = 0; nu < n; ++nu) {
        m.row(mu * n + nu) = g[mu] * d[static_cast<std::size_t>(mu)][t].row(nu) -
                             g[nu] * d[static_cast<std::size_t>(nu)][t].row(mu);
      }
    }
    f.frames.push_back(std::move(m));
  }
  return f;
}

DualTensor dual_tensor(const FieldTensor& f, const geometry::Metric& g) {
  const int n = f.dimension;
  if (g.dim() != n) throw DimensionError("metric dimension differs from the field tensor");
  if (n > kMaxStoredDualDimension) {
    throw DomainError("dual is materialized only for N <= " + std::to_string(kMaxStoredDualDimension));
  }
  DualTensor dual{f.grid, f.time_step, n, f.first_frame, combinations(n, n - 2), {}};
  for (const auto& m : f.frames) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(dual.index_sets.size()), m.cols());
    for (std::size_t s = 0; s < dual.index_sets.size(); ++s) {
      const auto& set = dual.index_sets[s];
      const auto [a, b] = complement_pair(set, n);
      out.row(static_cast<Eigen::Index>(s)) = dual_factor(set, a, b, g) * m.row(a * n + b);
    }
    dual.frames.push_back(std::move(out));
  }
  return dual;
}

double jacobi_residual(const DualTensor& fhat) {
  const auto source = [&fhat](const std::vector<int>& set) {
    const auto row = std::find(fhat.index_sets.begin(), fhat.index_sets.end(), set) - fhat.index_sets.begin();
    Frames out;
    for (const auto& m : fhat.frames) out.push_back(m.row(row));
    return out;
  };
  return jacobi_impl(fhat.grid, fhat.time_step, fhat.dimension, fhat.frames.size(), source);
}

double jacobi_residual(const FieldTensor& f, const geometry::Metric& g) {
  const int n = f.dimension;
  if (g.dim() != n) throw DimensionError("metric dimension differs from the field tensor");
  const auto source = [&f, &g, n](const std::vector<int>& set) {
    const auto [a, b] = complement_pair(set, n);
    const double factor = dual_factor(set, a, b, g);
    Frames out;
    for (const auto& m : f.frames) out.push_back(factor * m.row(a * n + b));
    return out;
  };
  return jacobi_impl(f.grid, f.time_step, n, f.frames.size(), source);
}

double lorenz_gauge_residual(const modes::FieldConfig& potential, const geometry::Metric& g) {
  check_potential(potential, g);
  const auto d = gradients(potential);
  double worst = 0.0;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t t = 0; t < d[0].size(); ++t) {
    Eigen::VectorXd div = Eigen::VectorXd::Zero(potential.grid.size());
    for (std::size_t mu = 0; mu < d.size(); ++mu) {
      div += d[mu][t].row(static_cast<Eigen::Index>(mu)).transpose();
      sum += d[mu][t].squaredNorm();
    }
    count += static_cast<std::size_t>(potential.grid.size());
    worst = std::max(worst, div.cwiseAbs().maxCoeff());
  }
  return normalized(worst, std::sqrt(sum / static_cast<double>(count)));
}

double source_free_residual(const FieldTensor& f, const modes::FieldConfig& potential, const geometry::Metric& g,
                            double gauge_tol) {
  if (!(f.grid == potential.grid) || f.dimension != potential.components) {
    throw DimensionError("field tensor and potential do not share a grid");
  }
  const double gauge = lorenz_gauge_residual(potential, g);
  if (gauge > gauge_tol) {
    throw GaugeViolationError("Lorenz gauge residual " + csv::format_double(gauge) + " exceeds tolerance " +
                              csv::format_double(gauge_tol));
  }
  if (f.frames.size() < 3) throw DomainError("source_free_residual needs at least 3 field-tensor frames");
  const int n = f.dimension;
  double worst = 0.0;
  for (int mu = 0; mu < n; ++mu) {
    Frames div;
    for (int nu = 0; nu < n; ++nu) {
      Frames row;
      for (const auto& m : f.frames) row.push_back(m.row(mu * n + nu));
      Frames d = derivative(f.grid, f.time_step, row, nu);
      if (div.empty()) {
        div = std::move(d);
      } else {
        for (std::size_t t = 0; t < div.size(); ++t) div[t] += d[t];
      }
    }
    for (const auto& m : div) worst = std::max(worst, m.cwiseAbs().maxCoeff());
  }
  return normalized(worst, rms_frobenius(f.frames));
}

void write_residual_csv(std::ostream& out, std::span<const ResidualRow> rows) {
  csv::Writer writer(out, {"identity", "N", "h", "residual"});
  for (const auto& r : rows) {
    writer.row({r.identity, std::to_string(r.dimension), csv::format_double(r.spacing),
                csv::format_double(r.residual)});
  }
}

}  // namespace rpq::maxwell
