#include "rpq/geometry.hpp"

#include <algorithm>
#include <string>

#include "rpq/error.hpp"

namespace rpq::geometry {

Metric::Metric(std::vector<int> diag, std::optional<std::string> invariant_label)
    : diag_(std::move(diag)), label_(std::move(invariant_label)) {
  if (diag_.empty()) throw DomainError("metric must have at least one dimension");
  for (int s : diag_) {
    if (s != 1 && s != -1) {
      throw DomainError("metric diagonal entries must be +1 or -1, got " + std::to_string(s));
    }
  }
}

int Metric::determinant() const {
  int d = 1;
  for (int s : diag_) d *= s;
  return d;
}

Metric minkowski_metric(int n) {
  if (n < 2) throw DimensionError("Minkowski metric needs N >= 2, got " + std::to_string(n));
  std::vector<int> diag(static_cast<std::size_t>(n), -1);
  diag[0] = 1;
  return Metric(std::move(diag));
}

Metric extend_metric(const Metric& g, std::string new_invariant) {
  std::vector<int> diag = g.diag();
  diag.push_back(-1);
  return Metric(std::move(diag), std::move(new_invariant));
}

double interval(const Metric& g, std::span<const double> dx) {
  if (static_cast<int>(dx.size()) != g.dim()) {
    throw DimensionError("interval: vector has " + std::to_string(dx.size()) +
                         " components, metric has " + std::to_string(g.dim()));
  }
  double s = 0.0;
  for (int mu = 0; mu < g.dim(); ++mu) {
    s += g[mu] * dx[static_cast<std::size_t>(mu)] * dx[static_cast<std::size_t>(mu)];
  }
  return s;
}

int levi_civita_sign(std::span<const int> indices) {
  const int n = static_cast<int>(indices.size());
  for (int i : indices) {
    if (i < 0 || i >= n) {
      throw IndexError("Levi-Civita index " + std::to_string(i) + " outside [0, " +
                       std::to_string(n) + ")");
    }
  }
  // Inversion count; a repeated index makes the symbol vanish.
  int inversions = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (indices[a] == indices[b]) return 0;
      if (indices[a] > indices[b]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

int levi_civita_sign(const IndexPermutation& p) { return levi_civita_sign(std::span<const int>(p.indices)); }

}  // namespace rpq::geometry
