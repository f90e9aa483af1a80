#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rpq::geometry {

/// Constant diagonal metric with entries +1 or -1.
///
/// Only diagonal, constant-coefficient metrics are represented. Every level of
/// the dimensional ladder carries an optional label naming the invariant
/// conjugate to its arc-length (m, m', ...).
class Metric {
 public:
  /// Throws DomainError unless every entry is +1 or -1 and `diag` is non-empty.
  explicit Metric(std::vector<int> diag, std::optional<std::string> invariant_label = std::nullopt);

  int dim() const { return static_cast<int>(diag_.size()); }
  const std::vector<int>& diag() const { return diag_; }
  int operator[](int mu) const { return diag_[static_cast<std::size_t>(mu)]; }
  const std::optional<std::string>& invariant_label() const { return label_; }

  /// Product of the diagonal entries.
  int determinant() const;

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  std::vector<int> diag_;
  std::optional<std::string> label_;
};

/// An ordered index tuple, each entry in [0, N).
struct IndexPermutation {
  std::vector<int> indices;
};

/// diag(+1, -1, ..., -1). Throws DimensionError for n < 2.
Metric minkowski_metric(int n);

/// Adjoins the arc-length as coordinate x^N with g'_NN = -1 and no cross terms.
Metric extend_metric(const Metric& g, std::string new_invariant);

/// Quadratic form sum_mu g_mumu dx^mu dx^mu. Throws DimensionError on length mismatch.
double interval(const Metric& g, std::span<const double> dx);

/// Parity of the index tuple: +1/-1 for permutations of 0..N-1, 0 on repeats.
/// Throws IndexError when an entry lies outside [0, N).
int levi_civita_sign(const IndexPermutation& p);
int levi_civita_sign(std::span<const int> indices);

/// Rank of the Levi-Civita dual of a rank-2 field in n dimensions.
constexpr int dual_rank(int n) { return n - 2; }

/// Field and dual have the same rank only for n = 4.
constexpr bool dual_is_self_similar(int n) { return dual_rank(n) == 2; }

}  // namespace rpq::geometry
