#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <variant>
#include <vector>

#include "rpq/geometry.hpp"

namespace rpq::paths {

using Event = std::vector<double>;

/// Polygonal path: events with strictly increasing parameter values.
class Path {
 public:
  /// Throws DomainError for fewer than two vertices or non-increasing params,
  /// DimensionError when events differ in length or counts mismatch.
  Path(std::vector<Event> events, std::vector<double> params);

  std::size_t size() const { return events_.size(); }
  int dim() const { return static_cast<int>(events_.front().size()); }
  const std::vector<Event>& events() const { return events_; }
  const std::vector<double>& params() const { return params_; }

  /// Coordinate difference of segment i (vertex i to i+1).
  Event displacement(std::size_t i) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Event> events_;
  std::vector<double> params_;
};

/// L = m sqrt(xdot . xdot); the action depends on events only.
struct ArcLength {
  double mass;
};

/// L' = m (xdot . xdot + 1) / 2 with tau as an independent parameter.
struct FreeAlt {
  double mass;
};

/// L = (tdot^2 - qdot^2 + 1 + eta q^2 tdot) / 2 on a (t, q) path.
struct RelHO {
  double stiffness;
};

using ActionModel = std::variant<ArcLength, FreeAlt, RelHO>;

struct AdmissibilityReport {
  bool admissible;
  long long nearest_n;
  double deviation;

  friend bool operator==(const AdmissibilityReport&, const AdmissibilityReport&) = default;
};

/// Sum of sqrt(interval) over segments. Throws CausalityError on a spacelike segment.
double proper_time(const Path& path, const geometry::Metric& g);

/// Index ranges [first, last] of maximal runs of segments sharing the sign of dx^0.
std::vector<std::pair<std::size_t, std::size_t>> monotonic_segments(const Path& path);

/// Classical action of the path under `model`.
///
/// ArcLength sums m * proper_time over monotonic runs, each run weighted by
/// the sign of its dx^0, so a reversed path carries the negated action.
/// FreeAlt and RelHO use forward-difference velocities per segment; RelHO
/// evaluates q at segment midpoints and needs a 2-dimensional metric.
double action(const Path& path, const ActionModel& model, const geometry::Metric& g);

/// Action quantization filter exp(iS) = 1 within `tol`, tol in (0, pi].
AdmissibilityReport is_admissible(const Path& path, const ActionModel& model,
                                  const geometry::Metric& g, double tol);

Path translate_parameter(const Path& path, double delta_tau);

/// Same events traversed backwards; params become -tau in reversed order.
Path reverse(const Path& path);

/// Vertices [first, last] as a new path.
Path subpath(const Path& path, std::size_t first, std::size_t last);

/// Deterministic ensemble of timelike polygonal paths parameterized by
/// arc-length. Each path is generated from a sub-seed derived from
/// (seed, index), so the ensemble does not depend on generation order.
std::vector<Path> sample_paths(std::uint64_t seed, int count, int segments,
                               const geometry::Metric& g, double envelope);

double admissible_fraction(const std::vector<Path>& ensemble, const ActionModel& model,
                           const geometry::Metric& g, double tol);

/// Plain-text table, one vertex per line: `tau x0 x1 ... x{N-1}`.
void write_path(std::ostream& out, const Path& path);

/// Reads the table written by write_path. Blank lines and lines starting with
/// '#' are skipped. Throws ParseError on malformed rows or non-increasing tau.
Path read_path(std::istream& in);

}  // namespace rpq::paths
