#pragma once

#include <string>

#include "rpq/error.hpp"

namespace rpq {

/// Uniform 1D grid including both end points.
class Grid1D {
 public:
  Grid1D(double x_min, double x_max, int points) : x_min_(x_min), x_max_(x_max), points_(points) {
    if (!(x_min < x_max)) throw DomainError("grid requires x_min < x_max");
    if (points < 3) throw DomainError("grid requires at least 3 points, got " + std::to_string(points));
  }

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int points() const { return points_; }
  double spacing() const { return (x_max_ - x_min_) / (points_ - 1); }
  double x(int i) const { return x_min_ + i * spacing(); }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  double x_min_;
  double x_max_;
  int points_;
};

}  // namespace rpq
