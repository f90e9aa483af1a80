#include "rpq/paths.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "rpq/csv.hpp"
#include "rpq/error.hpp"

namespace rpq::paths {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dims(const Path& path, const geometry::Metric& g) {
  if (path.dim() != g.dim()) {
    throw DimensionError("path has " + std::to_string(path.dim()) + " coordinates, metric has " +
                         std::to_string(g.dim()));
  }
}

// Interval of one segment; null segments perturbed by rounding are clamped to zero.
double causal_interval(const Event& dx, const geometry::Metric& g, std::size_t segment) {
  const double s = geometry::interval(g, dx);
  double scale = 0.0;
  for (double c : dx) scale += c * c;
  if (s < -64.0 * std::numeric_limits<double>::epsilon() * scale) {
    throw CausalityError("segment " + std::to_string(segment) + " is spacelike (interval " +
                         csv::format_double(s) + ")");
  }
  return std::max(s, 0.0);
}

int time_direction(const Event& dx) {
  if (dx[0] > 0.0) return 1;
  if (dx[0] < 0.0) return -1;
  return 0;
}

void validate(const ActionModel& model) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, RelHO>) {
          if (!(m.stiffness >= 0.0)) throw DomainError("RelHO stiffness must be >= 0");
        } else {
          if (!(m.mass > 0.0)) throw DomainError("action model mass must be > 0");
        }
      },
      model);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; std distributions are not
// reproducible across standard libraries.
double unit_uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

Path::Path(std::vector<Event> events, std::vector<double> params)
    : events_(std::move(events)), params_(std::move(params)) {
  if (events_.size() < 2) throw DomainError("a path needs at least two vertices");
  if (events_.size() != params_.size()) {
    throw DimensionError("path has " + std::to_string(events_.size()) + " events but " +
                         std::to_string(params_.size()) + " parameter values");
  }
  const std::size_t n = events_.front().size();
  if (n == 0) throw DimensionError("path events must have at least one coordinate");
  for (const auto& e : events_) {
    if (e.size() != n) throw DimensionError("path events differ in dimension");
  }
  for (std::size_t i = 1; i < params_.size(); ++i) {
    if (!(params_[i] > params_[i - 1])) {
      throw DomainError("path parameters must be strictly increasing (vertex " + std::to_string(i) + ")");
    }
  }
}

Event Path::displacement(std::size_t i) const {
  Event dx(events_[i].size());
  for (std::size_t mu = 0; mu < dx.size(); ++mu) dx[mu] = events_[i + 1][mu] - events_[i][mu];
  return dx;
}

double proper_time(const Path& path, const geometry::Metric& g) {
  check_dims(path, g);
  double tau = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) tau += std::sqrt(causal_interval(path.displacement(i), g, i));
  return tau;
}

std::vector<std::pair<std::size_t, std::size_t>> monotonic_segments(const Path& path) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  int current = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int dir = time_direction(path.displacement(i));
    if (runs.empty() || (dir != 0 && current != 0 && dir != current)) {
      runs.emplace_back(i, i);
      current = dir;
    } else {
      runs.back().second = i;
      if (current == 0) current = dir;
    }
  }
  return runs;
}

double action(const Path& path, const ActionModel& model, const geometry::Metric& g) {
  check_dims(path, g);
  validate(model);

  if (const auto* arc = std::get_if<ArcLength>(&model)) {
    double s = 0.0;
    for (auto [first, last] : monotonic_segments(path)) {
      double run = 0.0;
      int dir = 0;
      for (std::size_t i = first; i <= last; ++i) {
        const Event dx = path.displacement(i);
        run += std::sqrt(causal_interval(dx, g, i));
        if (dir == 0) dir = time_direction(dx);
      }
      s += (dir < 0 ? -1.0 : 1.0) * arc->mass * run;
    }
    return s;
  }

  if (const auto* alt = std::get_if<FreeAlt>(&model)) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const double dtau = path.params()[i + 1] - path.params()[i];
      const double xdot2 = geometry::interval(g, path.displacement(i)) / (dtau * dtau);
      s += 0.5 * alt->mass * (xdot2 + 1.0) * dtau;
    }
    return s;
  }

  const auto& ho = std::get<RelHO>(model);
  if (g.dim() != 2) throw DimensionError("RelHO action needs a (t, q) path in 2 dimensions");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const double dtau = path.params()[i + 1] - path.params()[i];
    const Event dx = path.displacement(i);
    const double tdot = dx[0] / dtau;
    const double q_mid = 0.5 * (path.events()[i][1] + path.events()[i + 1][1]);
    const double lagrangian =
        0.5 * (geometry::interval(g, dx) / (dtau * dtau) + 1.0 + ho.stiffness * q_mid * q_mid * tdot);
    s += lagrangian * dtau;
  }
  return s;
}

AdmissibilityReport is_admissible(const Path& path, const ActionModel& model, const geometry::Metric& g,
                                  double tol) {
  if (!(tol > 0.0 && tol <= std::numbers::pi)) {
    throw DomainError("admissibility tolerance must lie in (0, pi], got " + csv::format_double(tol));
  }
  const double s = action(path, model, g);
  const long long n = std::llround(s / kTwoPi);
  const double deviation = std::abs(s - kTwoPi * static_cast<double>(n));
  return {deviation <= tol, n, deviation};
}

Path translate_parameter(const Path& path, double delta_tau) {
  std::vector<double> params = path.params();
  for (double& t : params) t += delta_tau;
  return Path(path.events(), std::move(params));
}

Path reverse(const Path& path) {
  const std::size_t n = path.size();
  std::vector<Event> events(path.events().rbegin(), path.events().rend());
  std::vector<double> params(n);
  for (std::size_t i = 0; i < n; ++i) params[i] = -path.params()[n - 1 - i];
  return Path(std::move(events), std::move(params));
}

Path subpath(const Path& path, std::size_t first, std::size_t last) {
  if (first >= last || last >= path.size()) {
    throw IndexError("subpath range [" + std::to_string(first) + ", " + std::to_string(last) +
                     "] invalid for a path of " + std::to_string(path.size()) + " vertices");
  }
  using Diff = std::vector<Event>::difference_type;
  std::vector<Event> events(path.events().begin() + static_cast<Diff>(first),
                            path.events().begin() + static_cast<Diff>(last) + 1);
  std::vector<double> params(path.params().begin() + static_cast<Diff>(first),
                             path.params().begin() + static_cast<Diff>(last) + 1);
  return Path(std::move(events), std::move(params));
}

std::vector<Path> sample_paths(std::uint64_t seed, int count, int segments, const geometry::Metric& g,
                               double envelope) {
  if (count < 0) throw DomainError("path count must be >= 0");
  if (segments < 1) throw DomainError("paths need at least one segment");
  if (!(envelope > 0.0)) throw DomainError("spatial step envelope must be > 0");
  if (g[0] != 1) throw DomainError("path sampling expects a metric with a leading +1 time entry");
  for (int mu = 1; mu < g.dim(); ++mu) {
    if (g[mu] != -1) throw DomainError("path sampling expects spatial metric entries of -1");
  }

  std::vector<Path> ensemble;
  ensemble.reserve(static_cast<std::size_t>(count));
  const std::size_t n = static_cast<std::size_t>(g.dim());
  for (int index = 0; index < count; ++index) {
    std::mt19937_64 gen(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index))));
    std::vector<Event> events(1, Event(n, 0.0));
    std::vector<double> params(1, 0.0);
    for (int s = 0; s < segments; ++s) {
      Event next = events.back();
      double r2 = 0.0;
      for (std::size_t a = 1; a < n; ++a) {
        const double step = envelope * (2.0 * unit_uniform(gen) - 1.0);
        next[a] += step;
        r2 += step * step;
      }
      const double dt = std::sqrt(r2) + envelope * (0.05 + unit_uniform(gen));
      next[0] += dt;
      const double dtau = std::sqrt(dt * dt - r2);
      params.push_back(params.back() + dtau);
      events.push_back(std::move(next));
    }
    ensemble.emplace_back(std::move(events), std::move(params));
  }
  return ensemble;
}

double admissible_fraction(const std::vector<Path>& ensemble, const ActionModel& model,
                           const geometry::Metric& g, double tol) {
  if (ensemble.empty()) throw DomainError("admissible_fraction needs a non-empty ensemble");
  std::size_t hits = 0;
  for (const auto& p : ensemble) {
    if (is_admissible(p, model, g, tol).admissible) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(ensemble.size());
}

void write_path(std::ostream& out, const Path& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    out << csv::format_double(path.params()[i]);
    for (double c : path.events()[i]) out << ' ' << csv::format_double(c);
    out << '\n';
  }
}

Path read_path(std::istream& in) {
  std::vector<Event> events;
  std::vector<double> params;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream tokens(line);
    std::vector<double> values;
    std::string token;
    while (tokens >> token) {
      auto v = csv::parse_double(token);
      if (!v) throw ParseError("line " + std::to_string(line_no) + ": '" + token + "' is not a number");
      values.push_back(*v);
    }
    if (values.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected tau followed by coordinates");
    }
    if (!events.empty() && values.size() - 1 != events.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": coordinate count changed");
    }
    if (!params.empty() && !(values[0] > params.back())) {
      throw ParseError("line " + std::to_string(line_no) + ": tau must be strictly increasing");
    }
    params.push_back(values[0]);
    events.emplace_back(values.begin() + 1, values.end());
  }
  if (events.size() < 2) throw ParseError("path table needs at least two vertices");
  return Path(std::move(events), std::move(params));
}

}  // namespace rpq::paths
