#include "rpq/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>

#include <CLI11.hpp>

#include "rpq/csv.hpp"
#include "rpq/error.hpp"
#include "rpq/geometry.hpp"
#include "rpq/kgladder.hpp"
#include "rpq/maxwell.hpp"
#include "rpq/modes.hpp"
#include "rpq/paths.hpp"
#include "rpq/propagator.hpp"
#include "rpq/spectral.hpp"
#include "rpq/svg_plot.hpp"

namespace rpq::cli {

namespace {

namespace fs = std::filesystem;

/// Named-parameter precondition failure.
class ParameterError : public DomainError {
 public:
  ParameterError(const std::string& name, const std::string& what) : DomainError("--" + name + ": " + what) {}
};

void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw ParameterError(name, what);
}

struct Globals {
  std::string out_dir = ".";
  std::uint64_t seed = 1;
};

struct SpectrumArgs {
  double eta = 1.0;
  std::string scheme = "schrodinger";
  int count = 5;
  std::optional<int> points;
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::string branch = "positive";
  std::vector<double> nonrel;
};

struct ScanArgs {
  double omega = 1.0;
  double k_max = 5.0;
  double tol = 1e-6;
};

struct EnergyArgs {
  std::string scheme = "present";
  double omega = 1.0;
  int n_max = 10;
};

struct WaveArgs {
  int dim = 1;
  int points = 64;
  double length = 1.0;
  double cfl = 0.5;
  int steps = 1000;
  int mode = 1;
};

struct PropagateArgs {
  std::string model = "oscillator";
  double mass = 1.0;
  double eta = 1.0;
  double time = 1.0;
  std::vector<double> eps{0.1, 0.05, 0.025, 0.0125};
  double x_min = -8.0;
  double x_max = 8.0;
  int points = 801;
  double center = 0.5;
  double sigma = 1.0;
};

struct PathSampleArgs {
  int count = 1000;
  int segments = 20;
  double envelope = 1.0;
  int dim = 4;
  double mass = 1.0;
  double tol = 1e-6;
};

struct PathCheckArgs {
  std::string input;
  std::string model = "arclength";
  double mass = 1.0;
  double eta = 0.0;
  double tol = 1e-6;
};

struct MaxwellArgs {
  int dim = 4;
  std::vector<int> points{8, 16, 32};
  int frames = 5;
  int mode = 1;
  double amplitude = 1.0;
};

struct LadderArgs {
  double m = 1.0;
  int n_min = 0;
  int n_max = 3;
  std::string convention = "eq5";
};

struct PlotArgs {
  std::string input;
  std::string kind = "lines";
  std::string output;
};

class Outputs {
 public:
  explicit Outputs(const std::string& dir) : dir_(dir) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) throw ParameterError("out", "cannot create directory '" + dir + "'");
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

  void write_to(const fs::path& file, const std::function<void(std::ostream&)>& body, std::ostream& log) const {
    std::ofstream f(file, std::ios::binary);
    if (!f) throw ParameterError("out", "cannot write '" + file.string() + "'");
    body(f);
    f.close();
    if (!f) throw ParameterError("out", "write failed for '" + file.string() + "'");
    log << "wrote " << file.string() << '\n';
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body, std::ostream& log) const {
    write_to(path(name), body, log);
  }

 private:
  fs::path dir_;
};

void run_spectrum(const SpectrumArgs& a, const Outputs& outputs, std::ostream& log) {
  require(a.count >= 1, "count", "must be >= 1");
  require(a.branch == "positive" || a.branch == "negative", "branch", "must be positive or negative");
  const auto branch = a.branch == "positive" ? spectral::Branch::positive : spectral::Branch::negative;

  std::optional<spectral::Spectrum> s;
  if (a.scheme == "schrodinger") {
    require(a.eta > 0.0, "eta", "must be > 0");
    const Grid1D grid(a.x_min.value_or(-10.0), a.x_max.value_or(10.0), a.points.value_or(2001));
    require(a.count <= grid.points() - 2, "count", "exceeds the interior grid points");
    s = spectral::schrodinger_spectrum(a.eta, grid, a.count);
  } else if (a.scheme == "kg" || a.scheme == "kk") {
    require(a.eta >= 0.0, "eta", "must be >= 0");
    const int points = a.points.value_or(401);
    require(points >= 3, "points", "must be >= 3");
    std::optional<Grid1D> grid;
    if (a.x_min || a.x_max) {
      require(a.x_min && a.x_max, "xmin", "--xmin and --xmax must be given together");
      grid.emplace(*a.x_min, *a.x_max, points);
    } else {
      require(a.eta > 0.0, "eta", "eta = 0 needs an explicit --xmin/--xmax box");
      grid = spectral::default_oscillator_grid(a.eta, points);
    }
    require(a.count <= grid->points() - 2, "count", "exceeds the interior grid points");
    s = a.scheme == "kg" ? spectral::kg_oscillator_spectrum(a.eta, *grid, a.count, branch)
                         : spectral::kk_oscillator_spectrum(a.eta, *grid, a.count, branch);
  } else {
    throw ParameterError("scheme", "must be schrodinger, kg or kk");
  }

  outputs.write("spectrum.csv", [&](std::ostream& f) {
    csv::Writer w(f, {"n", "eigenvalue", "scheme", "eta"});
    for (std::size_t n = 0; n < s->eigenvalues.size(); ++n) {
      w.row({std::to_string(n), csv::format_double(s->eigenvalues[n]), s->scheme, csv::format_double(s->eta)});
    }
  }, log);

  if (!a.nonrel.empty()) {
    const auto rows = spectral::nonrel_limit_report(a.nonrel);
    outputs.write("nonrel.csv", [&](std::ostream& f) {
      csv::Writer w(f, {"eta", "max_relative_deviation"});
      for (const auto& r : rows) w.row({csv::format_double(r.eta), csv::format_double(r.max_relative_deviation)});
    }, log);
  }
}

void run_scan(const ScanArgs& a, const Outputs& outputs, std::ostream& log) {
  require(a.omega > 0.0, "omega", "must be > 0");
  require(a.tol > 0.0, "tol", "must be > 0");
  const auto rows = modes::scan_modes(a.omega, a.k_max, a.tol);
  outputs.write("modes_scan.csv", [&](std::ostream& f) { modes::write_scan_csv(f, rows); }, log);
}

void run_energy(const EnergyArgs& a, const Outputs& outputs, std::ostream& log) {
  require(a.omega > 0.0, "omega", "must be > 0");
  require(a.n_max >= 0, "nmax", "must be >= 0");
  const auto s = modes::energy_spectrum(modes::parse_scheme(a.scheme), a.omega, a.n_max);
  outputs.write("modes_energy.csv", [&](std::ostream& f) { modes::write_energy_csv(f, s); }, log);
}

void run_wave(const WaveArgs& a, const Outputs& outputs, std::ostream& log) {
  require(a.dim >= 1 && a.dim <= 3, "dim", "must be 1, 2 or 3");
  require(a.points >= 2, "points", "must be >= 2");
  require(a.length > 0.0, "length", "must be > 0");
  require(a.cfl > 0.0, "cfl", "must be > 0");
  require(a.steps >= 0, "steps", "must be >= 0");
  const modes::PeriodicGrid grid(a.dim, a.points, a.length);
  const double dt = a.cfl * grid.spacing() / std::sqrt(static_cast<double>(a.dim));
  const double k = 2.0 * std::numbers::pi * a.mode / a.length;
  Eigen::MatrixXd initial(1, grid.size());
  for (int p = 0; p < grid.size(); ++p) initial(0, p) = std::sin(k * grid.coordinate(p, 0));
  const auto field = modes::wave_solve(grid, dt, initial, Eigen::MatrixXd::Zero(1, grid.size()), a.steps);
  const auto energy = modes::energy_series(field);
  outputs.write("wave_energy.csv", [&](std::ostream& f) {
    csv::Writer w(f, {"step", "time", "energy"});
    for (std::size_t s = 0; s < energy.size(); ++s) {
      w.row({std::to_string(s), csv::format_double((s + 0.5) * dt), csv::format_double(energy[s])});
    }
  }, log);
  outputs.write("wave_snapshot.csv", [&](std::ostream& f) {
    modes::write_field_snapshot(f, field, static_cast<int>(field.frames.size()) - 1);
  }, log);
}

void run_propagate(const PropagateArgs& a, const Outputs& outputs, std::ostream& log) {
  require(a.mass > 0.0, "mass", "must be > 0");
  require(a.time > 0.0, "time", "must be > 0");
  require(!a.eps.empty(), "eps", "needs at least one step");
  require(a.sigma > 0.0, "sigma", "must be > 0");
  propagator::Model model;
  if (a.model == "free") {
    model = propagator::FreeModel{a.mass};
  } else if (a.model == "oscillator") {
    require(a.eta >= 0.0, "eta", "must be >= 0");
    model = propagator::OscillatorModel{a.mass, a.eta};
  } else {
    throw ParameterError("model", "must be free or oscillator");
  }
  for (double e : a.eps) {
    require(e > 0.0, "eps", "every step must be > 0");
    const double r = a.time / e;
    require(std::abs(r - std::round(r)) <= 1e-9 * std::max(1.0, r), "eps",
            csv::format_double(e) + " does not divide --time");
  }
  const Grid1D grid(a.x_min, a.x_max, a.points);
  const auto f = propagator::GridFunction::sample(
      grid, [&](double x) { return std::exp(-(x - a.center) * (x - a.center) / (2.0 * a.sigma * a.sigma)); });
  const auto rows = propagator::convergence_study(model, f, a.time, a.eps);
  outputs.write("propagate.csv", [&](std::ostream& o) { propagator::write_convergence_csv(o, rows); }, log);
}

void write_reports(std::ostream& f, const std::vector<paths::AdmissibilityReport>& reports,
                   const std::vector<double>& actions) {
  csv::Writer w(f, {"index", "action", "nearest_n", "deviation", "admissible"});
  for (std::size_t i = 0; i < reports.size(); ++i) {
    w.row({std::to_string(i), csv::format_double(actions[i]), std::to_string(reports[i].nearest_n),
           csv::format_double(reports[i].deviation), reports[i].admissible ? "1" : "0"});
  }
}

void run_path_sample(const PathSampleArgs& a, std::uint64_t seed, const Outputs& outputs, std::ostream& log) {
  require(a.count >= 1, "count", "must be >= 1");
  require(a.segments >= 1, "segments", "must be >= 1");
  require(a.envelope > 0.0, "envelope", "must be > 0");
  require(a.dim >= 2, "dim", "must be >= 2");
  require(a.mass > 0.0, "mass", "must be > 0");
  require(a.tol > 0.0 && a.tol <= std::numbers::pi, "tol", "must lie in (0, pi]");
  const auto g = geometry::minkowski_metric(a.dim);
  const auto ensemble = paths::sample_paths(seed, a.count, a.segments, g, a.envelope);
  const paths::ActionModel model = paths::ArcLength{a.mass};
  std::vector<paths::AdmissibilityReport> reports;
  std::vector<double> actions;
  for (const auto& p : ensemble) {
    actions.push_back(paths::action(p, model, g));
    reports.push_back(paths::is_admissible(p, model, g, a.tol));
  }
  outputs.write("paths.csv", [&](std::ostream& f) { write_reports(f, reports, actions); }, log);
  log << "admissible_fraction " << csv::format_double(paths::admissible_fraction(ensemble, model, g, a.tol)) << '\n';
}

void run_path_check(const PathCheckArgs& a, const Outputs& outputs, std::ostream& log) {
  require(a.tol > 0.0 && a.tol <= std::numbers::pi, "tol", "must lie in (0, pi]");
  std::ifstream in(a.input);
  require(static_cast<bool>(in), "input", "cannot open '" + a.input + "'");
  const auto path = paths::read_path(in);
  paths::ActionModel model;
  if (a.model == "arclength") {
    require(a.mass > 0.0, "mass", "must be > 0");
    model = paths::ArcLength{a.mass};
  } else if (a.model == "freealt") {
    require(a.mass > 0.0, "mass", "must be > 0");
    model = paths::FreeAlt{a.mass};
  } else if (a.model == "relho") {
    require(a.eta >= 0.0, "eta", "must be >= 0");
    model = paths::RelHO{a.eta};
  } else {
    throw ParameterError("model", "must be arclength, freealt or relho");
  }
  const auto g = geometry::minkowski_metric(path.dim());
  const std::vector<double> actions{paths::action(path, model, g)};
  const std::vector<paths::AdmissibilityReport> reports{paths::is_admissible(path, model, g, a.tol)};
  outputs.write("paths_check.csv", [&](std::ostream& f) { write_reports(f, reports, actions); }, log);
}

// Transverse light wave xi^2 = A sin(k (t - x^1)) on [0, 2 pi)^(N-1), dt = h/2.
modes::FieldConfig plane_wave_potential(int n_dim, int points, int frames, int mode, double amplitude) {
  const modes::PeriodicGrid grid(n_dim - 1, points, 2.0 * std::numbers::pi);
  const double dt = 0.5 * grid.spacing();
  modes::FieldConfig f{grid, dt, n_dim, {}};
  for (int t = 0; t < frames; ++t) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_dim, grid.size());
    for (int p = 0; p < grid.size(); ++p) m(2, p) = amplitude * std::sin(mode * (t * dt - grid.coordinate(p, 0)));
    f.frames.push_back(std::move(m));
  }
  return f;
}

void run_maxwell(const MaxwellArgs& a, const Outputs& outputs, std::ostream& log) {
  require(a.dim >= 3 && a.dim <= 4, "dim", "must be 3 or 4 (spatial grids of dimension 2 or 3)");
  require(!a.points.empty(), "points", "needs at least one resolution");
  for (int n : a.points) require(n >= 4, "points", "every resolution must be >= 4");
  require(a.frames >= 5, "frames", "must be >= 5");
  const auto g = geometry::minkowski_metric(a.dim);
  std::vector<maxwell::ResidualRow> rows;
  for (int n : a.points) {
    const auto xi = plane_wave_potential(a.dim, n, a.frames, a.mode, a.amplitude);
    const auto f = maxwell::field_tensor(xi, g);
    const double h = xi.grid.spacing();
    rows.push_back({"jacobi", a.dim, h, maxwell::jacobi_residual(f, g)});
    rows.push_back({"lorenz_gauge", a.dim, h, maxwell::lorenz_gauge_residual(xi, g)});
    rows.push_back({"source_free", a.dim, h, maxwell::source_free_residual(f, xi, g)});
  }
  outputs.write("maxwell.csv", [&](std::ostream& o) { maxwell::write_residual_csv(o, rows); }, log);
}

void run_ladder(const LadderArgs& a, const Outputs& outputs, std::ostream& log) {
  require(a.m > 0.0, "m", "must be > 0");
  require(a.n_min <= a.n_max, "nmin", "must not exceed --nmax");
  const auto rows = kgladder::ladder_table(kgladder::parse_convention(a.convention), a.m, a.n_min, a.n_max);
  outputs.write("ladder.csv", [&](std::ostream& o) { kgladder::write_ladder_csv(o, rows); }, log);
}

void run_plot(const PlotArgs& a, const Outputs& outputs, std::ostream& log) {
  require(!a.input.empty(), "input", "is required");
  const auto kind = plot::parse_kind(a.kind);
  const auto table = csv::read_file(a.input);
  const std::string svg = plot::render_svg(table, kind);
  const fs::path target =
      a.output.empty() ? outputs.path(fs::path(a.input).stem().string() + ".svg") : fs::path(a.output);
  outputs.write_to(target, [&](std::ostream& o) { o << svg; }, log);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relativistic path-quantization studies: spectra, modes, kernels, paths, fields, mass ladders.",
               "rpq"};
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "TOML file with option values; flags override file values");
  app.require_subcommand(1);

  Globals globals;
  app.add_option("--out", globals.out_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", globals.seed, "Seed for stochastic studies")->capture_default_str();

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Oscillator spectra: schrodinger, kg or kk");
  sp->add_option("--eta", spectrum.eta, "Oscillator stiffness")->capture_default_str();
  sp->add_option("--scheme", spectrum.scheme, "schrodinger | kg | kk")->capture_default_str();
  sp->add_option("--count", spectrum.count, "Number of levels")->capture_default_str();
  sp->add_option("--points", spectrum.points, "Grid points (default 2001 schrodinger, 401 kg/kk)");
  sp->add_option("--xmin", spectrum.x_min, "Left wall (default -10, or -6 eta^-1/4 for kg/kk)");
  sp->add_option("--xmax", spectrum.x_max, "Right wall");
  sp->add_option("--branch", spectrum.branch, "positive | negative (kg/kk)")->capture_default_str();
  sp->add_option("--nonrel", spectrum.nonrel, "Descending eta list for nonrel.csv")->delimiter(',');

  auto* md = app.add_subcommand("modes", "Zero-mass field modes");
  md->require_subcommand(1);
  ScanArgs scan;
  auto* md_scan = md->add_subcommand("scan", "Periodicity scan of pure modes");
  md_scan->add_option("--omega", scan.omega, "Fundamental frequency")->capture_default_str();
  md_scan->add_option("--kmax", scan.k_max, "Largest wavenumber scanned")->capture_default_str();
  md_scan->add_option("--tol", scan.tol, "Periodicity tolerance")->capture_default_str();
  EnergyArgs energy;
  auto* md_energy = md->add_subcommand("energy", "Energy levels of a vacuum-energy scheme");
  md_energy->add_option("--scheme", energy.scheme, "present | standard")->capture_default_str();
  md_energy->add_option("--omega", energy.omega, "Mode frequency")->capture_default_str();
  md_energy->add_option("--nmax", energy.n_max, "Highest level")->capture_default_str();
  WaveArgs wave;
  auto* md_wave = md->add_subcommand("wave", "Leapfrog standing wave with energy trace");
  md_wave->add_option("--dim", wave.dim, "Spatial dimension")->capture_default_str();
  md_wave->add_option("--points", wave.points, "Points per axis")->capture_default_str();
  md_wave->add_option("--length", wave.length, "Box length")->capture_default_str();
  md_wave->add_option("--cfl", wave.cfl, "dt / (h / sqrt(d))")->capture_default_str();
  md_wave->add_option("--steps", wave.steps, "Time steps")->capture_default_str();
  md_wave->add_option("--mode", wave.mode, "Wavenumber index along x0")->capture_default_str();

  PropagateArgs prop;
  auto* pr = app.add_subcommand("propagate", "Euclidean kernel convergence study");
  pr->add_option("--model", prop.model, "free | oscillator")->capture_default_str();
  pr->add_option("--mass", prop.mass, "Mass")->capture_default_str();
  pr->add_option("--eta", prop.eta, "Oscillator stiffness")->capture_default_str();
  pr->add_option("--time", prop.time, "Total Euclidean time T")->capture_default_str();
  pr->add_option("--eps", prop.eps, "Step sizes, each dividing T")->delimiter(',')->capture_default_str();
  pr->add_option("--xmin", prop.x_min, "Grid start")->capture_default_str();
  pr->add_option("--xmax", prop.x_max, "Grid end")->capture_default_str();
  pr->add_option("--points", prop.points, "Grid points")->capture_default_str();
  pr->add_option("--center", prop.center, "Initial Gaussian centre")->capture_default_str();
  pr->add_option("--sigma", prop.sigma, "Initial Gaussian width")->capture_default_str();

  auto* pa = app.add_subcommand("paths", "Path ensembles and the action filter");
  pa->require_subcommand(1);
  PathSampleArgs sample;
  auto* pa_sample = pa->add_subcommand("sample", "Sample a seeded ensemble and filter it");
  pa_sample->add_option("--count", sample.count, "Number of paths")->capture_default_str();
  pa_sample->add_option("--segments", sample.segments, "Segments per path")->capture_default_str();
  pa_sample->add_option("--envelope", sample.envelope, "Spatial step bound")->capture_default_str();
  pa_sample->add_option("--dim", sample.dim, "Space-time dimension N")->capture_default_str();
  pa_sample->add_option("--mass", sample.mass, "Mass m")->capture_default_str();
  pa_sample->add_option("--tol", sample.tol, "Admissibility tolerance")->capture_default_str();
  PathCheckArgs check;
  auto* pa_check = pa->add_subcommand("check", "Filter a path read from a text table");
  pa_check->add_option("--input", check.input, "Path table `tau x0 ... x{N-1}`")->required();
  pa_check->add_option("--model", check.model, "arclength | freealt | relho")->capture_default_str();
  pa_check->add_option("--mass", check.mass, "Mass m")->capture_default_str();
  pa_check->add_option("--eta", check.eta, "Stiffness for relho")->capture_default_str();
  pa_check->add_option("--tol", check.tol, "Admissibility tolerance")->capture_default_str();

  MaxwellArgs mx;
  auto* mw = app.add_subcommand("maxwell", "Discrete field-tensor identities for a plane wave");
  mw->add_option("--dim", mx.dim, "Space-time dimension N")->capture_default_str();
  mw->add_option("--points", mx.points, "Points per axis, one row block each")->delimiter(',')->capture_default_str();
  mw->add_option("--frames", mx.frames, "Time frames")->capture_default_str();
  mw->add_option("--mode", mx.mode, "Wavenumber on the 2 pi box")->capture_default_str();
  mw->add_option("--amplitude", mx.amplitude, "Wave amplitude")->capture_default_str();

  LadderArgs ladder;
  auto* ld = app.add_subcommand("ladder", "Effective mass ladder");
  ld->add_option("--m", ladder.m, "Base mass")->capture_default_str();
  ld->add_option("--nmin", ladder.n_min, "First harmonic")->capture_default_str();
  ld->add_option("--nmax", ladder.n_max, "Last harmonic")->capture_default_str();
  ld->add_option("--convention", ladder.convention, "eq5 | eq12")->capture_default_str();

  PlotArgs plot_args;
  auto* pl = app.add_subcommand("plot", "Render a CSV table as SVG");
  pl->add_option("--input", plot_args.input, "CSV file")->required();
  pl->add_option("--kind", plot_args.kind, "lines | stems | heatmap")->capture_default_str();
  pl->add_option("--output", plot_args.output, "SVG file (default OUT/<input stem>.svg)");

  std::vector<std::string> argv_storage{"rpq"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::string context = "rpq";
  try {
    const Outputs outputs(globals.out_dir);
    if (sp->parsed()) {
      context = "spectrum";
      run_spectrum(spectrum, outputs, out);
    } else if (md_scan->parsed()) {
      context = "modes scan";
      run_scan(scan, outputs, out);
    } else if (md_energy->parsed()) {
      context = "modes energy";
      run_energy(energy, outputs, out);
    } else if (md_wave->parsed()) {
      context = "modes wave";
      run_wave(wave, outputs, out);
    } else if (pr->parsed()) {
      context = "propagate";
      run_propagate(prop, outputs, out);
    } else if (pa_sample->parsed()) {
      context = "paths sample";
      run_path_sample(sample, globals.seed, outputs, out);
    } else if (pa_check->parsed()) {
      context = "paths check";
      run_path_check(check, outputs, out);
    } else if (mw->parsed()) {
      context = "maxwell";
      run_maxwell(mx, outputs, out);
    } else if (ld->parsed()) {
      context = "ladder";
      run_ladder(ladder, outputs, out);
    } else if (pl->parsed()) {
      context = "plot";
      run_plot(plot_args, outputs, out);
    }
  } catch (const NumericalError& e) {
    err << "rpq: " << context << ": numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    err << "rpq: " << context << ": " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "rpq: " << context << ": " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}

}  // namespace rpq::cli
