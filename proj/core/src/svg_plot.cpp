#include "rpq/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "rpq/error.hpp"

namespace rpq::plot {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 50.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Column {
  std::string name;
  std::vector<std::optional<double>> values;
};

std::vector<Column> numeric_columns(const csv::Table& t) {
  std::vector<Column> cols;
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    Column col{t.header[c], {}};
    bool numeric = true;
    for (const auto& row : t.rows) {
      if (row[c].empty()) {
        col.values.push_back(std::nullopt);
        continue;
      }
      const auto v = csv::parse_double(row[c]);
      if (!v || !std::isfinite(*v)) {
        numeric = false;
        break;
      }
      col.values.push_back(v);
    }
    if (numeric) cols.push_back(std::move(col));
  }
  return cols;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    } else if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

class Canvas {
 public:
  Canvas(std::string x_label, std::string y_label, Range x, Range y, bool log_axes)
      : x_(x), y_(y), log_(log_axes) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
         << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    axes(x_label, y_label);
  }

  double px(double v) const { return kLeft + (kWidth - kLeft - kRight) * (v - x_.lo) / (x_.hi - x_.lo); }
  double py(double v) const { return kHeight - kBottom - (kHeight - kTop - kBottom) * (v - y_.lo) / (y_.hi - y_.lo); }

  std::ostringstream& body() { return out_; }

  void text(double x, double y, const std::string& s, const char* anchor = "middle") {
    out_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\"" << anchor << "\">" << escape(s)
         << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  void axes(const std::string& x_label, const std::string& y_label) {
    const double x0 = kLeft;
    const double x1 = kWidth - kRight;
    const double y0 = kHeight - kBottom;
    const double y1 = kTop;
    out_ << "<g stroke=\"black\" fill=\"none\">\n"
         << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0 << "\"/>\n"
         << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1 << "\"/>\n"
         << "</g>\n";
    for (int i = 0; i <= 4; ++i) {
      const double xv = x_.lo + (x_.hi - x_.lo) * i / 4.0;
      const double yv = y_.lo + (y_.hi - y_.lo) * i / 4.0;
      text(px(xv), y0 + 16.0, num(log_ ? std::pow(10.0, xv) : xv));
      text(x0 - 6.0, py(yv) + 4.0, num(log_ ? std::pow(10.0, yv) : yv), "end");
    }
    text(0.5 * (x0 + x1), kHeight - 10.0, log_ ? x_label + " (log)" : x_label);
    out_ << "<text x=\"16\" y=\"" << num(0.5 * (y0 + y1)) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
         << num(0.5 * (y0 + y1)) << ")\">" << escape(log_ ? y_label + " (log)" : y_label) << "</text>\n";
  }

  Range x_;
  Range y_;
  bool log_;
  std::ostringstream out_;
};

std::string no_data(const std::string& x_label, const std::string& y_label) {
  Range r;
  r.finish();
  Canvas canvas(x_label, y_label, r, r, false);
  canvas.text(0.5 * (kLeft + kWidth - kRight), 0.5 * (kTop + kHeight - kBottom), "no data");
  return canvas.finish();
}

const Column* find(const std::vector<Column>& cols, const std::string& name) {
  for (const auto& c : cols) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string render_lines(const std::vector<Column>& cols, std::size_t rows) {
  if (cols.size() < 2) throw ParseError("line plot needs at least two numeric columns");
  const Column* xc = &cols[0];
  std::vector<const Column*> series;
  const bool convergence = find(cols, "epsilon") && find(cols, "l2_error");
  if (convergence) {
    xc = find(cols, "epsilon");
    series.push_back(find(cols, "l2_error"));
  } else {
    for (std::size_t i = 1; i < cols.size(); ++i) series.push_back(&cols[i]);
  }
  const std::string y_label = series.size() == 1 ? series[0]->name : "value";
  if (rows == 0) return no_data(xc->name, y_label);

  auto map = [convergence](double v) -> std::optional<double> {
    if (!convergence) return v;
    if (v > 0.0) return std::log10(v);
    return std::nullopt;
  };
  std::vector<std::vector<std::pair<double, double>>> points(series.size());
  Range xr;
  Range yr;
  for (std::size_t s = 0; s < series.size(); ++s) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (!xc->values[r] || !series[s]->values[r]) continue;
      const auto x = map(*xc->values[r]);
      const auto y = map(*series[s]->values[r]);
      if (!x || !y) continue;
      points[s].emplace_back(*x, *y);
      xr.add(*x);
      yr.add(*y);
    }
  }
  xr.finish();
  yr.finish();
  Canvas canvas(xc->name, y_label, xr, yr, convergence);
  for (std::size_t s = 0; s < series.size(); ++s) {
    auto& pts = points[s];
    std::sort(pts.begin(), pts.end());
    const char* colour = kPalette[s % std::size(kPalette)];
    canvas.body() << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : pts) canvas.body() << num(canvas.px(x)) << ',' << num(canvas.py(y)) << ' ';
    canvas.body() << "\"/>\n";
    for (const auto& [x, y] : pts) {
      canvas.body() << "<circle cx=\"" << num(canvas.px(x)) << "\" cy=\"" << num(canvas.py(y)) << "\" r=\"2.5\" fill=\""
                    << colour << "\"/>\n";
    }
    if (series.size() > 1) canvas.text(kWidth - kRight - 4.0, kTop + 14.0 * (s + 1), series[s]->name, "end");
  }
  if (convergence && points[0].size() >= 2) {
    // Least-squares slope in log-log coordinates.
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : points[0]) {
      mx += x;
      my += y;
    }
    mx /= points[0].size();
    my /= points[0].size();
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [x, y] : points[0]) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    if (sxx > 0.0) canvas.text(kLeft + 10.0, kTop + 14.0, "slope " + num(sxy / sxx), "start");
  }
  return canvas.finish();
}

std::string render_stems(const std::vector<Column>& cols, std::size_t rows) {
  if (cols.size() < 2) throw ParseError("stem plot needs at least two numeric columns");
  const Column& xc = cols[0];
  const Column& yc = cols[1];
  if (rows == 0) return no_data(xc.name, yc.name);
  Range xr;
  Range yr;
  yr.add(0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!xc.values[r] || !yc.values[r]) continue;
    xr.add(*xc.values[r]);
    yr.add(*yc.values[r]);
  }
  // Pad so the outermost stems do not sit on the axes.
  const double pad = 0.05 * std::max(xr.hi - xr.lo, 1.0);
  xr.add(xr.lo - pad);
  xr.add(xr.hi + pad);
  xr.finish();
  yr.finish();
  Canvas canvas(xc.name, yc.name, xr, yr, false);
  const double base = canvas.py(0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!xc.values[r] || !yc.values[r]) continue;
    const double x = canvas.px(*xc.values[r]);
    const double y = canvas.py(*yc.values[r]);
    canvas.body() << "<line x1=\"" << num(x) << "\" y1=\"" << num(base) << "\" x2=\"" << num(x) << "\" y2=\""
                  << num(y) << "\" stroke=\"" << kPalette[0] << "\"/>\n"
                  << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"" << kPalette[0]
                  << "\"/>\n";
  }
  return canvas.finish();
}

std::string colour_ramp(double t) {
  // Blue to red through white.
  t = std::clamp(t, 0.0, 1.0);
  int r, g, b;
  if (t < 0.5) {
    const double u = t / 0.5;
    r = static_cast<int>(std::lround(59 + u * (255 - 59)));
    g = static_cast<int>(std::lround(76 + u * (255 - 76)));
    b = static_cast<int>(std::lround(192 + u * (255 - 192)));
  } else {
    const double u = (t - 0.5) / 0.5;
    r = static_cast<int>(std::lround(255 + u * (180 - 255)));
    g = static_cast<int>(std::lround(255 + u * (4 - 255)));
    b = static_cast<int>(std::lround(255 + u * (38 - 255)));
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string render_heatmap(const std::vector<Column>& cols, std::size_t rows) {
  if (cols.size() < 3) throw ParseError("heatmap needs three numeric columns (x, y, value)");
  const Column& xc = cols[0];
  const Column& yc = cols[1];
  const Column& vc = cols[2];
  if (rows == 0) return no_data(xc.name, yc.name);

  std::vector<double> xs, ys;
  Range vr;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!xc.values[r] || !yc.values[r] || !vc.values[r]) continue;
    xs.push_back(*xc.values[r]);
    ys.push_back(*yc.values[r]);
    vr.add(*vc.values[r]);
  }
  vr.finish();
  auto unique_sorted = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto ux = unique_sorted(xs);
  const auto uy = unique_sorted(ys);
  const double dx = ux.size() > 1 ? (ux.back() - ux.front()) / (ux.size() - 1) : 1.0;
  const double dy = uy.size() > 1 ? (uy.back() - uy.front()) / (uy.size() - 1) : 1.0;
  Range xr, yr;
  xr.add(ux.front() - 0.5 * dx);
  xr.add(ux.back() + 0.5 * dx);
  yr.add(uy.front() - 0.5 * dy);
  yr.add(uy.back() + 0.5 * dy);
  Canvas canvas(xc.name, yc.name, xr, yr, false);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!xc.values[r] || !yc.values[r] || !vc.values[r]) continue;
    const double x = *xc.values[r];
    const double y = *yc.values[r];
    const double left = canvas.px(x - 0.5 * dx);
    const double top = canvas.py(y + 0.5 * dy);
    canvas.body() << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
                  << num(canvas.px(x + 0.5 * dx) - left) << "\" height=\"" << num(canvas.py(y - 0.5 * dy) - top)
                  << "\" fill=\"" << colour_ramp((*vc.values[r] - vr.lo) / (vr.hi - vr.lo)) << "\"/>\n";
  }
  canvas.text(kWidth - kRight - 4.0, kTop - 10.0, vc.name + " [" + num(vr.lo) + ", " + num(vr.hi) + "]", "end");
  return canvas.finish();
}

}  // namespace

PlotKind parse_kind(const std::string& text) {
  if (text == "lines") return PlotKind::lines;
  if (text == "stems") return PlotKind::stems;
  if (text == "heatmap") return PlotKind::heatmap;
  throw DomainError("unknown plot kind '" + text + "' (expected lines, stems or heatmap)");
}

std::string render_svg(const csv::Table& table, PlotKind kind) {
  const auto cols = numeric_columns(table);
  switch (kind) {
    case PlotKind::lines: return render_lines(cols, table.rows.size());
    case PlotKind::stems: return render_stems(cols, table.rows.size());
    case PlotKind::heatmap: return render_heatmap(cols, table.rows.size());
  }
  return {};
}

}  // namespace rpq::plot
