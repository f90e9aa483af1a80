#pragma once

#include <string>

#include "rpq/csv.hpp"

namespace rpq::plot {

enum class PlotKind { lines, stems, heatmap };

/// Throws DomainError for anything other than lines, stems or heatmap.
PlotKind parse_kind(const std::string& text);

/// Renders a standalone SVG document from a table.
///
/// lines: first numeric column on x, every other numeric column as a series.
///        A table with `epsilon` and `l2_error` columns is drawn log-log with
///        the least-squares slope annotated.
/// stems: first numeric column on x, second on y.
/// heatmap: first two numeric columns are cell coordinates, third the value.
///
/// A column is numeric when every non-empty field parses as a number. Tick
/// labels use printf "%.4g". An empty body yields axes and a "no data" label.
/// Throws ParseError when the table lacks the numeric columns the kind needs.
std::string render_svg(const csv::Table& table, PlotKind kind);

}  // namespace rpq::plot
