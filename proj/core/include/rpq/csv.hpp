#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rpq::csv {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Parses a full token as a double; nullopt if any character is left over.
std::optional<double> parse_double(std::string_view token);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column position by name, or -1.
  int column(std::string_view name) const;
};

/// Comma-separated, unquoted. Throws ParseError on an empty input or a row
/// whose field count differs from the header.
Table read(std::istream& in);
Table read_file(const std::string& path);

class Writer {
 public:
  Writer(std::ostream& out, std::vector<std::string> header);

  /// Throws DimensionError when the field count differs from the header.
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
  std::size_t columns_;
};

}  // namespace rpq::csv
