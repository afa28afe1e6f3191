#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace qfcs::harness {

using Cell = std::variant<double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  Table(std::string name, std::vector<std::string> columns);
  // UsageError when the row width differs from the column count.
  void add_row(std::vector<Cell> row);
  double number(std::size_t row, const std::string& column) const;
};

enum class Format { csv, json };
Format format_from_string(const std::string& name);
std::string to_string(Format f);

struct Provenance {
  std::string experiment;
  std::uint64_t seed = 0;
};

// CSV: a "# experiment=..., seed=..." line, the header row, then one line per row with
// numbers in shortest round-trip form ('.' decimal point regardless of locale).
// JSON: {"experiment", "seed", "table", "columns", "rows"} in that order.
// Non-finite numbers raise SerializationError naming the cell.
std::string to_csv(const Table& t, const Provenance& p);
std::string to_json(const Table& t, const Provenance& p);

// Writes <dir>/<table.name>.<csv|json> and returns the path. IoError names the path.
std::filesystem::path emit(const Table& t, Format f, const std::filesystem::path& dir,
                           const Provenance& p);

// Parses CSV written by to_csv; numeric-looking cells become doubles.
Table read_csv(const std::filesystem::path& path);
Table parse_csv(const std::string& text, const std::string& name);

std::string format_number(double v);

}  // namespace qfcs::harness
