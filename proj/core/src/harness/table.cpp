#include "qfcs/harness/table.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qfcs/error.hpp"

namespace qfcs::harness {

namespace {

void require_finite(const Table& t, std::size_t row, std::size_t col, double v) {
  if (!std::isfinite(v))
    throw SerializationError("table '" + t.name + "': non-finite value in row " + std::to_string(row) +
                             ", column '" + t.columns[col] + "'");
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') cur += '"', ++i;
      else if (c == '"') quoted = false;
      else cur += c;
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Table::Table(std::string n, std::vector<std::string> c) : name(std::move(n)), columns(std::move(c)) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw UsageError("table '" + name + "': row has " + std::to_string(row.size()) + " cells, expected " +
                     std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

double Table::number(std::size_t row, const std::string& column) const {
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (columns[c] == column) return std::get<double>(rows.at(row).at(c));
  throw UsageError("table '" + name + "': no column '" + column + "'");
}

Format format_from_string(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ConfigError("unknown output format '" + name + "' (csv or json)");
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw SerializationError("cannot format number");
  return std::string(buf.data(), ptr);
}

std::string to_csv(const Table& t, const Provenance& p) {
  std::ostringstream out;
  out << "# experiment=" << p.experiment << ", seed=" << p.seed << '\n';
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_quote(t.columns[c]);
  out << '\n';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) out << ',';
      const Cell& cell = t.rows[r][c];
      if (const double* v = std::get_if<double>(&cell)) {
        require_finite(t, r, c, *v);
        out << format_number(*v);
      } else {
        out << csv_quote(std::get<std::string>(cell));
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Table& t, const Provenance& p) {
  nlohmann::ordered_json j;
  j["experiment"] = p.experiment;
  j["seed"] = p.seed;
  j["table"] = t.name;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const Cell& cell = t.rows[r][c];
      if (const double* v = std::get_if<double>(&cell)) {
        require_finite(t, r, c, *v);
        row.push_back(*v);
      } else {
        row.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::filesystem::path emit(const Table& t, Format f, const std::filesystem::path& dir,
                           const Provenance& p) {
  const std::string body = f == Format::csv ? to_csv(t, p) : to_json(t, p);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  const auto path = dir / (t.name + "." + to_string(f));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << body;
  if (!out) throw IoError("write failed for " + path.string());
  return path;
}

Table parse_csv(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    header = csv_fields(line);
    break;
  }
  if (header.empty()) throw SerializationError("csv '" + name + "': missing header row");
  Table t(name, header);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = csv_fields(line);
    std::vector<Cell> row;
    for (const auto& f : fields) {
      double v = 0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (!f.empty() && ec == std::errc() && ptr == f.data() + f.size()) row.emplace_back(v);
      else row.emplace_back(f);
    }
    t.add_row(std::move(row));
  }
  return t;
}

Table read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str(), path.stem().string());
}

}  // namespace qfcs::harness
