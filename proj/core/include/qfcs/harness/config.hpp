#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qfcs::harness {

// lo:hi:n
struct Range {
  double lo;
  double hi;
  std::size_t n;

  std::vector<double> linear() const;
  std::vector<double> geometric() const;
};

// Flat key-value configuration. Keys use dotted namespaces ("wronskian.k"); values are
// kept as text and parsed on access. Lines read "key = value"; '#' starts a comment.
class Config {
 public:
  static Config parse(std::string_view text, const std::string& origin = "<text>");
  static Config load(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return values_.contains(key); }
  std::vector<std::string> keys() const;

  // Entries under "prefix." with the prefix stripped.
  Config scope(const std::string& prefix) const;
  // Entries without a dot.
  Config unscoped() const;
  // Entries of other override these.
  void merge(const Config& other);

  const std::string& text(const std::string& key) const;
  double number(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  bool flag(const std::string& key) const;
  Range range(const std::string& key) const;
  std::vector<double> numbers(const std::string& key) const;
  std::vector<std::string> words(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

double parse_number(const std::string& text, const std::string& what);

}  // namespace qfcs::harness
