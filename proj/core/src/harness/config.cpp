#include "qfcs/harness/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qfcs/error.hpp"

namespace qfcs::harness {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

double parse_number(const std::string& text, const std::string& what) {
  double v = 0;
  const char* b = text.data();
  const char* e = b + text.size();
  if (b != e && *b == '+') ++b;
  const auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || !std::isfinite(v))
    throw ConfigError(what + ": expected a finite number, got '" + text + "'");
  return v;
}

std::vector<double> Range::linear() const {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

std::vector<double> Range::geometric() const {
  if (!(lo > 0) || !(hi > 0)) throw ConfigError("geometric range needs positive ends");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

Config Config::parse(std::string_view text, const std::string& origin) {
  Config c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto hash = line.find('#');
    const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(no) + ": expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    if (key.empty()) throw ConfigError(origin + ":" + std::to_string(no) + ": empty key");
    c.set(key, trim(body.substr(eq + 1)));
  }
  return c;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

std::vector<std::string> Config::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_) out.push_back(k);
  return out;
}

Config Config::scope(const std::string& prefix) const {
  Config c;
  const std::string p = prefix + ".";
  for (const auto& [k, v] : values_)
    if (k.starts_with(p)) c.values_[k.substr(p.size())] = v;
  return c;
}

Config Config::unscoped() const {
  Config c;
  for (const auto& [k, v] : values_)
    if (k.find('.') == std::string::npos) c.values_[k] = v;
  return c;
}

void Config::merge(const Config& other) {
  for (const auto& [k, v] : other.values_) values_[k] = v;
}

const std::string& Config::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing key '" + key + "'");
  return it->second;
}

double Config::number(const std::string& key) const { return parse_number(text(key), key); }

std::int64_t Config::integer(const std::string& key) const {
  const double v = number(key);
  if (v != std::floor(v) || std::abs(v) > 9.0e15) throw ConfigError(key + ": expected an integer");
  return static_cast<std::int64_t>(v);
}

bool Config::flag(const std::string& key) const {
  const auto& t = text(key);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError(key + ": expected true or false, got '" + t + "'");
}

Range Config::range(const std::string& key) const {
  const auto parts = split(text(key), ':');
  if (parts.size() != 3) throw ConfigError(key + ": expected lo:hi:n");
  const double n = parse_number(parts[2], key);
  if (n < 1 || n != std::floor(n)) throw ConfigError(key + ": point count must be a positive integer");
  return {parse_number(parts[0], key), parse_number(parts[1], key), static_cast<std::size_t>(n)};
}

std::vector<double> Config::numbers(const std::string& key) const {
  std::vector<double> out;
  for (const auto& p : split(text(key), ',')) out.push_back(parse_number(p, key));
  return out;
}

std::vector<std::string> Config::words(const std::string& key) const { return split(text(key), ','); }

}  // namespace qfcs::harness
