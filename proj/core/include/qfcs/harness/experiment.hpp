#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "qfcs/harness/config.hpp"
#include "qfcs/harness/rng.hpp"
#include "qfcs/harness/table.hpp"

namespace qfcs::harness {

enum class Relation { less, less_equal, equal, greater_equal };
std::string to_string(Relation r);

struct Check {
  std::string name;
  double measured;
  Relation relation;
  double target;
  bool pass;
};

struct ParamSpec {
  std::string key;
  std::string fallback;
  std::string help;
};

// Handed to an experiment body: parameters with defaults filled in, the seeded
// generator, and sinks for tables and checks.
class Context {
 public:
  Context(Config params, CounterRng rng) : params_(std::move(params)), rng_(rng) {}

  const Config& params() const { return params_; }
  CounterRng& rng() { return rng_; }

  const Check& check(std::string name, double measured, Relation rel, double target);
  void add_table(Table t) { tables_.push_back(std::move(t)); }

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<Table>& tables() const { return tables_; }

 private:
  Config params_;
  CounterRng rng_;
  std::vector<Check> checks_;
  std::vector<Table> tables_;
};

struct Experiment {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
  std::function<void(Context&)> body;
};

const std::vector<Experiment>& experiments();
// UnknownExperimentError for names not in the registry.
const Experiment& find_experiment(const std::string& name);

struct ExperimentConfig {
  std::string experiment;
  Config params;
  std::uint64_t seed = 20250101;
  std::filesystem::path out_dir = "results";
  Format format = Format::csv;
  bool write = true;
};

// ConfigError for keys outside the experiment's schema, unparsable values, or
// non-positive tolerances (keys containing "tol").
Config validated_params(const Experiment& e, const Config& given);

struct RunReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::uint64_t rng_draws = 0;
  double wall_seconds = 0;
  std::vector<Check> checks;
  std::vector<std::filesystem::path> artifacts;

  bool passed() const;
  Table table() const;
};

// Runs the experiment; with write set, tables land in <out_dir>/<experiment>/ along
// with report.<fmt>.
RunReport run(const ExperimentConfig& config);

}  // namespace qfcs::harness
