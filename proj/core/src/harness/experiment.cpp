#include "qfcs/harness/experiment.hpp"

#include <algorithm>
#include <chrono>

#include "qfcs/error.hpp"
#include "registry.hpp"

namespace qfcs::harness {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::less_equal: return "<=";
    case Relation::equal: return "==";
    case Relation::greater_equal: return ">=";
  }
  return "?";
}

const Check& Context::check(std::string name, double measured, Relation rel, double target) {
  bool pass = false;
  switch (rel) {
    case Relation::less: pass = measured < target; break;
    case Relation::less_equal: pass = measured <= target; break;
    case Relation::equal: pass = measured == target; break;
    case Relation::greater_equal: pass = measured >= target; break;
  }
  checks_.push_back({std::move(name), measured, rel, target, pass});
  return checks_.back();
}

const std::vector<Experiment>& experiments() {
  static const std::vector<Experiment> all = [] {
    std::vector<Experiment> v;
    detail::register_mode_experiments(v);
    detail::register_boundary_experiments(v);
    detail::register_bulk_experiments(v);
    detail::register_local_experiments(v);
    detail::register_algebra_experiments(v);
    return v;
  }();
  return all;
}

const Experiment& find_experiment(const std::string& name) {
  for (const auto& e : experiments())
    if (e.name == name) return e;
  throw UnknownExperimentError("unknown experiment '" + name + "' (see 'list')");
}

Config validated_params(const Experiment& e, const Config& given) {
  Config out;
  for (const auto& p : e.params) out.set(p.key, p.fallback);
  for (const auto& [k, v] : given.entries()) {
    const bool known = std::any_of(e.params.begin(), e.params.end(), [&](const ParamSpec& p) { return p.key == k; });
    if (!known) throw ConfigError("experiment '" + e.name + "' has no parameter '" + k + "'");
    out.set(k, v);
  }
  for (const auto& [k, v] : out.entries())
    if (k.find("tol") != std::string::npos && !(out.number(k) > 0))
      throw ConfigError("tolerance '" + k + "' must be positive");
  return out;
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Table RunReport::table() const {
  Table t("report", {"check", "measured", "relation", "target", "pass"});
  for (const auto& c : checks)
    t.add_row({c.name, c.measured, to_string(c.relation), c.target, std::string(c.pass ? "pass" : "fail")});
  return t;
}

RunReport run(const ExperimentConfig& config) {
  const Experiment& e = find_experiment(config.experiment);
  Context ctx(validated_params(e, config.params), CounterRng(config.seed));
  const auto start = std::chrono::steady_clock::now();
  e.body(ctx);
  RunReport report;
  report.experiment = e.name;
  report.seed = config.seed;
  report.rng_draws = ctx.rng().consumed();
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.checks = ctx.checks();
  if (config.write) {
    const Provenance prov{e.name, config.seed};
    const auto dir = config.out_dir / e.name;
    for (const auto& t : ctx.tables()) report.artifacts.push_back(emit(t, config.format, dir, prov));
    report.artifacts.push_back(emit(report.table(), config.format, dir, prov));
  }
  return report;
}

}  // namespace qfcs::harness
