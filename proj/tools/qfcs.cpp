#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfcs/error.hpp"
#include "qfcs/harness/experiment.hpp"

namespace {

using namespace qfcs;

constexpr int exit_failed_check = 1;
constexpr int exit_usage = 2;

// Pulls "--key value" pairs that are not fixed options out of argv, so the
// positional experiment list never swallows a parameter value.
std::vector<std::string> split_overrides(int argc, char** argv, std::vector<std::string>& kept) {
  static const std::vector<std::string> fixed_with_value{"--out", "--seed", "--format", "--config"};
  std::vector<std::string> extras;
  bool in_run = false;
  for (int i = 0; i < argc; ++i) {
    const std::string a = argv[i];
    if (i > 0 && !in_run && a == "run") in_run = true;
    const std::string bare = a.substr(0, a.find('='));
    const bool fixed = std::find(fixed_with_value.begin(), fixed_with_value.end(), bare) != fixed_with_value.end() ||
                       a == "--no-write" || a == "--help" || a == "-h";
    if (!in_run || !a.starts_with("--") || a.size() == 2 || fixed) {
      kept.push_back(a);
      if (fixed && a == bare && a != "--no-write" && a != "--help" && i + 1 < argc) kept.emplace_back(argv[++i]);
      continue;
    }
    extras.push_back(a);
    if (a.find('=') == std::string::npos && i + 1 < argc) extras.emplace_back(argv[++i]);
  }
  return extras;
}

// "--key value" and "--key=value" pairs left over after the fixed options.
harness::Config parse_overrides(const std::vector<std::string>& extras) {
  harness::Config c;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& a = extras[i];
    if (!a.starts_with("--") || a.size() == 2) throw UsageError("unexpected argument '" + a + "'");
    const auto eq = a.find('=');
    if (eq != std::string::npos) {
      c.set(a.substr(2, eq - 2), a.substr(eq + 1));
    } else {
      if (i + 1 >= extras.size()) throw UsageError("option '" + a + "' needs a value");
      c.set(a.substr(2), extras[++i]);
    }
  }
  return c;
}

void print_list() {
  for (const auto& e : harness::experiments()) {
    std::cout << e.name << "\n    " << e.summary << "\n";
    for (const auto& p : e.params) {
      std::cout << "    --" << p.key << " (" << p.fallback << ")";
      if (!p.help.empty()) std::cout << "  " << p.help;
      std::cout << "\n";
    }
  }
}

std::string show(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int run_all(const std::vector<std::string>& names, const harness::Config& file_config,
            const harness::Config& overrides, const std::string& out, std::uint64_t seed,
            const std::string& format, bool write) {
  if (names.empty()) throw UsageError("run: no experiment given (see 'list')");
  const auto fmt = harness::format_from_string(format);
  std::vector<const harness::Experiment*> selected;
  for (const auto& n : names) selected.push_back(&harness::find_experiment(n));

  const auto unscoped = overrides.unscoped();
  for (const auto& [key, value] : unscoped.entries()) {
    bool used = false;
    for (const auto* e : selected)
      for (const auto& p : e->params) used = used || p.key == key;
    if (!used) throw ConfigError("no selected experiment has a parameter '" + key + "'");
  }

  bool all_pass = true;
  for (const auto* e : selected) {
    harness::ExperimentConfig cfg;
    cfg.experiment = e->name;
    cfg.seed = seed;
    cfg.out_dir = out;
    cfg.format = fmt;
    cfg.write = write;
    cfg.params = file_config.scope(e->name);
    for (const auto& [key, value] : unscoped.entries())
      for (const auto& p : e->params)
        if (p.key == key) cfg.params.set(key, value);
    cfg.params.merge(overrides.scope(e->name));
    const auto report = harness::run(cfg);
    std::cout << e->name << " (seed " << report.seed << ", " << report.rng_draws << " draws, "
              << show(report.wall_seconds) << " s)\n";
    for (const auto& c : report.checks)
      std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << show(c.measured) << " "
                << harness::to_string(c.relation) << " " << show(c.target) << "\n";
    for (const auto& a : report.artifacts) std::cout << "  wrote " << a.string() << "\n";
    all_pass = all_pass && report.passed();
  }
  return all_pass ? 0 : exit_failed_check;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum fields on curved spacetimes: experiments and checks"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List experiments and their parameters");
  auto* run = app.add_subcommand("run", "Run experiments: run <experiment>... [--key value]...");
  std::vector<std::string> names;
  std::string out = "results", format = "csv", config_path;
  std::uint64_t seed = 20250101;
  bool no_write = false;
  run->add_option("experiments", names, "Experiment names");
  auto* out_opt = run->add_option("--out", out, "Output directory")->capture_default_str();
  auto* seed_opt = run->add_option("--seed", seed, "Generator seed")->capture_default_str();
  auto* format_opt = run->add_option("--format", format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--config", config_path, "Flat key = value file; keys scoped as <experiment>.<key>");
  run->add_flag("--no-write", no_write, "Skip writing artifacts");
  run->allow_extras();

  std::vector<std::string> kept;
  auto extras = split_overrides(argc, argv, kept);
  try {
    std::vector<std::string> reversed(kept.rbegin(), kept.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (list->parsed()) {
      print_list();
      return 0;
    }
    harness::Config file_config;
    if (!config_path.empty()) {
      file_config = harness::Config::load(config_path);
      const auto top = file_config.scope("run");
      if (top.has("out") && out_opt->count() == 0) out = top.text("out");
      if (top.has("format") && format_opt->count() == 0) format = top.text("format");
      if (top.has("seed") && seed_opt->count() == 0) seed = static_cast<std::uint64_t>(top.integer("seed"));
    }
    const auto rest = run->remaining();
    extras.insert(extras.end(), rest.begin(), rest.end());
    return run_all(names, file_config, parse_overrides(extras), out, seed, format, !no_write);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
