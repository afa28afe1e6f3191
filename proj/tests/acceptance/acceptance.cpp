// Runs every acceptance criterion through its harness experiment and prints one line each.
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "qfcs/error.hpp"
#include "qfcs/harness/experiment.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* experiment;
  double budget_seconds;
};

constexpr Criterion criteria[] = {
    {1, "Wronskian conservation", "wronskian", 60},
    {2, "nu spot values", "nu-values", 1},
    {3, "de Sitter nu = 1/2 closed form", "desitter-closed-form", 5},
    {4, "horizon detailed balance", "kms", 1},
    {5, "thermal to vacuum limit", "thermal-limit", 10},
    {6, "quasi-free combinatorics", "quasifree", 5},
    {7, "positivity and commutator", "positivity", 120},
    {8, "BMS algebra", "bms", 30},
    {9, "symplectic preservation of Gamma", "symplectic", 30},
    {10, "conformal rescaling", "conformal", 60},
    {11, "Hadamard subtraction", "hadamard", 60},
    {12, "microlocal orientation", "microlocal", 20},
    {13, "tunneling slope", "tunneling", 120},
    {14, "star-algebra", "star-algebra", 30},
};

std::string worst_failure(const qfcs::harness::RunReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass)
      return c.name + " = " + std::to_string(c.measured) + " (" + qfcs::harness::to_string(c.relation) + " " +
             std::to_string(c.target) + ")";
  return {};
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool pass = false;
    double seconds = 0;
    try {
      qfcs::harness::ExperimentConfig cfg;
      cfg.experiment = c.experiment;
      cfg.write = false;
      const auto report = qfcs::harness::run(cfg);
      seconds = report.wall_seconds;
      const bool checks = report.passed();
      const bool in_budget = seconds < c.budget_seconds;
      pass = checks && in_budget;
      if (!checks) detail = "; failed " + worst_failure(report);
      if (!in_budget) detail += "; over the time budget";
      detail = std::to_string(report.checks.size()) + " checks" + detail;
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    if (!pass) ++failed;
    std::printf("[%s] %2d %-34s %-22s %8.2f s / %5.0f s  %s\n", pass ? "PASS" : "FAIL", c.id, c.title, c.experiment,
                seconds, c.budget_seconds, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
