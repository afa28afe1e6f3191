#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qfcs/error.hpp"
#include "qfcs/harness/config.hpp"
#include "qfcs/harness/experiment.hpp"
#include "qfcs/harness/rng.hpp"
#include "qfcs/harness/table.hpp"

namespace fs = std::filesystem;
using namespace qfcs;
using namespace qfcs::harness;

namespace {

fs::path scratch_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("qfcs_unit_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Config, ParsesCommentsScopesAndTypes) {
  const auto c = Config::parse(
      "# header\n"
      "run.seed = 42\n"
      "wronskian.k = 0.1:10:32   # trailing\n"
      "wronskian.nu = 0.5, 1.5\n"
      "flag = true\n\n");
  EXPECT_EQ(c.integer("run.seed"), 42);
  const auto w = c.scope("wronskian");
  EXPECT_EQ(w.keys(), (std::vector<std::string>{"k", "nu"}));
  const auto r = w.range("k");
  EXPECT_EQ(r.n, 32u);
  const auto g = r.geometric();
  ASSERT_EQ(g.size(), 32u);
  EXPECT_DOUBLE_EQ(g.front(), 0.1);
  EXPECT_NEAR(g.back(), 10.0, 1e-12);
  for (std::size_t i = 1; i + 1 < g.size(); ++i) EXPECT_NEAR(g[i] * g[i], g[i - 1] * g[i + 1], 1e-12 * g[i] * g[i]);
  EXPECT_EQ(w.numbers("nu"), (std::vector<double>{0.5, 1.5}));
  EXPECT_TRUE(c.unscoped().flag("flag"));
  EXPECT_FALSE(c.unscoped().has("run.seed"));
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(Config::parse("no equals sign"), ConfigError);
  const auto c = Config::parse("x = 1.5abc\ny = 1:2\n");
  EXPECT_THROW(c.number("x"), ConfigError);
  EXPECT_THROW(c.range("y"), ConfigError);
  EXPECT_THROW(c.text("missing"), ConfigError);
  EXPECT_THROW(Config::load("/nonexistent/qfcs.cfg"), Error);
}

TEST(Config, MergeOverrides) {
  auto a = Config::parse("x = 1\ny = 2\n");
  a.merge(Config::parse("y = 3\nz = 4\n"));
  EXPECT_EQ(a.number("x"), 1);
  EXPECT_EQ(a.number("y"), 3);
  EXPECT_EQ(a.number("z"), 4);
}

TEST(Table, CsvRoundTripIsBitExact) {
  Table t("values", {"label", "x", "y"});
  CounterRng rng(5);
  for (int i = 0; i < 50; ++i) t.add_row({"row" + std::to_string(i), rng.normal() * std::pow(10.0, i % 30 - 15), rng.uniform()});
  t.add_row({"tiny", std::numeric_limits<double>::denorm_min(), -0.0});
  const auto text = to_csv(t, {"unit", 9});
  EXPECT_EQ(text.rfind("# experiment=unit, seed=9", 0), 0u);
  const auto back = parse_csv(text, "values");
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    EXPECT_EQ(std::get<std::string>(back.rows[r][0]), std::get<std::string>(t.rows[r][0]));
    for (const char* col : {"x", "y"}) EXPECT_EQ(back.number(r, col), t.number(r, col));
  }
}

TEST(Table, RowWidthMismatchIsUsageError) {
  Table t("t", {"a", "b"});
  EXPECT_THROW(t.add_row({1.0}), UsageError);
}

TEST(Table, NonFiniteValuesRaiseSerializationError) {
  for (double bad : {std::nan(""), std::numeric_limits<double>::infinity()}) {
    Table t("t", {"a", "b"});
    t.add_row({1.0, 2.0});
    t.add_row({3.0, bad});
    EXPECT_THROW(to_csv(t, {}), SerializationError);
    EXPECT_THROW(to_json(t, {}), SerializationError);
    try {
      to_csv(t, {});
    } catch (const SerializationError& e) {
      EXPECT_NE(std::string(e.what()).find('b'), std::string::npos);
    }
  }
}

TEST(Table, JsonLayout) {
  Table t("t", {"name", "v"});
  t.add_row({"a", 0.1});
  const auto j = nlohmann::json::parse(to_json(t, {"exp", 3}));
  EXPECT_EQ(j["experiment"], "exp");
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["table"], "t");
  EXPECT_EQ(j["columns"][1], "v");
  EXPECT_EQ(j["rows"][0][1].get<double>(), 0.1);
}

TEST(Table, EmitWritesFileAndReportsUnwritablePaths) {
  const auto d = scratch_dir("emit");
  Table t("tab", {"v"});
  t.add_row({1.25});
  const auto p = emit(t, Format::csv, d, {"e", 1});
  EXPECT_EQ(p, d / "tab.csv");
  EXPECT_EQ(read_csv(p).number(0, "v"), 1.25);
  std::ofstream(d / "blocker") << "x";
  EXPECT_THROW(emit(t, Format::json, d / "blocker" / "sub", {"e", 1}), IoError);
}

TEST(Table, FormatNames) {
  EXPECT_EQ(format_from_string("csv"), Format::csv);
  EXPECT_EQ(format_from_string("json"), Format::json);
  EXPECT_THROW(format_from_string("xml"), Error);
  EXPECT_EQ(format_number(0.1), "0.1");
}

TEST(Rng, StreamsAreReproducibleAndSplit) {
  CounterRng a(11), b(11), c(12);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    EXPECT_NE(x, c.next_u64());
  }
  EXPECT_EQ(a.consumed(), 100u);
  auto s1 = a.split(1), s1b = b.split(1), s2 = a.split(2);
  EXPECT_EQ(s1.next_u64(), s1b.next_u64());
  EXPECT_NE(a.split(1).next_u64(), s2.next_u64());
}

TEST(Rng, UniformAndNormalMoments) {
  CounterRng r(3);
  const int n = 200000;
  double s = 0, s2 = 0, m = 0, m2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    s += u;
    s2 += u * u;
    const double z = r.normal();
    m += z;
    m2 += z * z;
  }
  EXPECT_NEAR(s / n, 0.5, 5e-3);
  EXPECT_NEAR(s2 / n - 0.25, 1.0 / 12, 5e-3);
  EXPECT_NEAR(m / n, 0.0, 1e-2);
  EXPECT_NEAR(m2 / n, 1.0, 1e-2);
}

TEST(Experiments, RegistryCoversEveryCriterion) {
  std::set<std::string> names;
  for (const auto& e : experiments()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_FALSE(e.summary.empty());
  }
  for (const char* n : {"wronskian", "nu-values", "desitter-closed-form", "kms", "thermal-limit", "quasifree",
                        "positivity", "bms", "symplectic", "conformal", "hadamard", "microlocal", "tunneling",
                        "star-algebra"})
    EXPECT_TRUE(names.contains(n)) << n;
  EXPECT_THROW(find_experiment("nope"), UnknownExperimentError);
}

TEST(Experiments, ParameterValidation) {
  const auto& e = find_experiment("desitter-closed-form");
  EXPECT_THROW(validated_params(e, Config::parse("bogus = 1")), ConfigError);
  EXPECT_THROW(validated_params(e, Config::parse("tol = 0")), ConfigError);
  EXPECT_THROW(validated_params(e, Config::parse("tol = -1e-3")), ConfigError);
  const auto p = validated_params(e, Config::parse("samples = 7"));
  EXPECT_EQ(p.integer("samples"), 7);
  EXPECT_TRUE(p.has("tol"));
}

TEST(Experiments, RunIsDeterministicForAFixedSeed) {
  const auto d1 = scratch_dir("det1"), d2 = scratch_dir("det2");
  ExperimentConfig c{"desitter-closed-form", Config::parse("samples = 20"), 77, d1, Format::csv, true};
  const auto r1 = run(c);
  c.out_dir = d2;
  const auto r2 = run(c);
  ASSERT_TRUE(r1.passed());
  EXPECT_EQ(r1.rng_draws, 40u);
  ASSERT_EQ(r1.artifacts.size(), r2.artifacts.size());
  for (std::size_t i = 0; i < r1.artifacts.size(); ++i) {
    EXPECT_EQ(r1.artifacts[i].filename(), r2.artifacts[i].filename());
    EXPECT_EQ(slurp(r1.artifacts[i]), slurp(r2.artifacts[i]));
  }
  c.seed = 78;
  c.out_dir = scratch_dir("det3");
  const auto r3 = run(c);
  EXPECT_NE(slurp(r3.artifacts.front()), slurp(r1.artifacts.front()));
}

TEST(Experiments, ReportTableListsChecks) {
  ExperimentConfig c{"nu-values", {}, 1, {}, Format::csv, false};
  const auto r = run(c);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.artifacts.empty());
  const auto t = r.table();
  EXPECT_EQ(t.rows.size(), r.checks.size());
  EXPECT_EQ(r.checks.size(), 3u);
}

TEST(Experiments, ContextCheckRelations) {
  Context ctx({}, CounterRng(1));
  EXPECT_TRUE(ctx.check("a", 1, Relation::less, 2).pass);
  EXPECT_FALSE(ctx.check("b", 2, Relation::less, 2).pass);
  EXPECT_TRUE(ctx.check("c", 2, Relation::less_equal, 2).pass);
  EXPECT_TRUE(ctx.check("d", 0, Relation::equal, 0).pass);
  EXPECT_FALSE(ctx.check("e", std::nan(""), Relation::less, 1).pass);
  EXPECT_TRUE(ctx.check("f", 3, Relation::greater_equal, 3).pass);
  EXPECT_EQ(ctx.checks().size(), 6u);
}
