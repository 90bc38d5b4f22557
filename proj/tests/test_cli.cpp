#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "charp/cli.hpp"
#include "charp/frobenius.hpp"
#include "charp/parser.hpp"
#include "charp/sweep.hpp"

namespace charp {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "charp_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / (name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::remove(path);
  return path;
}

std::vector<std::string> lines_of(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

TEST(Cli, Member) {
  auto r = run({"member", "--p", "2", "x^2+y^2", "--", "x+y"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "true\n");
  r = run({"member", "--p", "3", "x", "--", "x^2", "y"});
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(r.code, cli::kExitOk);
}

TEST(Cli, GroebnerBasisTextAndJson) {
  auto r = run({"gb", "--p", "3", "x^2 - t*y", "x*y - 1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t*y^2 + 2*x\nx^2 + 2*t*y\nx*y + 2\n");
  r = run({"gb", "--p", "3", "--json", "x^2 - t*y,x*y - 1"});
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["basis"].size(), 3u);
  const RingPtr ring = PolyRing::make(3);
  for (const auto& s : j["basis"]) EXPECT_EQ(parse(parse(s.get<std::string>(), ring).to_string(), ring), parse(s.get<std::string>(), ring));
}

TEST(Cli, OrdersAndVars) {
  auto r = run({"gb", "--p", "5", "--order", "lex", "--vars", "x,y", "x - y", "x + y"});
  EXPECT_EQ(r.out, "x\ny\n");
  r = run({"gb", "--p", "5", "--order", "block", "t^5 + x"});
  EXPECT_EQ(r.out, "x + t^5\n");
  r = run({"gb", "--p", "5", "--order", "block", "--vars", "x,y", "x"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  r = run({"gb", "--p", "5", "--order", "banana", "x"});
  EXPECT_EQ(r.code, cli::kExitUsage);
}

TEST(Cli, IdealOperations) {
  EXPECT_EQ(run({"colon", "--p", "3", "x^2", "y^2", "--", "x-y"}).out, "y^2\nx + y\n");
  EXPECT_EQ(run({"intersect", "--p", "3", "x", "--", "y"}).out, "x*y\n");
  EXPECT_EQ(run({"saturate", "--p", "3", "x^2*y", "--", "x"}).out, "y\n");
  EXPECT_EQ(run({"eliminate", "--p", "3", "--drop", "x,y", "x - t", "x"}).out, "t\n");
  EXPECT_EQ(run({"bracket-power", "--p", "2", "--q", "4", "x+y"}).out, "x^4 + y^4\n");
  EXPECT_EQ(run({"bracket-power", "--p", "3", "--e", "1", "x", "y"}).out, "x^3\ny^3\n");
  EXPECT_EQ(run({"bracket-power", "--p", "3", "--q", "6", "x"}).code, cli::kExitUsage);
}

TEST(Cli, Tau) {
  auto r = run({"tau", "--p", "2", "--e", "3", "--factor"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t^6 + t^5 + t^4 + t^3 + t^2 + t + 1 = (t^3 + t + 1)(t^3 + t^2 + 1)\n");
  r = run({"tau", "--p", "2", "--e", "1", "--factor"});
  EXPECT_EQ(r.out, "1 = 1\n");
  r = run({"tau", "--p", "5", "--e", "1", "--factor", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["factors"].size(), 3u);
  EXPECT_EQ(j["q"], 5);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gb", "--p", "4", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gb", "--p", "3", "x + z"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gb", "--p", "3", "x*"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"member", "--p", "3", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gb", "--p", "3", "x", "--", "y"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tau", "--p", "3", "--e", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tau", "--p", "3", "--seed", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobenius-ass", "--p", "3", "--e", "1", "--F", "0"}).code, cli::kExitUsage);
  const auto r = run({"gb", "--p", "3", "x + z"});
  EXPECT_NE(r.err.find("position 4"), std::string::npos) << r.err;
  EXPECT_EQ(run({"gb", "--help"}).code, cli::kExitOk);
}

TEST(Cli, FrobeniusAss) {
  auto r = run({"frobenius-ass", "--p", "2", "--e", "3", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["tau_divides_torsion"].get<bool>());
  ASSERT_EQ(j["probes"].size(), 2u);
  for (const auto& p : j["probes"]) {
    EXPECT_TRUE(p["associated"].get<bool>());
    EXPECT_NO_THROW(parse(p["witness"].get<std::string>(), standard_ring(2)));
  }
  r = run({"frobenius-ass", "--p", "3", "--e", "1", "--F", "x*y*(x-y)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("torsion divisors: none"), std::string::npos);
}

TEST(Cli, VerifyGrid) {
  auto r = run({"verify-paper", "--p", "3", "--e", "1"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("✓✓✓"), std::string::npos);
  EXPECT_EQ(r.out.find("✗"), std::string::npos);
  r = run({"verify-paper", "--p", "2,3", "--emax", "2", "--json"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["all_passed"].get<bool>());
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_TRUE(j["rows"][0]["degenerate"].get<bool>());
  EXPECT_TRUE(j["rows"][0]["theorem12"].is_null());
  EXPECT_FALSE(j["rows"][1]["degenerate"].get<bool>());
  EXPECT_EQ(run({"verify-paper", "--p", "3"}).code, cli::kExitUsage);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("CHARP_SEED", "12345", 1);
  const auto a = run({"tau", "--p", "3", "--e", "3", "--factor"});
  ::setenv("CHARP_SEED", "bogus", 1);
  const auto b = run({"tau", "--p", "3", "--e", "3", "--factor"});
  ::unsetenv("CHARP_SEED");
  const auto c = run({"tau", "--p", "3", "--e", "3", "--factor"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, cli::kExitUsage);
  EXPECT_EQ(a.out, c.out);
}

TEST(SweepRecord, JsonRoundTrip) {
  const SweepRecord r = evaluate_cell(2, 3, std::string(kFourLinesExpr));
  const std::string line = to_jsonl(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(parse_record(line), r);
  const auto j = nlohmann::ordered_json::parse(line);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"p", "e", "q", "f_expr", "lemma11", "thm12_member_tau_g",
                                            "thm12_not_member_g", "thm12_contraction_is_tau", "ge_check",
                                            "divisors", "probes", "duration_ms"}));
  EXPECT_THROW(parse_record("{\"p\": 2"), std::invalid_argument);
  EXPECT_THROW(parse_record("{\"p\": 2}"), std::invalid_argument);
}

TEST(SweepRecord, DeterministicApartFromDuration) {
  for (const char* f : {"x*y*(x-y)*(x-t*y)", "x^2*y + t*x*y^2", "x*y*(x+y)*(x-t^2*y)"}) {
    SweepRecord a = evaluate_cell(3, 2, f);
    SweepRecord b = evaluate_cell(3, 2, f);
    a.duration_ms = b.duration_ms = 0;
    EXPECT_EQ(a, b);
  }
}

TEST(SweepRecord, DegenerateAndUnsplitCells) {
  const SweepRecord a = evaluate_cell(2, 1, std::string(kFourLinesExpr));
  EXPECT_FALSE(a.thm12_member_tau_g.has_value());
  EXPECT_TRUE(a.ge_check.has_value());
  EXPECT_FALSE(a.regression());
  const SweepRecord b = evaluate_cell(3, 1, "x^2 + y^2");
  EXPECT_FALSE(b.ge_check.has_value());
  EXPECT_TRUE(b.thm12_member_tau_g.value());
  SweepRecord c = a;
  c.lemma11 = false;
  EXPECT_TRUE(c.regression());
}

TEST(Sweep, ResumesWithoutRecomputing) {
  const auto path = temp_file("resume.jsonl");
  SweepConfig config{{2, 3}, {1, 2}, {std::string(kFourLinesExpr), "x*y*(x-y)"}, path, 3, kDefaultFactorSeed};
  const SweepSummary first = run_sweep(config);
  EXPECT_EQ(first.computed, 8u);
  EXPECT_EQ(first.skipped, 0u);
  EXPECT_EQ(first.regressions, 0u);
  EXPECT_EQ(lines_of(path).size(), 8u);

  config.exponents = {1, 2, 3};
  const SweepSummary second = run_sweep(config);
  EXPECT_EQ(second.computed, 4u);
  EXPECT_EQ(second.skipped, 8u);
  const auto lines = lines_of(path);
  EXPECT_EQ(lines.size(), 12u);
  std::set<std::tuple<std::uint32_t, unsigned, std::string>> keys;
  for (const auto& l : lines) keys.insert(parse_record(l).key());
  EXPECT_EQ(keys.size(), 12u);
}

TEST(Sweep, IgnoresTornLastLine) {
  const auto path = temp_file("torn.jsonl");
  SweepConfig config{{3}, {1}, {std::string(kFourLinesExpr)}, path, 1, kDefaultFactorSeed};
  run_sweep(config);
  const std::string whole = lines_of(path).at(0);
  {
    std::ofstream out(path, std::ios::trunc);
    out << whole.substr(0, whole.size() / 2);
  }
  const SweepSummary s = run_sweep(config);
  EXPECT_EQ(s.computed, 1u);
  const auto lines = lines_of(path);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_THROW(parse_record(lines[0]), std::invalid_argument);
  SweepRecord again = parse_record(lines[1]);
  SweepRecord before = parse_record(whole);
  again.duration_ms = before.duration_ms = 0;
  EXPECT_EQ(again, before);
  EXPECT_EQ(run_sweep(config).computed, 0u);
}

TEST(Cli, SweepCommand) {
  const auto path = temp_file("cli_sweep.jsonl");
  auto r = run({"sweep", "--p", "2,3", "--emax", "2", "--out", path.string(), "--jobs", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "computed 4, skipped 0, regressions 0\n");
  r = run({"sweep", "--p", "2,3", "--emax", "2", "--out", path.string(), "--F", "x*y*(x-y)*(x-t*y)"});
  EXPECT_EQ(r.out, "computed 0, skipped 4, regressions 0\n");
  r = run({"sweep", "--p", "3", "--e", "1", "--out", path.string(), "--F", "x*y*"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_EQ(lines_of(path).size(), 4u);
}

}  // namespace
}  // namespace charp
