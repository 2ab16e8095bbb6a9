#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hkas/cli.hpp"
#include "hkas/io.hpp"

namespace hkas {
namespace {

const std::string kFixtures = HKAS_FIXTURE_DIR;
const std::string kGolden = HKAS_GOLDEN_DIR;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run({"check", "--scheme", fixture("trivial_diamond.json"), "--mode", "all"}).code, 0);
  EXPECT_EQ(run({"check", "--scheme", fixture("trivial_diamond.json"), "--mode", "ski", "--exhaustive"}).code, 0);
  EXPECT_EQ(run({"check", "--scheme", fixture("leaky_diamond.json"), "--mode", "ki"}).code, 1);
  EXPECT_EQ(run({"check", "--scheme", fixture("leaky_diamond.json"), "--mode", "correctness"}).code, 0);
  EXPECT_EQ(run({"check", "--scheme", fixture("correlated_diamond.json"), "--mode", "key-indep"}).code, 1);
  EXPECT_EQ(run({"check", "--scheme", fixture("truncated_secret.json"), "--mode", "correctness"}).code, 1);
  EXPECT_EQ(run({"check", "--scheme", fixture("missing_secret.json")}).code, 2);
  EXPECT_EQ(run({"check", "--scheme", fixture("sum_seven_eighths.json")}).code, 2);
  EXPECT_EQ(run({"check", "--scheme", fixture("cyclic_scheme.json")}).code, 2);
  EXPECT_EQ(run({"check", "--scheme", fixture("trivial_diamond.json"), "--mode", "bogus"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, CheckTextOutput) {
  CliResult r = run({"check", "--scheme", fixture("leaky_diamond.json"), "--mode", "ki"});
  EXPECT_NE(r.out.find("ki: FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("class a: secrets {b}"), std::string::npos) << r.out;
}

TEST(Cli, CheckJson) {
  CliResult r = run({"check", "--scheme", fixture("leaky_diamond.json"), "--mode", "all", "--json"});
  ASSERT_EQ(r.code, 1);
  Json doc = Json::parse(r.out);
  EXPECT_FALSE(doc["passed"].get<bool>());
  ASSERT_EQ(doc["reports"].size(), 4u);
  const Json& ki = doc["reports"][1];
  EXPECT_EQ(ki["kind"], "ki");
  EXPECT_FALSE(ki["passed"].get<bool>());
  EXPECT_EQ(ki["witnesses"][0]["class"], "a");
  EXPECT_EQ(ki["witnesses"][0]["secrets"], Json::array({"b"}));
}

TEST(Cli, JsonIsByteStable) {
  const std::vector<std::vector<std::string>> commands{
      {"check", "--scheme", fixture("correlated_diamond.json"), "--mode", "all", "--json"},
      {"graph", "analyze", "--graph", fixture("diamond.json"), "--json"},
      {"entropy", "--scheme", fixture("trivial_diamond.json"), "--expr", "H(K:a|S:b)", "--json"},
      {"validate", "--graph", fixture("diamond.json"), "--trials", "10", "--seed", "3", "--q", "2", "--json"},
  };
  for (const auto& cmd : commands) {
    CliResult a = run(cmd), b = run(cmd);
    EXPECT_EQ(a.out, b.out) << cmd[0];
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, GraphAnalyze) {
  CliResult r = run({"graph", "analyze", "--graph", fixture("diamond.json"), "--class", "a"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("A_a={a,c}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("F_a={b,c}"), std::string::npos);
  EXPECT_NE(r.out.find("C_a={r}"), std::string::npos);
  EXPECT_NE(r.out.find("partition(a): ok"), std::string::npos);
  EXPECT_NE(r.out.find("theorem sequence(a): (c,b,a,r)"), std::string::npos);
  EXPECT_EQ(run({"graph", "analyze", "--graph", fixture("cyclic_graph.json")}).code, 2);
  EXPECT_EQ(run({"graph", "analyze", "--graph", fixture("diamond.json"), "--class", "zz"}).code, 2);
}

TEST(Cli, GenMatchesGolden) {
  CliResult r = run({"gen", "--graph", fixture("diamond.json"), "--kind", "random", "--q", "2", "--seed", "42", "-o", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(kGolden + "/random_diamond_q2_seed42.json"));

  const auto tmp = std::filesystem::temp_directory_path() / "hkas_cli_gen_test.json";
  ASSERT_EQ(run({"gen", "--graph", fixture("diamond.json"), "--kind", "random", "--q", "2", "--seed", "42", "-o",
                 tmp.string()})
                .code,
            0);
  EXPECT_EQ(slurp(tmp), r.out);
  std::filesystem::remove(tmp);
}

TEST(Cli, GenErrors) {
  EXPECT_EQ(run({"gen", "--graph", fixture("diamond.json"), "--kind", "leaky", "--q", "2", "--target", "a",
                 "--leaker", "r", "-o", "-"})
                .code,
            2);
  EXPECT_EQ(run({"gen", "--graph", fixture("diamond.json"), "--kind", "correlated", "--q", "2", "--pair", "a,a",
                 "-o", "-"})
                .code,
            2);
  EXPECT_EQ(run({"gen", "--graph", fixture("diamond.json"), "--kind", "trivial", "--q", "1", "-o", "-"}).code, 2);
  CliResult leaky = run({"gen", "--graph", fixture("diamond.json"), "--kind", "leaky", "--q", "2", "--target", "a",
                   "--leaker", "b", "-o", "-"});
  ASSERT_EQ(leaky.code, 0);
  EXPECT_EQ(leaky.out, slurp(fixture("leaky_diamond.json")));
}

TEST(Cli, Entropy) {
  CliResult r = run({"entropy", "--scheme", fixture("leaky_diamond.json"), "--expr", "H(K:a|S:b)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "H(K:a|S:b) = 0\n");
  CliResult j = run({"entropy", "--scheme", fixture("trivial_diamond.json"), "--expr", "H(K:a)", "--json"});
  EXPECT_EQ(Json::parse(j.out)["bits"].get<double>(), 1.0);
  CliResult bad = run({"entropy", "--scheme", fixture("trivial_diamond.json"), "--expr", "H()"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("SyntaxError"), std::string::npos);
  EXPECT_EQ(run({"entropy", "--scheme", fixture("trivial_diamond.json"), "--expr", "H(K:zz)"}).code, 2);
}

TEST(Cli, Validate) {
  CliResult r = run({"validate", "--graph", fixture("diamond.json"), "--trials", "20", "--seed", "1", "--q", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["schemes"], 20);
  EXPECT_EQ(doc["discrepancies"], 0);
}

TEST(Cli, WarningOnGraphConflict) {
  CliResult r = run({"check", "--scheme", fixture("graph_conflict_scheme.json"), "--mode", "ki"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning: embedded graph differs"), std::string::npos);
}

TEST(Cli, MaxSupportEnvironment) {
  ::setenv("HKAS_MAX_SUPPORT", "8", 1);
  CliResult check = run({"check", "--scheme", fixture("trivial_diamond.json")});
  CliResult gen = run({"gen", "--graph", fixture("diamond.json"), "--kind", "trivial", "--q", "2", "-o", "-"});
  ::setenv("HKAS_MAX_SUPPORT", "not-a-number", 1);
  CliResult bad = run({"check", "--scheme", fixture("trivial_diamond.json")});
  ::unsetenv("HKAS_MAX_SUPPORT");
  EXPECT_EQ(check.code, 2);
  EXPECT_NE(check.err.find("SupportTooLarge"), std::string::npos);
  EXPECT_EQ(gen.code, 2);
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(run({"check", "--scheme", fixture("trivial_diamond.json")}).code, 0);
}

}  // namespace
}  // namespace hkas
