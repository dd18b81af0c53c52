#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "jetdiff/cli.hpp"
#include "jetdiff/hypersurface.hpp"
#include "jetdiff/polyring.hpp"
#include "json.hpp"

namespace jetdiff {
namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, BoundText) {
  auto r = run({"bound", "-n", "3", "-k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bound: d >= 82"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("333162*d^4 - 21628710*d^3"), std::string::npos);
  EXPECT_NE(r.out.find("(N = 9)"), std::string::npos);
}

TEST(Cli, BoundJson) {
  auto r = run({"--format", "json", "bound", "-n", "2", "-k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bound"], 18);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["k"], 2);
}

TEST(Cli, GlobalOptionAfterSubcommand) {
  auto r = run({"bound", "-n", "2", "-k", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["bound"], 18);
}

TEST(Cli, BoundNone) {
  auto r = run({"bound", "-n", "2", "-k", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("bound: none"), std::string::npos);
  EXPECT_NE(r.out.find("-4*d^2 - 2*d"), std::string::npos);
  auto j = nlohmann::json::parse(run({"--format", "json", "bound", "-n", "2", "-k", "1"}).out);
  EXPECT_TRUE(j["bound"].is_null());
}

TEST(Cli, ClassRoundTrips) {
  auto r = run({"class", "-n", "3", "-k", "3"});
  ASSERT_EQ(r.code, 0);
  auto cls = Polynomial::parse(r.out);
  EXPECT_EQ(evaluate_degree(cls, 3).leading(), 333162);
}

TEST(Cli, TableText) {
  auto r = run({"table", "--max-n", "3", "--max-k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row2, row3;
  std::getline(lines, header);
  std::getline(lines, row2);
  std::getline(lines, row3);
  auto fields = [](const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string f; in >> f;) out.push_back(f);
    return out;
  };
  EXPECT_EQ(fields(row2), (std::vector<std::string>{"2", "-", "18", "16"}));
  EXPECT_EQ(fields(row3), (std::vector<std::string>{"3", "-", "-", "82"}));
}

TEST(Cli, TableJsonSchema) {
  auto r = run({"--format", "json", "table", "--max-n", "2", "--max-k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["max_n"], 2);
  EXPECT_EQ(j["max_k"], 3);
  ASSERT_EQ(j["cells"].size(), 3u);
  for (const auto& cell : j["cells"]) {
    for (const char* key : {"n", "k", "class", "poly_d", "bound", "N", "weights", "twist"})
      EXPECT_TRUE(cell.contains(key)) << key;
    auto cls = Polynomial::parse(cell["class"].get<std::string>());
    EXPECT_EQ(evaluate_degree(cls, 2), DegreePolynomial::from_json(cell["poly_d"]));
  }
  EXPECT_TRUE(j["cells"][0]["bound"].is_null());
  EXPECT_EQ(j["cells"][1]["bound"], 18);
}

TEST(Cli, ParallelTableMatchesSerial) {
  auto serial = run({"--format", "json", "table", "--max-n", "3", "--max-k", "3", "--parallel", "1"});
  auto parallel = run({"--format", "json", "table", "--max-n", "3", "--max-k", "3", "--parallel", "3"});
  ASSERT_EQ(serial.code, 0);
  EXPECT_EQ(serial.out, parallel.out);
}

TEST(Cli, Vanishing) {
  auto r = run({"--format", "json", "vanishing", "-n", "4", "-k", "3", "-m", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["all_vanish"].get<bool>());
  EXPECT_TRUE(j["violations"].empty());

  auto surface = run({"vanishing", "-n", "2", "-k", "2", "-m", "3"});
  ASSERT_EQ(surface.code, 0);
  EXPECT_NE(surface.out.find("all_vanish: false"), std::string::npos);
  EXPECT_NE(surface.out.find("(1,1) x1 from (1,1)"), std::string::npos) << surface.out;

  auto sym = nlohmann::json::parse(run({"--format", "json", "vanishing", "-n", "2", "-k", "1", "-m", "1"}).out);
  EXPECT_TRUE(sym["all_vanish"].get<bool>());
  EXPECT_EQ(sym["components"], 1);
}

TEST(Cli, VanishingAmbient) {
  auto r = run({"--format", "json", "vanishing", "-n", "4", "-k", "1", "-m", "6", "--ambient", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["N"], 6);
  EXPECT_EQ(run({"vanishing", "-n", "4", "-k", "1", "-m", "6", "--ambient", "4"}).code, 1);
}

TEST(Cli, Pieri) {
  auto r = run({"pieri", "1", "-m", "1", "-n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1 x (2)\n1 x (1,1)\n");
  EXPECT_EQ(run({"pieri", "(2,1)", "-m", "0", "-n", "3"}).out, "1 x (2,1)\n");
}

TEST(Cli, Graded) {
  auto r = run({"graded", "-k", "2", "-m", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(3,0) (1,1)\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"bound", "-n", "3"}).code, 1);
  EXPECT_EQ(run({"bound", "-n", "1", "-k", "2"}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "bound", "-n", "2", "-k", "2"}).code, 1);
  EXPECT_EQ(run({"pieri", "1,2", "-m", "1", "-n", "2"}).code, 1);
  EXPECT_EQ(run({"table", "--max-n", "1"}).code, 1);
}

TEST(Cli, CeilingGivesComputationExit) {
  auto r = run({"--max-terms", "50", "bound", "-n", "4", "-k", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  auto t = run({"--max-terms", "50", "table", "--max-n", "4", "--max-k", "4"});
  EXPECT_EQ(t.code, 2);
  EXPECT_NE(t.out.find("!"), std::string::npos);
}

TEST(Cli, CeilingFromEnvironment) {
  ::setenv(cli::kMaxTermsEnv, "50", 1);
  auto env_only = run({"bound", "-n", "4", "-k", "4"});
  auto flag_wins = run({"--max-terms", "100000000", "bound", "-n", "2", "-k", "2"});
  ::unsetenv(cli::kMaxTermsEnv);
  EXPECT_EQ(env_only.code, 2);
  EXPECT_EQ(flag_wins.code, 0);
}

TEST(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("vanishing"), std::string::npos);
}

}  // namespace
}  // namespace jetdiff
