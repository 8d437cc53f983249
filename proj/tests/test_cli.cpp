#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const char* path = std::getenv("MINUS_ONE_CLI_PATH");
  if (!path) path = "./minus-one";
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(path) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, ListCounts) {
  const auto all = nlohmann::json::parse(run("list --format json").out);
  EXPECT_EQ(all.size(), 21u);
  const auto scheme = nlohmann::json::parse(run("list --scheme-only --format json").out);
  EXPECT_EQ(scheme.size(), 15u);
}

TEST(Cli, TabulateHermite) {
  const CliRun r = run("tabulate --family hermite --n 3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_TRUE(j["rows"][0]["u"].is_null());
  EXPECT_EQ(j["rows"][1]["u"], "0.5");
  EXPECT_EQ(j["rows"][2]["u"], "1");
  EXPECT_EQ(j["rows"][3]["u"], "1.5");
}

TEST(Cli, TabulateChihara) {
  const CliRun r = run("tabulate --family chihara --params alpha=0.5,beta=1.5,gamma=0.25 --n 1 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"][1]["coefficients"][0], "-0.25");
  EXPECT_EQ(j["rows"][1]["coefficients"][1], "1");
}

TEST(Cli, TabulateComplementaryShowsImaginaryParts) {
  const CliRun r = run("tabulate --family ccbi --params a1=1/2,b1=1,a2=1,b2=1/2 --n 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("i"), std::string::npos);
  EXPECT_TRUE(r.out.find("+") != std::string::npos || r.out.find("-") != std::string::npos);
}

TEST(Cli, Evaluate) {
  const CliRun r = run("evaluate --family hermite --n 2 --x 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.5\n");
}

TEST(Cli, VerifyHermitePasses) {
  const CliRun r = run("verify --family hermite");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
}

TEST(Cli, VerifyEdgeShowsLadder) {
  const CliRun r = run("verify --edge cbi:big-minus1-jacobi");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order"), std::string::npos);
  EXPECT_NE(r.out.find("errors"), std::string::npos);
}

TEST(Cli, JsonReportShape) {
  const CliRun r = run("verify --family gegenbauer --checks eigen --format json --no-timestamp");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_FALSE(j["config"].contains("timestamp"));
  ASSERT_FALSE(j["results"].empty());
  for (const auto& row : j["results"]) {
    for (const char* key : {"id", "check", "status", "residual", "tolerance", "anchor", "notes"}) {
      EXPECT_TRUE(row.contains(key)) << key;
    }
  }
}

TEST(Cli, ReportIsDeterministic) {
  const std::string args = "verify --family sbi --checks closed-form,eigen --format json --no-timestamp";
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "minus_one_report.json";
  ASSERT_EQ(run("verify --family hermite --checks favard --format json --output " + path).code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_TRUE(j["config"].contains("timestamp"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("verify --family laguerre").code, 3);
  EXPECT_EQ(run("verify --edge hermite:cbi").code, 3);
  EXPECT_EQ(run("verify --family hermite --digits 10").code, 3);
  EXPECT_EQ(run("verify --family hermite --checks spectra").code, 3);
  EXPECT_EQ(run("verify").code, 3);
  EXPECT_EQ(run("tabulate --family hermite --params alpha=1").code, 3);
  EXPECT_EQ(run("frobnicate").code, 3);
}

TEST(Cli, DigitsEnvironmentAndFlag) {
  EXPECT_EQ(run("verify --family hermite --checks eigen", "MINUS_ONE_DIGITS=12").code, 3);
  EXPECT_EQ(run("verify --family hermite --checks eigen --digits 30", "MINUS_ONE_DIGITS=12").code, 0);
  const auto j = nlohmann::json::parse(
      run("verify --family hermite --checks eigen --format json --no-timestamp", "MINUS_ONE_DIGITS=40").out);
  EXPECT_EQ(j["config"]["digits"], 40);
}

TEST(Cli, InadmissibleParametersFail) {
  EXPECT_EQ(run("verify --family gg --checks favard --params alpha=-2,beta=1").code, 1);
}

TEST(Cli, ExportDot) {
  const CliRun r = run("export --format dot");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  int nodes = 0;
  for (std::string line; std::getline(in, line);) {
    if (std::regex_search(line, std::regex(R"(^\s*"[a-z0-9-]+" \[label=)"))) ++nodes;
  }
  EXPECT_EQ(nodes, 15);
  EXPECT_EQ(count(r.out, "digraph"), 1);
}

TEST(Cli, ExportJsonMatchesVerifyAll) {
  const auto j = nlohmann::json::parse(run("export --format json").out);
  EXPECT_EQ(j["edges"].size(), 33u);
  for (const auto& e : j["edges"]) EXPECT_TRUE(e.contains("anchor"));
  const auto all = nlohmann::json::parse(run("verify --all --format json --no-timestamp").out);
  EXPECT_EQ(all["config"]["edges"], j["edges"].size());
}
